#include "extor/module_element.hpp"

namespace extor {

ModuleElement::ModuleElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
    coords_.assign(rank, Polynomial::zero(ring_));
}

ModuleElement::ModuleElement(RingPtr ring, std::vector<Polynomial> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (!c.is_zero()) check_same_ring(ring_, c.ring());
}

ModuleElement ModuleElement::unit(RingPtr ring, std::size_t rank, std::size_t position) {
    ModuleElement v(ring, rank);
    if (position >= rank) throw ArgumentError("unit position out of range");
    v.coords_[position] = Polynomial::from_long(ring, 1);
    return v;
}

ModuleElement ModuleElement::from_polynomial(Polynomial p) {
    ModuleElement v;
    v.ring_ = p.ring();
    v.coords_.push_back(std::move(p));
    return v;
}

bool ModuleElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    check_same_ring(ring_, o.ring_);
    if (rank() != o.rank()) throw ArgumentError("module rank mismatch");
    ModuleElement v;
    v.ring_ = ring_;
    v.coords_.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) v.coords_.push_back(coords_[i] + o.coords_[i]);
    return v;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const { return *this + (-o); }

ModuleElement ModuleElement::operator-() const {
    ModuleElement v;
    v.ring_ = ring_;
    v.coords_.reserve(rank());
    for (const auto& c : coords_) v.coords_.push_back(-c);
    return v;
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
    ModuleElement v;
    v.ring_ = ring_;
    v.coords_.reserve(rank());
    for (const auto& p : coords_) v.coords_.push_back(p.scaled(c));
    return v;
}

ModuleElement ModuleElement::times(const Polynomial& p) const {
    ModuleElement v;
    v.ring_ = ring_;
    v.coords_.reserve(rank());
    for (const auto& c : coords_) v.coords_.push_back(c * p);
    return v;
}

ModuleElement ModuleElement::times_term(const Monomial& m, const Scalar& c) const {
    ModuleElement v;
    v.ring_ = ring_;
    v.coords_.reserve(rank());
    for (const auto& p : coords_) v.coords_.push_back(p.times_monomial(m).scaled(c));
    return v;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    if (rank() != o.rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (!(coords_[i] == o.coords_[i])) return false;
    return true;
}

std::string ModuleElement::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ", ";
        out += coords_[i].str();
    }
    return out + ")";
}

ModuleTerm leading_module_term(const ModuleElement& v, const ModuleOrder& mord) {
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (!v.coord(i).is_zero()) {
            const Term& t = v.coord(i).leading_term(mord.ord);
            return ModuleTerm{i, t.mon, t.coeff};
        }
    }
    throw ArgumentError("leading term of the zero module element");
}

std::optional<int> element_degree(const ModuleElement& v, const std::vector<int>& shifts) {
    if (v.rank() != shifts.size()) return std::nullopt;
    std::optional<int> deg;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        const Polynomial& p = v.coord(i);
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return std::nullopt;
        int d = p.degree() + shifts[i];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

}  // namespace extor
