#pragma once

#include <optional>
#include <vector>

#include "extor/polynomial.hpp"

namespace extor {

// Element of a free module R^rank, stored as one polynomial per coordinate.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(RingPtr ring, std::size_t rank);
    ModuleElement(RingPtr ring, std::vector<Polynomial> coords);

    static ModuleElement unit(RingPtr ring, std::size_t rank, std::size_t position);
    static ModuleElement from_polynomial(Polynomial p);  // rank-1 wrapper

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return coords_.size(); }
    const Polynomial& coord(std::size_t i) const { return coords_[i]; }
    const std::vector<Polynomial>& coords() const { return coords_; }
    bool is_zero() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    ModuleElement scaled(const Scalar& c) const;
    ModuleElement times(const Polynomial& p) const;
    ModuleElement times_term(const Monomial& m, const Scalar& c) const;

    bool operator==(const ModuleElement& o) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> coords_;
};

// Leading term of a module element: position + monomial + coefficient.
struct ModuleTerm {
    std::size_t position = 0;
    Monomial mon;
    Scalar coeff;
};

// Position-over-term order on free modules: any term in an earlier coordinate
// beats every term in a later one (e_0 > e_1 > ...); ties compare monomials
// under `ord`.
struct ModuleOrder {
    MonomialOrder ord;

    // <0 / 0 / >0 comparing (pos_a, mon_a) against (pos_b, mon_b).
    int compare(std::size_t pos_a, const Monomial& ma, std::size_t pos_b,
                const Monomial& mb) const {
        if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;
        return ord.compare(ma, mb);
    }
};

// Order-maximal term of v under POT(ord); throws on zero.
ModuleTerm leading_module_term(const ModuleElement& v, const ModuleOrder& mord);

// Total degree bookkeeping: the degree of a homogeneous element of the shifted
// free module ⊕ R(-shift_i), or nullopt if v is zero or inhomogeneous.
std::optional<int> element_degree(const ModuleElement& v, const std::vector<int>& shifts);

}  // namespace extor
