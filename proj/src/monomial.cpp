#include "extor/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace extor {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int e : e_)
        if (e < 0) throw ArgumentError("negative exponent in monomial");
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw ArgumentError("monomial arity mismatch");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    if (!o.divides(*this)) throw ArgumentError("monomial division not exact");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw ArgumentError("monomial arity mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw ArgumentError("monomial arity mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

namespace {

int cmp_lex(const std::vector<int>& a, const std::vector<int>& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// Graded reverse lexicographic on the index window [lo, hi).
int cmp_grevlex(const std::vector<int>& a, const std::vector<int>& b, std::size_t lo,
                std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller trailing exponent wins
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (ea.size() != eb.size()) throw ArgumentError("monomial arity mismatch");
    std::size_t n = ea.size();
    switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(ea, eb, 0, n);
        case OrderKind::GrevLex:
            return cmp_grevlex(ea, eb, 0, n);
        case OrderKind::Elimination: {
            std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(elim_block), n);
            if (int c = cmp_grevlex(ea, eb, 0, k)) return c;
            return cmp_grevlex(ea, eb, k, n);
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case OrderKind::Lex:
            return "lex";
        case OrderKind::GrevLex:
            return "grevlex";
        case OrderKind::Elimination:
            return "elim" + std::to_string(elim_block);
    }
    return "?";
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grevlex") return MonomialOrder::grevlex();
    throw ArgumentError("unknown monomial order '" + name + "' (expected lex or grevlex)");
}

}  // namespace extor
