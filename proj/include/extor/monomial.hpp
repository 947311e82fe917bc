#pragma once

#include <string>
#include <vector>

#include "extor/error.hpp"

namespace extor {

// Exponent vector of fixed length (= number of ring variables).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    std::size_t nvars() const { return e_.size(); }
    int exponent(std::size_t i) const { return e_[i]; }
    int degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide_by(const Monomial& o) const;  // pre: o.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    const std::vector<int>& exponents() const { return e_; }

private:
    std::vector<int> e_;
};

enum class OrderKind { Lex, GrevLex, Elimination };

// Total multiplicative monomial order with 1 minimal.  Elimination(k) compares
// the first k variables grevlex first, then the rest grevlex.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int elim_block = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder elimination(int block) { return {OrderKind::Elimination, block}; }

    // <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;
    std::string name() const;
};

MonomialOrder order_from_name(const std::string& name);  // "lex" | "grevlex"

}  // namespace extor
