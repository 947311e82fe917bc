#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extor/ring.hpp"

namespace extor {

struct Term {
    Monomial mon;
    Scalar coeff;
};

// Sparse multivariate polynomial.  Terms are kept sorted descending by the
// ring's default order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial from_long(RingPtr ring, long n);
    static Polynomial variable(RingPtr ring, std::size_t var);
    static Polynomial term(RingPtr ring, Monomial m, Scalar c);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);  // any order, merges

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Max total degree among terms; 0 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;  // vacuously true for 0
    bool is_constant() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Order-maximal term under `ord`; throws on the zero polynomial.
    const Term& leading_term(const MonomialOrder& ord) const;
    const Term& leading_term() const;  // ring default order

    Scalar constant_coefficient() const;  // coefficient of 1

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();  // sort desc by default order, merge, drop zeros
};

// Parses the grammar
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := coeff | var ("^" uint)?
//   coeff  := ["-"] uint ("/" uint)?
// with whitespace ignored.  Throws ParseError with a position on bad input.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace extor
