#pragma once

#include <gmpxx.h>

#include <string>

#include "extor/error.hpp"

namespace extor {

// Coefficient field: the rationals (p == 0) or the prime field F_p.
struct FieldDesc {
    unsigned long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldDesc&) const = default;
    std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

FieldDesc field_Q();
FieldDesc field_Fp(unsigned long p);  // throws ArgumentError unless p is prime

// Immutable field element.  Rationals are canonical (lowest terms, positive
// denominator, GMP invariant); F_p residues live in [0, p).
class Scalar {
public:
    Scalar() = default;  // zero over Q

    static Scalar zero(const FieldDesc& f);
    static Scalar one(const FieldDesc& f);
    static Scalar from_long(long n, const FieldDesc& f);
    // n/d in the field; over F_p requires gcd(d, p) = 1.
    static Scalar from_fraction(const mpz_class& n, const mpz_class& d, const FieldDesc& f);
    static Scalar from_rational(mpq_class q);

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws ArgumentError on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Over Q only.
    const mpq_class& rational() const;
    // Over F_p only.
    unsigned long residue() const;

    std::string str() const;

private:
    FieldDesc field_;
    mpq_class q_;             // value when rational
    unsigned long r_ = 0;     // residue when prime field

    void check_same_field(const Scalar& o) const;
};

}  // namespace extor
