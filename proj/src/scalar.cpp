#include "extor/scalar.hpp"

namespace extor {

namespace {

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long invmod(unsigned long a, unsigned long p) {
    if (a == 0) throw ArgumentError("inverse of zero in F_" + std::to_string(p));
    mpz_class r, az(static_cast<unsigned long>(a)), pz(p);
    if (mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw ArgumentError("element not invertible mod " + std::to_string(p));
    return r.get_ui();
}

}  // namespace

FieldDesc field_Q() { return FieldDesc{0}; }

FieldDesc field_Fp(unsigned long p) {
    mpz_class pz(p);
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 32) == 0)
        throw ArgumentError("modulus " + std::to_string(p) + " is not prime");
    return FieldDesc{p};
}

Scalar Scalar::zero(const FieldDesc& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldDesc& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational())
        s.q_ = 1;
    else
        s.r_ = 1 % f.p;
    return s;
}

Scalar Scalar::from_long(long n, const FieldDesc& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.q_ = n;
    } else {
        long m = n % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.r_ = static_cast<unsigned long>(m);
    }
    return s;
}

Scalar Scalar::from_fraction(const mpz_class& n, const mpz_class& d, const FieldDesc& f) {
    if (d == 0) throw ArgumentError("zero denominator");
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.q_ = mpq_class(n, d);
        s.q_.canonicalize();
    } else {
        mpz_class pz(f.p);
        mpz_class dm = d % pz;
        if (dm < 0) dm += pz;
        if (dm == 0)
            throw ArgumentError("coefficient not representable in F_" + std::to_string(f.p) +
                                ": denominator divisible by the modulus");
        mpz_class nm = n % pz;
        if (nm < 0) nm += pz;
        s.r_ = mulmod(nm.get_ui(), invmod(dm.get_ui(), f.p), f.p);
    }
    return s;
}

Scalar Scalar::from_rational(mpq_class q) {
    Scalar s;
    s.field_ = field_Q();
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p; }

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw ArgumentError("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = q_ + o.q_;
    else {
        unsigned long v = r_ + o.r_;
        s.r_ = v >= field_.p ? v - field_.p : v;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.p - o.r_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = mulmod(r_, o.r_, field_.p);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArgumentError("inverse of zero");
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = invmod(r_, field_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw ArgumentError("not a rational scalar");
    return q_;
}

unsigned long Scalar::residue() const {
    if (field_.is_rational()) throw ArgumentError("not a prime-field scalar");
    return r_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace extor
