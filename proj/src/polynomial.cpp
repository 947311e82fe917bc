#include "extor/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace extor {

Polynomial Polynomial::zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    Polynomial p;
    p.ring_ = std::move(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::from_long(RingPtr ring, long n) {
    Scalar c = Scalar::from_long(n, ring->field);
    return constant(std::move(ring), std::move(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
    if (var >= ring->nvars()) throw ArgumentError("variable index out of range");
    std::vector<int> e(ring->nvars(), 0);
    e[var] = 1;
    Scalar c = Scalar::one(ring->field);
    return term(std::move(ring), Monomial(std::move(e)), std::move(c));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Scalar c) {
    if (m.nvars() != ring->nvars()) throw ArgumentError("monomial arity mismatch");
    Polynomial p;
    p.ring_ = std::move(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p;
    p.ring_ = std::move(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    const MonomialOrder& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mon, b.mon); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mon == t.mon)
            out.back().coeff = out.back().coeff + t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mon.degree();
    for (const auto& t : terms_)
        if (t.mon.degree() != d) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mon.is_one());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const MonomialOrder& ord = ring_->order;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0)
            out.push_back(terms_[i++]);
        else if (c < 0)
            out.push_back(o.terms_[j++]);
        else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mon, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial p;
    p.ring_ = ring_;
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mon, -t.coeff});
    return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial p;
    p.ring_ = ring_;
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mon, t.coeff * c});
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mon * m, t.coeff});
    // multiplying by a fixed monomial preserves the term order
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial acc = Polynomial::zero(ring_);
    if (terms_.empty() || o.terms_.empty()) return acc;
    // accumulate partial products; quadratic but exact and fine at this scale
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) all.push_back({a.mon * b.mon, a.coeff * b.coeff});
    return from_terms(ring_, std::move(all));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_ && (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw ArgumentError("leading term of the zero polynomial");
    if (ord == ring_->order) return terms_.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.greater(terms_[i].mon, terms_[best].mon)) best = i;
    return terms_[best];
}

const Term& Polynomial::leading_term() const { return leading_term(ring_->order); }

Scalar Polynomial::constant_coefficient() const {
    for (const auto& t : terms_)
        if (t.mon.is_one()) return t.coeff;
    return Scalar::zero(ring_->field);
}

// ---------------------------------------------------------------------------
// printing

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.coeff.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string abs = neg ? cs.substr(1) : cs;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mon;
        for (std::size_t i = 0; i < t.mon.nvars(); ++i) {
            int e = t.mon.exponent(i);
            if (e == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += ring_->vars[i];
            if (e > 1) mon += "^" + std::to_string(e);
        }
        if (mon.empty())
            out += abs;
        else if (abs == "1")
            out += mon;
        else
            out += abs + "*" + mon;
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
    const std::string& text;
    const RingPtr& ring;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    mpz_class parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return mpz_class(text.substr(start, pos - start));
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            bool neg = accept('-');
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected a number after '-'");
            mpz_class num = parse_uint();
            mpz_class den = 1;
            if (accept('/')) den = parse_uint();
            if (den == 0) fail("zero denominator");
            if (neg) num = -num;
            return Polynomial::constant(ring, Scalar::from_fraction(num, den, ring->field));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos;
            std::string name = parse_ident();
            int idx = ring->var_index(name);
            if (idx < 0) {
                pos = at;
                fail("unknown variable '" + name + "'");
            }
            int exp = 1;
            if (accept('^')) {
                mpz_class e = parse_uint();
                if (!e.fits_sint_p()) fail("exponent too large");
                exp = static_cast<int>(e.get_si());
            }
            std::vector<int> es(ring->nvars(), 0);
            es[static_cast<std::size_t>(idx)] = exp;
            return Polynomial::term(ring, Monomial(std::move(es)), Scalar::one(ring->field));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept('*')) p = p * parse_factor();
        return p;
    }

    Polynomial parse_expr() {
        bool neg = accept('-');
        Polynomial p = parse_term();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            if (accept('+'))
                p = p + parse_term();
            else if (accept('-'))
                p = p - parse_term();
            else
                break;
        }
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return p;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Parser p{text, ring};
    return p.parse_expr();
}

}  // namespace extor
