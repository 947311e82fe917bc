#include <doctest.h>

#include "extor/corpus.hpp"
#include "extor/polynomial.hpp"

using namespace extor;

namespace {

RingPtr qxy() { return make_ring(field_Q(), {"x", "y"}); }

}  // namespace

TEST_CASE("scalar canonical form") {
    Scalar half = Scalar::from_fraction(2, 4, field_Q());
    CHECK(half.rational().get_num() == 1);
    CHECK(half.rational().get_den() == 2);
    Scalar neg = Scalar::from_fraction(3, -6, field_Q());
    CHECK(neg.rational().get_num() == -1);
    CHECK(neg.rational().get_den() == 2);

    FieldDesc f5 = field_Fp(5);
    CHECK(Scalar::from_long(-3, f5).residue() == 2);
    CHECK((Scalar::from_long(2, f5) * Scalar::from_long(3, f5)).residue() == 1);
    CHECK(Scalar::from_long(2, f5).inverse().residue() == 3);
    CHECK_THROWS_AS(field_Fp(4), ArgumentError);
    CHECK_THROWS_AS(Scalar::from_fraction(1, 5, f5), ArgumentError);  // 1/p over F_p
}

TEST_CASE("ring construction validates names and modulus") {
    CHECK_THROWS_AS(make_ring(field_Q(), {"x", "x"}), ArgumentError);
    CHECK_THROWS_AS(make_ring(field_Q(), {""}), ArgumentError);
    CHECK_THROWS_AS(make_ring(FieldDesc{6}, {"x"}), ArgumentError);
}

TEST_CASE("parse examples") {
    auto R = qxy();
    Polynomial f = parse_polynomial("x^2*y - 3*y + 1", R);
    CHECK(f.term_count() == 3);
    CHECK(f.str() == "x^2*y - 3*y + 1");

    CHECK(parse_polynomial("x - x", R).is_zero());
    CHECK(parse_polynomial("2/4*x", R) == parse_polynomial("1/2*x", R));
    CHECK(parse_polynomial("-x + y", R).str() == "-x + y");
}

TEST_CASE("parse errors carry a position") {
    auto R = qxy();
    CHECK_THROWS_AS(parse_polynomial("x + ", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x ^^ 2", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x y", R), ParseError);  // implicit product
    try {
        parse_polynomial("x + q", R);
        FAIL("expected an unknown-variable error");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    // coefficient not representable in the field
    auto R7 = make_ring(field_Fp(7), {"x"});
    CHECK_THROWS_AS(parse_polynomial("1/7*x", R7), ArgumentError);
    CHECK(parse_polynomial("1/2*x", R7).leading_term().coeff.residue() == 4);  // 2*4 = 1 mod 7
}

TEST_CASE("leading terms under the three orders") {
    auto R = qxy();
    Polynomial f = parse_polynomial("x + y^2", R);
    auto lt_grevlex = f.leading_term(MonomialOrder::grevlex());
    CHECK(lt_grevlex.mon.exponents() == std::vector<int>{0, 2});
    auto lt_lex = f.leading_term(MonomialOrder::lex());
    CHECK(lt_lex.mon.exponents() == std::vector<int>{1, 0});

    Polynomial c = parse_polynomial("5", R);
    auto lt_c = c.leading_term();
    CHECK(lt_c.mon.is_one());
    CHECK(lt_c.coeff == Scalar::from_long(5, field_Q()));

    CHECK_THROWS_AS(Polynomial::zero(R).leading_term(), ArgumentError);
}

TEST_CASE("arithmetic examples") {
    auto R = qxy();
    Polynomial x = parse_polynomial("x", R), y = parse_polynomial("y", R);
    CHECK((x + y) * (x - y) == parse_polynomial("x^2 - y^2", R));
    Polynomial f = parse_polynomial("x^3 - 2*x*y + 7", R);
    CHECK(f + Polynomial::zero(R) == f);

    auto R2 = make_ring(field_Fp(2), {"x", "y"});
    Polynomial s = parse_polynomial("x + y", R2);
    CHECK(s * s == parse_polynomial("x^2 + y^2", R2));

    auto other = make_ring(field_Q(), {"a"});
    CHECK_THROWS_AS(x + parse_polynomial("a", other), ArgumentError);
}

TEST_CASE("ring axioms on random triples") {
    auto R = make_ring(field_Q(), {"x", "y", "z", "w"});
    Rng rng(101);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = random_polynomial(R, rng, 4, 3, false);
        Polynomial g = random_polynomial(R, rng, 4, 3, false);
        Polynomial h = random_polynomial(R, rng, 4, 3, false);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("leading term is multiplicative") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    Rng rng(202);
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(),
                                      MonomialOrder::elimination(1)};
    for (int i = 0; i < 40; ++i) {
        Polynomial f = random_polynomial(R, rng, 5, 4, false);
        Polynomial g = random_polynomial(R, rng, 5, 4, false);
        if (f.is_zero() || g.is_zero()) continue;
        for (const auto& ord : orders) {
            auto lf = f.leading_term(ord);
            auto lg = g.leading_term(ord);
            auto lfg = (f * g).leading_term(ord);
            CHECK(lfg.mon == lf.mon * lg.mon);
            CHECK(lfg.coeff == lf.coeff * lg.coeff);
        }
    }
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
    Rng rng(303);
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(),
                                      MonomialOrder::elimination(2)};
    auto random_monomial = [&](int maxdeg) {
        std::vector<int> e(3, 0);
        int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg + 1)));
        for (int i = 0; i < d; ++i) ++e[rng.below(3)];
        return Monomial(e);
    };
    Monomial one(3);
    for (int i = 0; i < 80; ++i) {
        Monomial a = random_monomial(5), b = random_monomial(5), c = random_monomial(4);
        for (const auto& ord : orders) {
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            if (ab == 0) CHECK(a == b);                        // total order
            if (ab < 0) CHECK(ord.compare(a * c, b * c) < 0);  // multiplicative
            if (!(a == one)) CHECK(ord.compare(one, a) < 0);   // 1 minimal
        }
    }
}

TEST_CASE("print-parse round trip on 200 random polynomials") {
    auto R = make_ring(field_Q(), {"x", "y", "z", "w"});
    Rng rng(404);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_polynomial(R, rng, 6, 5, false);
        CHECK(parse_polynomial(f.str(), R) == f);
    }
    auto R7 = make_ring(field_Fp(7), {"x", "y"});
    Rng rng7(405);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = random_polynomial(R7, rng7, 5, 4, false);
        CHECK(parse_polynomial(f.str(), R7) == f);
    }
}

TEST_CASE("homogeneity bookkeeping") {
    auto R = qxy();
    CHECK(parse_polynomial("x^2 + x*y", R).is_homogeneous());
    CHECK_FALSE(parse_polynomial("x^2 + y", R).is_homogeneous());
    CHECK(Polynomial::zero(R).is_homogeneous());
    CHECK(parse_polynomial("x^2 + y", R).degree() == 2);
}
