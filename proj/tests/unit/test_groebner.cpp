#include <doctest.h>

#include <algorithm>

#include "extor/corpus.hpp"
#include "extor/groebner.hpp"

using namespace extor;

namespace {

RingPtr qxy(MonomialOrder ord = MonomialOrder::grevlex()) {
    return make_ring(field_Q(), {"x", "y"}, ord);
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

// evaluates Σ syz_i * gens_i, which must vanish exactly
bool syzygy_evaluates_to_zero(const ModuleElement& syz, const std::vector<Polynomial>& gens,
                              const RingPtr& ring) {
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + syz.coord(i) * gens[i];
    return acc.is_zero();
}

}  // namespace

TEST_CASE("normal form examples") {
    auto R = qxy();
    auto gb_x = buchberger({P(R, "x")}, R, R->order);
    CHECK(normal_form(P(R, "x^2 + y"), gb_x) == P(R, "y"));

    auto gb_g = buchberger({P(R, "x^2 - y")}, R, R->order);
    CHECK(normal_form(P(R, "x^2 - y"), gb_g).is_zero());

    auto Rlex = qxy(MonomialOrder::lex());
    auto gb = buchberger({P(Rlex, "x - y")}, Rlex, Rlex->order);
    CHECK(normal_form(P(Rlex, "x*y"), gb) == P(Rlex, "y^2"));  // xy = y(x-y) + y^2
}

TEST_CASE("buchberger examples") {
    auto R = qxy();
    auto gb = buchberger({P(R, "x"), P(R, "y")}, R, R->order);
    REQUIRE(gb.size() == 2);
    CHECK(gb.generators()[0].coord(0) == P(R, "x"));
    CHECK(gb.generators()[1].coord(0) == P(R, "y"));

    auto Rlex = qxy(MonomialOrder::lex());
    auto gb2 = buchberger({P(Rlex, "x*y - 1"), P(Rlex, "y^2 - 1")}, Rlex, Rlex->order);
    REQUIRE(gb2.size() == 2);
    CHECK(gb2.generators()[0].coord(0) == P(Rlex, "x - y"));
    CHECK(gb2.generators()[1].coord(0) == P(Rlex, "y^2 - 1"));

    auto gb3 = buchberger({P(R, "x^2")}, R, R->order);
    REQUIRE(gb3.size() == 1);
    CHECK(gb3.generators()[0].coord(0) == P(R, "x^2"));
}

TEST_CASE("reduced basis is canonical and certified") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    Rng rng(811);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        int n = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < n; ++i) gens.push_back(random_polynomial(R, rng, 3, 3, false));
        auto gb = buchberger(gens, R, R->order);

        // permuting the input leaves the reduced basis identical
        std::vector<Polynomial> shuffled = gens;
        std::reverse(shuffled.begin(), shuffled.end());
        auto gb2 = buchberger(shuffled, R, R->order);
        REQUIRE(gb.size() == gb2.size());
        for (std::size_t i = 0; i < gb.size(); ++i)
            CHECK(gb.generators()[i] == gb2.generators()[i]);

        // every S-pair reduces to zero
        CHECK(buchberger_criterion_holds(gb));

        // every input reduces to zero against the basis
        for (const auto& g : gens)
            CHECK(normal_form(g, gb).is_zero());

        // every basis element is a recorded combination of the inputs
        const auto& reps = gb.input_representations();
        for (std::size_t k = 0; k < gb.size(); ++k) {
            Polynomial acc = Polynomial::zero(R);
            for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + reps[k][i] * gens[i];
            CHECK(acc == gb.generators()[k].coord(0));
        }

        // basis is auto-reduced: no lead divides any term of another element
        ModuleOrder mord = gb.module_order();
        for (std::size_t a = 0; a < gb.size(); ++a) {
            ModuleTerm lt = leading_module_term(gb.generators()[a], mord);
            CHECK(lt.coeff.is_one());
            for (std::size_t b = 0; b < gb.size(); ++b) {
                if (a == b) continue;
                for (const auto& t : gb.generators()[b].coord(0).terms())
                    CHECK_FALSE(lt.mon.divides(t.mon));
            }
        }
    }
}

TEST_CASE("module groebner bases over a rank-2 free module") {
    auto R = qxy();
    // the two Koszul differential columns of K(x,y) inside R^2 ⊃ im d_2
    ModuleElement c1(R, {P(R, "x"), P(R, "y")});
    ModuleElement c2(R, {P(R, "-y^2"), P(R, "x*y")});
    auto gb = buchberger({c1, c2}, 2, R, R->order);
    CHECK(buchberger_criterion_holds(gb));
    for (const auto& v : {c1, c2}) CHECK(normal_form(v, gb).is_zero());
}

TEST_CASE("syzygy examples") {
    auto R = qxy();
    auto x = P(R, "x"), y = P(R, "y");

    auto syz = syzygies({x, y}, R, R->order);
    REQUIRE(syz.size() == 1);
    CHECK(syz[0] == ModuleElement(R, {y, -x}));

    auto syz2 = syzygies({x, x}, R, R->order);
    bool found = false;
    for (const auto& s : syz2)
        if (s == ModuleElement(R, {P(R, "1"), P(R, "-1")}) ||
            s == ModuleElement(R, {P(R, "-1"), P(R, "1")}))
            found = true;
    CHECK(found);

    CHECK(syzygies({P(R, "x^2 - y")}, R, R->order).empty());
}

TEST_CASE("syzygies evaluate to zero on random generator lists") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    Rng rng(912);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        int n = 2 + static_cast<int>(rng.below(3));
        for (int i = 0; i < n; ++i) gens.push_back(random_polynomial(R, rng, 3, 2, true));
        auto syz = syzygies(gens, R, R->order);
        for (const auto& s : syz) CHECK(syzygy_evaluates_to_zero(s, gens, R));
        // Koszul relations g_j e_i - g_i e_j are in the computed span
        std::vector<ModuleElement> wrapped;
        for (const auto& g : gens) wrapped.push_back(ModuleElement::from_polynomial(g));
        if (!syz.empty()) {
            auto gb = buchberger(syz, gens.size(), R, R->order);
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (std::size_t j = i + 1; j < gens.size(); ++j) {
                    std::vector<Polynomial> coords(gens.size(), Polynomial::zero(R));
                    coords[i] = gens[j];
                    coords[j] = -gens[i];
                    CHECK(normal_form(ModuleElement(R, coords), gb).is_zero());
                }
        }
    }
}

TEST_CASE("lift_through recovers membership witnesses") {
    auto R = qxy();
    std::vector<ModuleElement> gens{ModuleElement::from_polynomial(P(R, "x - y")),
                                    ModuleElement::from_polynomial(P(R, "2*y"))};
    auto lifted = lift_through(ModuleElement::from_polynomial(P(R, "x + y")), gens, 1, R, R->order);
    REQUIRE(lifted.has_value());
    Polynomial acc = (*lifted)[0] * P(R, "x - y") + (*lifted)[1] * P(R, "2*y");
    CHECK(acc == P(R, "x + y"));

    CHECK_FALSE(lift_through(ModuleElement::from_polynomial(P(R, "1")), gens, 1, R, R->order));
}

TEST_CASE("membership examples") {
    auto R = qxy();
    Ideal ix(R, {P(R, "x")});
    CHECK(membership(P(R, "x^2"), ix));

    Ideal ixy(R, {P(R, "x"), P(R, "y")});
    CHECK_FALSE(membership(P(R, "1"), ixy));

    Ideal mix(R, {P(R, "x - y"), P(R, "2*y")});
    CHECK(membership(P(R, "x + y"), mix));
}

TEST_CASE("krull dimension examples") {
    auto R = qxy();
    CHECK(Ideal(R, {P(R, "x")}).krull_dimension() == 1);
    CHECK(Ideal(R, {P(R, "x"), P(R, "y")}).krull_dimension() == 0);
    CHECK(Ideal(R, {P(R, "x*y")}).krull_dimension() == 1);
    CHECK(Ideal(R, {P(R, "1")}).krull_dimension() == -1);   // unit ideal sentinel
    CHECK(Ideal(R, {}).krull_dimension() == 2);             // zero ideal
}

TEST_CASE("height examples") {
    auto R = qxy();
    CHECK(Ideal(R, {P(R, "x"), P(R, "y")}).height() == 2);
    CHECK(Ideal(R, {P(R, "x")}).height() == 1);
    auto R3 = make_ring(field_Q(), {"x", "y", "z"});
    CHECK(Ideal(R3, {P(R3, "x*y"), P(R3, "x*z")}).height() == 1);
    CHECK_THROWS_AS(Ideal(R, {P(R, "1")}).height(), ArgumentError);
}

TEST_CASE("height + dimension = nvars on random proper ideals") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    Rng rng(555);
    int tested = 0;
    while (tested < 20) {
        std::vector<Polynomial> gens;
        int n = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < n; ++i) gens.push_back(random_polynomial(R, rng, 3, 2, true));
        Ideal ideal(R, gens);
        if (ideal.is_unit()) continue;
        CHECK(ideal.height() + ideal.krull_dimension() == 3);
        ++tested;
    }
}

TEST_CASE("dimension is order independent on 50 random homogeneous ideals") {
    auto corpus = random_form_sequences(777, 50, 3, 3, 3);
    for (const auto& inst : corpus) {
        Ideal ideal(inst.ring, inst.polys);
        int dim_grevlex = ideal.krull_dimension();
        RingPtr lex_ring = with_order(inst.ring, MonomialOrder::lex());
        std::vector<Polynomial> lex_polys;
        for (const auto& p : inst.polys) lex_polys.push_back(parse_polynomial(p.str(), lex_ring));
        CHECK(dim_grevlex == Ideal(lex_ring, lex_polys).krull_dimension());
    }
}

TEST_CASE("benchmark ideals: cyclic-3 and katsura-3") {
    auto bench = [](RingPtr R, const std::vector<std::string>& gens, std::size_t basis_size,
                    int dim) {
        std::vector<Polynomial> ps;
        for (const auto& g : gens) ps.push_back(parse_polynomial(g, R));
        Ideal ideal(R, ps);
        const GroebnerBasis& gb = ideal.groebner();
        CHECK(gb.size() == basis_size);
        CHECK(ideal.krull_dimension() == dim);
        CHECK(buchberger_criterion_holds(gb));
        for (const auto& p : ps) CHECK(normal_form(p, gb).is_zero());
    };
    std::vector<std::string> cyclic3{"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"};
    bench(make_ring(field_Q(), {"x", "y", "z"}), cyclic3, 3, 0);
    bench(make_ring(field_Q(), {"x", "y", "z"}, MonomialOrder::lex()), cyclic3, 3, 0);
    std::vector<std::string> katsura3{"u0 + 2*u1 + 2*u2 + 2*u3 - 1",
                                      "u0^2 + 2*u1^2 + 2*u2^2 + 2*u3^2 - u0",
                                      "2*u0*u1 + 2*u1*u2 + 2*u2*u3 - u1",
                                      "u1^2 + 2*u0*u2 + 2*u1*u3 - u2"};
    bench(make_ring(field_Q(), {"u0", "u1", "u2", "u3"}), katsura3, 7, 0);
}

TEST_CASE("elimination order projects onto the tail variables") {
    auto R = make_ring(field_Q(), {"x", "y"}, MonomialOrder::elimination(1));
    auto gb = buchberger({P(R, "x*y - 1"), P(R, "y^2 - 1")}, R, R->order);
    // the basis elements free of x generate the elimination ideal; y^2 - 1
    // must appear among them
    bool found = false;
    for (const auto& g : gb.generators()) {
        bool uses_x = false;
        for (const auto& t : g.coord(0).terms()) uses_x = uses_x || t.mon.exponent(0) > 0;
        if (!uses_x && g.coord(0) == P(R, "y^2 - 1")) found = true;
    }
    CHECK(found);
}

TEST_CASE("ideal equality and products") {
    auto R = qxy();
    Ideal a(R, {P(R, "x - y"), P(R, "2*y")});
    Ideal b(R, {P(R, "x"), P(R, "y")});
    CHECK(a.equals(b));
    Ideal prod = a.product(b);
    CHECK(prod.contains(P(R, "x^2")));
    CHECK_FALSE(prod.contains(P(R, "x")));
    CHECK(Ideal(R, {Polynomial::zero(R)}).is_zero_ideal());  // zero generators dropped
}
