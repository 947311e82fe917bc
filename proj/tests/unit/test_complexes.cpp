#include <doctest.h>

#include "extor/chain_complex.hpp"
#include "extor/corpus.hpp"
#include "oracle.hpp"

using namespace extor;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }
HilbertFunction hf(const FPModule& m, int d = 8) { return hilbert_function(m, d); }

bool is_signed_permutation(const FreeModuleMap& f) {
    if (f.src_rank() != f.tgt_rank()) return false;
    std::vector<bool> row_hit(f.tgt_rank(), false);
    for (std::size_t j = 0; j < f.src_rank(); ++j) {
        int nonzero = 0;
        for (std::size_t i = 0; i < f.tgt_rank(); ++i) {
            const Polynomial& e = f.entry(i, j);
            if (e.is_zero()) continue;
            ++nonzero;
            if (!e.is_constant()) return false;
            Scalar c = e.constant_coefficient();
            if (!(c.is_one() || (-c).is_one())) return false;
            if (row_hit[i]) return false;
            row_hit[i] = true;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

// the empty factor contributes the unit complex R in degree 0
ChainComplex koszul_or_unit(const RingPtr& ring, const std::vector<Polynomial>& fs) {
    if (fs.empty())
        return ChainComplex(ring, 0, {1}, {}, std::vector<std::vector<int>>{{0}});
    return koszul_complex(fs);
}

// exact chain-map identity phi_{n-1} ∘ d_T = d_K ∘ phi_n in every degree
void check_chain_map(const std::vector<Polynomial>& fs, const std::vector<Polynomial>& gs) {
    const RingPtr& ring = fs.empty() ? gs.front().ring() : fs.front().ring();
    ChainComplex t = tensor_complexes(koszul_or_unit(ring, fs), koszul_or_unit(ring, gs));
    std::vector<Polynomial> all = fs;
    all.insert(all.end(), gs.begin(), gs.end());
    ChainComplex k = koszul_complex(all);
    auto phi = koszul_tensor_iso(fs, gs);
    REQUIRE(phi.size() == all.size() + 1);
    for (std::size_t n = 0; n < phi.size(); ++n) {
        CHECK(phi[n].src_rank() == t.rank(static_cast<int>(n)));
        CHECK(phi[n].tgt_rank() == k.rank(static_cast<int>(n)));
        CHECK(is_signed_permutation(phi[n]));
        if (n >= 1) {
            FreeModuleMap lhs = phi[n - 1].compose(t.differential(static_cast<int>(n)));
            FreeModuleMap rhs = k.differential(static_cast<int>(n)).compose(phi[n]);
            for (std::size_t i = 0; i < lhs.tgt_rank(); ++i)
                for (std::size_t j = 0; j < lhs.src_rank(); ++j)
                    CHECK(lhs.entry(i, j) == rhs.entry(i, j));
        }
    }
}

}  // namespace

TEST_CASE("koszul complex examples") {
    auto R1 = make_ring(field_Q(), {"x"});
    ChainComplex k1 = koszul_complex({P(R1, "x")});
    CHECK(k1.rank(0) == 1);
    CHECK(k1.rank(1) == 1);
    CHECK(k1.differential(1).entry(0, 0) == P(R1, "x"));

    auto R = make_ring(field_Q(), {"x", "y"});
    ChainComplex k2 = koszul_complex({P(R, "x"), P(R, "y")});
    CHECK(k2.rank(0) == 1);
    CHECK(k2.rank(1) == 2);
    CHECK(k2.rank(2) == 1);
    // d1 = (x y); d2 = (-y, x) under the subset-sign convention (-1)^{pos+1}
    CHECK(k2.differential(1).entry(0, 0) == P(R, "x"));
    CHECK(k2.differential(1).entry(0, 1) == P(R, "y"));
    CHECK(k2.differential(2).entry(0, 0) == P(R, "-y"));
    CHECK(k2.differential(2).entry(1, 0) == P(R, "x"));

    // zero section: both homologies are R
    ChainComplex k0 = koszul_complex({Polynomial::zero(R)});
    CHECK(hf(homology(k0, 0)) == hf(FPModule::free_module(R, 1)));
    CHECK(hf(homology(k0, 1)) == hf(FPModule::free_module(R, 1)));

    CHECK_THROWS_AS(koszul_complex({}), ArgumentError);
}

TEST_CASE("complex construction rejects broken differentials") {
    auto R = make_ring(field_Q(), {"x", "y"});
    FreeModuleMap d1(R, 1, 1, {{P(R, "x")}});
    FreeModuleMap d2(R, 1, 1, {{P(R, "y")}});  // x*y != 0
    CHECK_THROWS_AS(ChainComplex(R, 0, {1, 1, 1}, {d1, d2}), InternalError);
}

TEST_CASE("tensor of K(x) and K(y) matches the documented convention") {
    auto R = make_ring(field_Q(), {"x", "y"});
    ChainComplex t = tensor_complexes(koszul_complex({P(R, "x")}), koszul_complex({P(R, "y")}));
    CHECK(t.rank(0) == 1);
    CHECK(t.rank(1) == 2);
    CHECK(t.rank(2) == 1);
    // degree-1 basis in ascending block order: (0,1) then (1,0)
    CHECK(t.differential(1).entry(0, 0) == P(R, "y"));
    CHECK(t.differential(1).entry(0, 1) == P(R, "x"));
    CHECK(t.differential(2).entry(0, 0) == P(R, "x"));
    CHECK(t.differential(2).entry(1, 0) == P(R, "-y"));

    // homology agrees with the straight Koszul complex on (x, y)
    ChainComplex k = koszul_complex({P(R, "x"), P(R, "y")});
    for (int q = 0; q <= 2; ++q) CHECK(hf(homology(t, q)) == hf(homology(k, q)));
}

TEST_CASE("unit complex is a strict tensor identity") {
    auto R = make_ring(field_Q(), {"x", "y"});
    ChainComplex c = koszul_complex({P(R, "x"), P(R, "x*y")});
    ChainComplex unit(R, 0, {1}, {}, std::vector<std::vector<int>>{{0}});
    ChainComplex t = tensor_complexes(c, unit);
    REQUIRE(t.lo() == c.lo());
    REQUIRE(t.hi() == c.hi());
    for (int q = c.lo(); q <= c.hi(); ++q) CHECK(t.rank(q) == c.rank(q));
    for (int q = c.lo() + 1; q <= c.hi(); ++q)
        for (std::size_t i = 0; i < c.differential(q).tgt_rank(); ++i)
            for (std::size_t j = 0; j < c.differential(q).src_rank(); ++j)
                CHECK(t.differential(q).entry(i, j) == c.differential(q).entry(i, j));

    ChainComplex uu = tensor_complexes(unit, unit);
    CHECK(uu.lo() == 0);
    CHECK(uu.hi() == 0);
    CHECK(uu.rank(0) == 1);
}

TEST_CASE("koszul tensor iso examples") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    check_chain_map({P(R, "x")}, {P(R, "y")});
    check_chain_map({P(R, "x"), P(R, "y")}, {P(R, "z")});

    // empty right factor: identity in every degree
    auto phi = koszul_tensor_iso({P(R, "x")}, {});
    for (const auto& f : phi) {
        CHECK(f.src_rank() == f.tgt_rank());
        for (std::size_t i = 0; i < f.tgt_rank(); ++i)
            CHECK(f.entry(i, i) == P(R, "1"));
    }
}

TEST_CASE("koszul tensor iso on random homogeneous splits") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    Rng rng(2002);
    for (int trial = 0; trial < 5; ++trial) {
        int total = 2 + static_cast<int>(rng.below(4));  // lengths 2..5 here, 6 in acceptance
        std::vector<Polynomial> all;
        for (int i = 0; i < total; ++i)
            all.push_back(random_polynomial(R, rng, 1 + static_cast<int>(rng.below(2)), 2, true));
        for (int split = 0; split <= total; ++split) {
            std::vector<Polynomial> fs(all.begin(), all.begin() + split);
            std::vector<Polynomial> gs(all.begin() + split, all.end());
            check_chain_map(fs, gs);
        }
    }
}

TEST_CASE("homology of regular and degenerate Koszul complexes") {
    auto R = make_ring(field_Q(), {"x", "y"});
    ChainComplex k = koszul_complex({P(R, "x"), P(R, "y")});
    FPModule h0 = homology(k, 0);
    CHECK(hf(h0) == hf(FPModule::quotient_ring(R, Ideal(R, {P(R, "x"), P(R, "y")}))));
    CHECK(is_zero_module(homology(k, 1)));
    CHECK(is_zero_module(homology(k, 2)));
    CHECK(is_zero_module(homology(k, 5)));   // outside the range
    CHECK(is_zero_module(homology(k, -1)));

    // H_1(K(x,x)) is R/(x) generated in internal degree 1
    ChainComplex kxx = koszul_complex({P(R, "x"), P(R, "x")});
    FPModule h1 = homology(kxx, 1);
    CHECK(hf(h1) == hf(FPModule::quotient_ring(R, Ideal(R, {P(R, "x")}))).shifted(1));
    CHECK(hf(h1) == oracle::hilbert_by_rank(h1, 8));
}

TEST_CASE("zero-padded Koszul homology is a binomial pattern") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    HilbertFunction base =
        hf(FPModule::quotient_ring(R, Ideal(R, {P(R, "x"), P(R, "y")})));  // Q[z]
    for (int r = 1; r <= 2; ++r) {
        std::vector<Polynomial> fs{P(R, "x"), P(R, "y")};
        for (int i = 0; i < r; ++i) fs.push_back(Polynomial::zero(R));
        ChainComplex k = koszul_complex(fs);
        for (int q = 0; q <= 2 + r; ++q) {
            HilbertFunction got = hf(homology(k, q));
            CHECK(got == base.scaled(binomial(r, q)));  // zero shift
        }
    }
}

TEST_CASE("H_0 of a Koszul complex is the quotient by the section ideal") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    Rng rng(2099);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Polynomial> fs;
        int n = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < n; ++i)
            fs.push_back(random_polynomial(R, rng, 1 + static_cast<int>(rng.below(2)), 2, true));
        FPModule h0 = homology(koszul_complex(fs), 0);
        CHECK(hf(h0) == hf(FPModule::quotient_ring(R, Ideal(R, fs))));
    }
    // inhomogeneous case: membership-level agreement
    std::vector<Polynomial> fs{P(R, "x - 1"), P(R, "y^2 - x")};
    FPModule h0 = homology(koszul_complex(fs), 0);
    Ideal ideal(R, fs);
    const GroebnerBasis& gb = h0.column_basis();
    for (const auto& g : ideal.groebner().generators())
        CHECK(normal_form(ModuleElement::from_polynomial(g.coord(0)), gb).is_zero());
    for (const auto& c : h0.presentation().columns())
        CHECK(ideal.contains(c.coord(0)));
}

TEST_CASE("homology HF is invariant under permutation and rescaling") {
    auto R = make_ring(field_Q(), {"x", "y", "z"});
    std::vector<Polynomial> fs{P(R, "x"), P(R, "x + y"), P(R, "y^2")};
    std::vector<Polynomial> permuted{fs[2], fs[0], fs[1]};
    std::vector<Polynomial> rescaled{fs[0].scaled(Scalar::from_long(3, field_Q())),
                                     fs[1].scaled(Scalar::from_long(-2, field_Q())), fs[2]};
    ChainComplex a = koszul_complex(fs), b = koszul_complex(permuted), c = koszul_complex(rescaled);
    for (int q = 0; q <= 3; ++q) {
        HilbertFunction base = hf(homology(a, q));
        CHECK(base == hf(homology(b, q)));
        CHECK(base == hf(homology(c, q)));
    }
}

TEST_CASE("euler characteristic of a complex equals that of its homology") {
    auto R = make_ring(field_Q(), {"x", "y"});
    Rng rng(2101);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Polynomial> fs;
        int n = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < n; ++i)
            fs.push_back(random_polynomial(R, rng, 1 + static_cast<int>(rng.below(2)), 2, true));
        ChainComplex k = koszul_complex(fs);
        const int bound = 7;
        HilbertFunction chain = HilbertFunction::zero(bound);
        HilbertFunction hom = HilbertFunction::zero(bound);
        HilbertFunction r_hf = hf(FPModule::free_module(R, 1), bound);
        for (int q = k.lo(); q <= k.hi(); ++q) {
            HilbertFunction level = HilbertFunction::zero(bound);
            for (int s : k.shifts_at(q)) level = level.plus(r_hf.shifted(s));
            HilbertFunction h = hf(homology(k, q), bound);
            if (q % 2 == 0) {
                chain = chain.plus(level);
                hom = hom.plus(h);
            } else {
                chain = chain.minus(level);
                hom = hom.minus(h);
            }
        }
        CHECK(chain == hom);
    }
}

TEST_CASE("homology with coefficients") {
    auto R = make_ring(field_Q(), {"x", "y"});
    Ideal m(R, {P(R, "x"), P(R, "y")});
    ChainComplex k = koszul_complex({P(R, "x"), P(R, "y")});
    FPModule kk = FPModule::quotient_ring(R, m);

    // Tor_q(k, k) has k-dimension C(2,q), concentrated in degree q
    HilbertFunction kpt = hf(kk);
    for (int q = 0; q <= 2; ++q) {
        FPModule t = homology_with_coefficients(k, q, kk);
        CHECK(hf(t) == kpt.shifted(q).scaled(binomial(2, q)));
        REQUIRE(t.annihilator().has_value());
        CHECK(t.annihilator()->equals(m));
    }

    // tensoring with R itself changes nothing
    ChainComplex kx = koszul_complex({P(R, "x")});
    for (int q = 0; q <= 1; ++q)
        CHECK(hf(homology_with_coefficients(kx, q, FPModule::free_module(R, 1))) ==
              hf(homology(kx, q)));

    // Tor_r(R/J, J) matches wedge^{r+1} of the free conormal (R/J)^2
    FPModule jmod = ideal_as_module(m);
    FPModule con = conormal(m, m);
    for (int r = 0; r <= 1; ++r) {
        HilbertFunction lhs = hf(homology_with_coefficients(k, r, jmod));
        HilbertFunction rhs = hf(exterior_power(con, r + 1));
        CHECK(lhs == rhs);
    }
}
