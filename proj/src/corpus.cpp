#include "extor/corpus.hpp"

#include "extor/intersect.hpp"

namespace extor {

Polynomial random_polynomial(const RingPtr& ring, Rng& rng, int deg, int terms,
                             bool homogeneous) {
    const std::size_t n = ring->nvars();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Term> ts;
        for (int t = 0; t < terms; ++t) {
            int d = homogeneous ? deg : static_cast<int>(rng.below(static_cast<std::uint64_t>(deg + 1)));
            std::vector<int> exps(n, 0);
            for (int i = 0; i < d; ++i) ++exps[rng.below(n)];
            long c = rng.int_in(-4, 4);
            if (c == 0) c = 1;
            ts.push_back({Monomial(std::move(exps)), Scalar::from_long(c, ring->field)});
        }
        Polynomial p = Polynomial::from_terms(ring, std::move(ts));
        if (!p.is_zero()) return p;
    }
    return Polynomial::variable(ring, 0);  // unreachable at sane parameters
}

namespace {

const char* kVarNames[] = {"x", "y", "z", "w", "v", "u"};

RingPtr corpus_ring(int nvars) {
    std::vector<std::string> vars;
    for (int i = 0; i < nvars; ++i) vars.emplace_back(kVarNames[i]);
    return make_ring(field_Q(), std::move(vars));
}

}  // namespace

std::vector<SequenceInstance> random_form_sequences(std::uint64_t seed, int count, int max_elems,
                                                    int max_vars, int max_deg) {
    Rng rng(seed);
    std::vector<SequenceInstance> out;
    while (static_cast<int>(out.size()) < count) {
        int nvars = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars))) + 1;
        RingPtr ring = corpus_ring(nvars);
        int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_elems))) + 1;
        std::vector<Polynomial> polys;
        for (int i = 0; i < len; ++i) {
            int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg))) + 1;
            polys.push_back(random_polynomial(ring, rng, deg, 2, /*homogeneous=*/true));
        }
        Ideal ideal(ring, polys);
        if (ideal.is_unit()) continue;  // excluded by the oracle preconditions
        out.push_back({std::move(ring), std::move(polys)});
    }
    return out;
}

std::vector<SequenceInstance> random_regular_sequences(std::uint64_t seed, int count,
                                                       int max_elems, int max_vars) {
    Rng rng(seed);
    std::vector<SequenceInstance> out;
    while (static_cast<int>(out.size()) < count) {
        int nvars = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars))) + 1;
        RingPtr ring = corpus_ring(nvars);
        int len = static_cast<int>(rng.below(
                      static_cast<std::uint64_t>(std::min(max_elems, nvars)))) +
                  1;
        std::vector<Polynomial> polys;
        for (int i = 0; i < len; ++i) {
            int deg = rng.below(2) == 0 ? 1 : 2;  // linear forms and generic quadrics
            polys.push_back(random_polynomial(ring, rng, deg, 2, /*homogeneous=*/true));
        }
        Ideal ideal(ring, polys);
        if (ideal.is_unit()) continue;
        try {
            if (!is_regular_sequence(polys).regular()) continue;
        } catch (const Error&) {
            continue;
        }
        out.push_back({std::move(ring), std::move(polys)});
    }
    return out;
}

}  // namespace extor
