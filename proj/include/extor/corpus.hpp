#pragma once

#include <cstdint>

#include "extor/polynomial.hpp"

namespace extor {

// splitmix64: platform-independent deterministic stream for seeded corpora.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// Random nonzero polynomial with small integer coefficients, total degree
// exactly `deg` when homogeneous=true, at most `deg` otherwise.
Polynomial random_polynomial(const RingPtr& ring, Rng& rng, int deg, int terms,
                             bool homogeneous);

// Seeded corpus of random sequences of homogeneous forms (degree 1..max_deg)
// for the regularity-oracle comparison; sequences may or may not be regular,
// but never generate the unit ideal and contain no zeros.
struct SequenceInstance {
    RingPtr ring;
    std::vector<Polynomial> polys;
};
std::vector<SequenceInstance> random_form_sequences(std::uint64_t seed, int count, int max_elems,
                                                    int max_vars, int max_deg);

// Seeded corpus of homogeneous regular sequences (linear forms and quadrics,
// machine-certified before inclusion) for the self-intersection property.
std::vector<SequenceInstance> random_regular_sequences(std::uint64_t seed, int count,
                                                       int max_elems, int max_vars);

}  // namespace extor
