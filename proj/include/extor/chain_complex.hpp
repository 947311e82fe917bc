#pragma once

#include "extor/fp_module.hpp"

namespace extor {

// Bounded complex of free modules ... -> C_q -> C_{q-1} -> ...  with exact
// d∘d = 0 verified at construction.  Homological degree q matches the
// cohomological degree -q of the usual convention.
class ChainComplex {
public:
    ChainComplex() = default;
    // differentials[t] is d_{lo+1+t} : C_{lo+1+t} -> C_{lo+t}.
    ChainComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks,
                 std::vector<FreeModuleMap> differentials,
                 std::optional<std::vector<std::vector<int>>> shifts = std::nullopt);

    const RingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int q) const;
    bool has_shifts() const { return shifts_.has_value(); }
    std::vector<int> shifts_at(int q) const;  // zeros when absent/out of range
    // d_q for q in [lo+1, hi]; throws otherwise.
    const FreeModuleMap& differential(int q) const;
    bool has_differential(int q) const { return q > lo_ && q <= hi(); }

private:
    RingPtr ring_;
    int lo_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<FreeModuleMap> diffs_;
    std::optional<std::vector<std::vector<int>>> shifts_;
};

// Koszul complex K(f_1..f_n): degree-q component has basis e_S indexed by the
// q-subsets of {1..n} in lexicographic order, d(e_S) = Σ_{i∈S}
// (-1)^{pos(i,S)+1} f_i e_{S\{i}}.  Zero entries are allowed; the empty
// sequence is not.
ChainComplex koszul_complex(const std::vector<Polynomial>& fs);

// Tensor product with Koszul signs: (C⊗D)_n = ⊕_{p+q=n} C_p ⊗ D_q (blocks in
// ascending p; within a block, index = a·rank(D_q) + b), d(x⊗y) = dx⊗y +
// (-1)^p x⊗dy.
ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d);

// Degreewise isomorphism (K(fs) ⊗ K(gs))_n -> K(fs‖gs)_n, e_S ⊗ e_T ->
// e_{S ∪ (T+|fs|)}.  Signed permutation matrices commuting with the
// differentials in every degree.
std::vector<FreeModuleMap> koszul_tensor_iso(const std::vector<Polynomial>& fs,
                                             const std::vector<Polynomial>& gs);

// H_q(C) = ker d_q / im d_{q+1} as a finitely presented module with inherited
// degree shifts.
FPModule homology(const ChainComplex& c, int q);

// H_q(C ⊗ M) for a finitely presented coefficient module M (e.g. R/J, or an
// ideal presented by generators and syzygies).
FPModule homology_with_coefficients(const ChainComplex& c, int q, const FPModule& coeff);

// Finitely presented avatar of an ideal as a module: generators = designated
// generators, relations = their syzygies.
FPModule ideal_as_module(const Ideal& ideal);

}  // namespace extor
