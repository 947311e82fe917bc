#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "extor/free_module_map.hpp"
#include "extor/groebner.hpp"

namespace extor {

// Degreewise vector-space dimensions of a graded module, degrees 0..bound.
struct HilbertFunction {
    int bound = 0;
    std::vector<long> dims;  // bound + 1 entries

    bool operator==(const HilbertFunction&) const = default;
    long at(int d) const { return (d < 0 || d > bound) ? 0 : dims[static_cast<std::size_t>(d)]; }
    bool is_zero() const;
    std::string str() const;

    HilbertFunction plus(const HilbertFunction& o) const;
    HilbertFunction minus(const HilbertFunction& o) const;
    HilbertFunction shifted(int s) const;       // value at d becomes value at d+s
    HilbertFunction scaled(long k) const;
    static HilbertFunction zero(int bound);
};

// Finitely presented module: cokernel of a free-module map.  The optional
// annihilator declares the module as defined over R/J (verified on demand).
class FPModule {
public:
    FPModule() = default;

    // Verifies the declared annihilator: J times each generator must reduce
    // into the column span.
    static FPModule from_presentation(FreeModuleMap presentation,
                                      std::optional<Ideal> annihilator = std::nullopt);
    static FPModule free_module(RingPtr ring, std::size_t rank,
                                std::optional<std::vector<int>> shifts = std::nullopt);
    static FPModule zero_module(RingPtr ring, std::optional<Ideal> annihilator = std::nullopt);
    static FPModule quotient_ring(RingPtr ring, const Ideal& J);  // R/J with annihilator J

    const RingPtr& ring() const { return pres_.ring(); }
    const FreeModuleMap& presentation() const { return pres_; }
    std::size_t generator_rank() const { return pres_.tgt_rank(); }
    std::vector<int> generator_shifts() const;  // zeros when absent
    bool has_shifts() const { return pres_.tgt_shifts().has_value(); }
    const std::optional<Ideal>& annihilator() const { return ann_; }

    // Groebner basis of the presentation columns (cached).
    const GroebnerBasis& column_basis() const;

    bool is_zero() const;

    // Graded presentation check: every column homogeneous and consistent with
    // the generator shifts.
    bool is_graded() const;

private:
    FreeModuleMap pres_;
    std::optional<Ideal> ann_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;

public:
    FPModule(const FPModule& o) : pres_(o.pres_), ann_(o.ann_) {}
    FPModule& operator=(const FPModule& o) {
        pres_ = o.pres_;
        ann_ = o.ann_;
        gb_.reset();
        return *this;
    }
};

// Kernel of a free-module map: generators are the syzygies of the columns,
// presented by their second syzygies.  Kernel generators satisfy f(g) = 0
// exactly (rechecked).
FPModule kernel(const FreeModuleMap& f);
// Same, also exposing the kernel generators inside the source free module.
std::pair<std::vector<ModuleElement>, FPModule> kernel_with_generators(const FreeModuleMap& f);

// ker/im inside a common free module.  Throws InternalError if some im
// generator is outside span(ker_gens) (a broken complex upstream).
FPModule subquotient(const std::vector<ModuleElement>& ker_gens,
                     const std::vector<ModuleElement>& im_gens, std::size_t ambient_rank,
                     RingPtr ring, std::optional<std::vector<int>> ambient_shifts = std::nullopt,
                     std::optional<Ideal> annihilator = std::nullopt);

// M ⊗ N by the block presentation P_M⊗F_N ⊕ F_M⊗P_N -> F_M⊗F_N.
FPModule tensor_modules(const FPModule& m, const FPModule& n);

// M ⊗ R/J with annihilator J recorded.
FPModule restrict_to(const FPModule& m, const Ideal& j);

// I/(I·J) over R with annihilator J; requires I ⊆ J.  conormal(I, I) = I/I².
FPModule conormal(const Ideal& i, const Ideal& j);

// Exterior powers: ∧⁰M = R/ann(M); ∧¹M = M; q ≥ 2 via the standard wedge
// presentation ∧^{q-1}F₀ ⊗ F₁ -> ∧^q F₀.
FPModule exterior_power(const FPModule& m, int q);

// Graded dimensions of coker to degree D via standard monomials of the
// leading-term module.  Throws CertificationError on non-graded presentations.
HilbertFunction hilbert_function(const FPModule& m, int degree_bound);

// True iff the presentation is surjective onto its free module.
bool is_zero_module(const FPModule& m);

// Prunes unit entries from the presentation (graded minimization); the result
// presents an isomorphic module.
FPModule minimize_presentation(const FPModule& m);

// Detects whether M is a free R/J-module: minimize, then test that every
// remaining relation lies in J·F.  Returns the generator degrees on success.
std::optional<std::vector<int>> free_over_quotient(const FPModule& m, const Ideal& j);

// Subsets of {0..n-1} of size q in lexicographic order, plus binomials.
std::vector<std::vector<int>> subsets_lex(int n, int q);
long binomial(int n, int q);

}  // namespace extor
