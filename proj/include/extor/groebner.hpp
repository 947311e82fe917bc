#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "extor/module_element.hpp"

namespace extor {

// Reduced Groebner basis of a submodule of R^rank under the position-over-term
// order (e_0 highest).  Generators are monic, auto-reduced, sorted descending
// by leading term, and each carries its expression in the input generators.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr ring, std::size_t rank, MonomialOrder ord,
                  std::vector<ModuleElement> gens, std::vector<std::vector<Polynomial>> input_reps);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const MonomialOrder& order() const { return ord_; }
    ModuleOrder module_order() const { return ModuleOrder{ord_}; }
    const std::vector<ModuleElement>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    // Witness that gens_[k] lies in the span of the inputs: coefficients over
    // the input list passed to buchberger().
    const std::vector<std::vector<Polynomial>>& input_representations() const { return reps_; }
    static std::string module_order_convention() { return "position-over-term, e0 highest"; }

private:
    RingPtr ring_;
    std::size_t rank_ = 0;
    MonomialOrder ord_;
    std::vector<ModuleElement> gens_;
    std::vector<std::vector<Polynomial>> reps_;
};

struct DivisionResult {
    ModuleElement remainder;
    std::vector<Polynomial> quotients;  // one per divisor, v = Σ q_i d_i + r
};

// Full multivariate division: no term of the remainder is divisible by any
// divisor's leading term.  Divisors must be nonzero.
DivisionResult divide(const ModuleElement& v, const std::vector<ModuleElement>& divisors,
                      const ModuleOrder& mord);

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Buchberger with the normal selection strategy.  Deterministic output: the
// unique reduced basis, independent of strategy internals.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, std::size_t rank, RingPtr ring,
                         MonomialOrder ord);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, RingPtr ring, MonomialOrder ord);

// Generators of the kernel of R^|gens| -> R^rank, e_i -> gens[i].  Every
// returned relation evaluates to zero exactly; the set generates all
// relations (Schreyer's theorem applied to the Buchberger trace).
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, std::size_t rank,
                                    RingPtr ring, MonomialOrder ord);
std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens, RingPtr ring,
                                    MonomialOrder ord);

// Expresses v as a combination of gens (coordinates over gens), or nullopt if
// v is not in their span.
std::optional<std::vector<Polynomial>> lift_through(const ModuleElement& v,
                                                    const std::vector<ModuleElement>& gens,
                                                    std::size_t rank, RingPtr ring,
                                                    MonomialOrder ord);

// Precomputed trace for repeated lifts through one generator list.
class LiftContext {
public:
    LiftContext(const std::vector<ModuleElement>& gens, std::size_t rank, RingPtr ring,
                MonomialOrder ord);
    // v = Σ coeff_i gens[i]; nullopt when v is outside the span.
    std::optional<std::vector<Polynomial>> lift(const ModuleElement& v) const;

private:
    RingPtr ring_;
    std::size_t ngens_;
    MonomialOrder ord_;
    std::vector<ModuleElement> basis_;
    std::vector<std::vector<Polynomial>> reps_;  // basis_[k] = Σ reps_[k][i] gens[i]
};

// Test helper contract: true iff every S-pair of basis reduces to zero.
bool buchberger_criterion_holds(const GroebnerBasis& basis);

// ---------------------------------------------------------------------------

// Ideal of the polynomial ring with a designated generator list (zero
// generators dropped) and a lazily cached Groebner basis per order.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_homogeneous() const;
    int max_generator_degree() const;

    const GroebnerBasis& groebner() const;                         // ring default order
    const GroebnerBasis& groebner(const MonomialOrder& ord) const;

    bool contains(const Polynomial& f) const;
    bool is_unit() const;  // 1 in the ideal
    bool equals(const Ideal& other) const;

    Ideal sum(const Ideal& other) const;      // generator concatenation
    Ideal product(const Ideal& other) const;  // pairwise products

    // Krull dimension of R/I via independent variable sets of LT(I); -1 for
    // the unit ideal.
    int krull_dimension() const;
    // nvars - krull_dimension; throws ArgumentError on the unit ideal.
    int height() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::mutex mu_;
    mutable std::map<std::string, std::shared_ptr<const GroebnerBasis>> gb_cache_;

public:
    Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {}
    Ideal& operator=(const Ideal& o) {
        ring_ = o.ring_;
        gens_ = o.gens_;
        return *this;
    }
};

// membership f in I, via normal form against the cached basis.
bool membership(const Polynomial& f, const Ideal& ideal);

}  // namespace extor
