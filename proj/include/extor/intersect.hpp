#pragma once

#include "extor/chain_complex.hpp"

namespace extor {

// Two-oracle regularity answer.  The Koszul criterion (H_q(K(fs)) = 0 for all
// q > 0) is authoritative; the height criterion is reported alongside it for
// homogeneous inputs and must agree.
struct RegularityReport {
    bool koszul_vanishing = false;
    std::optional<int> first_nonvanishing_q;
    std::optional<bool> height_match;  // homogeneous inputs only
    std::optional<int> height;
    bool regular() const { return koszul_vanishing; }
};

// Throws ArgumentError on a zero entry, CertificationError on the unit ideal.
RegularityReport is_regular_sequence(const std::vector<Polynomial>& fs);

// Complete-intersection subvariety of the affine chart: an ideal with a
// designated generator list certified as a regular sequence of length equal
// to the height.
class CIVariety {
public:
    static CIVariety certify(std::string name, RingPtr ring, std::vector<Polynomial> gens);

    const std::string& name() const { return name_; }
    const RingPtr& ring() const { return ideal_.ring(); }
    const Ideal& ideal() const { return ideal_; }
    const std::vector<Polynomial>& generators() const { return ideal_.generators(); }
    int codim() const { return codim_; }
    bool is_homogeneous() const { return ideal_.is_homogeneous(); }
    const RegularityReport& certificate() const { return cert_; }

private:
    std::string name_;
    Ideal ideal_;
    int codim_ = 0;
    RegularityReport cert_;
};

// A family Y_1..Y_n with W = ∩Y_i carrying designated regular generators for
// I_W = Σ I_{Y_i}.  Instances with 1 ∈ I_W are marked empty and skip the W
// certificate.
class IntersectionInstance {
public:
    static IntersectionInstance certify(std::string name, std::vector<CIVariety> ys,
                                        std::optional<std::vector<Polynomial>> w_gens);

    const std::string& name() const { return name_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<CIVariety>& varieties() const { return ys_; }
    bool empty_intersection() const { return empty_; }
    // Designated regular generators of I_W; throws on empty intersection.
    const std::vector<Polynomial>& w_generators() const;
    const Ideal& w_ideal() const { return w_ideal_; }  // designated generators
    int codim_w() const;
    int excess() const;
    int total_codim() const;
    bool is_homogeneous() const;

private:
    std::string name_;
    RingPtr ring_;
    std::vector<CIVariety> ys_;
    bool empty_ = false;
    Ideal w_ideal_;  // generated by the designated w generators
    int excess_ = 0;
};

struct VerdictRow {
    int q = 0;
    HilbertFunction lhs, rhs;
    bool equal = false;
    std::optional<int> shift;  // uniform shift aligning the sides, when equal fails
    std::string note;
};

struct Verdict {
    std::string claim;
    int degree_bound = 0;
    bool pass = false;
    bool vacuous = false;
    bool shift_flagged = false;
    std::vector<VerdictRow> rows;
    std::vector<std::string> diagnostics;
};

// Tor_q(O_{Y_1},...,O_{Y_n}) = H_q of the Koszul complex on the concatenated
// designated generator sequences (the tensor-of-resolutions model, collapsed
// through the shuffle identification).
FPModule multitor(const std::vector<CIVariety>& ys, int q);

struct TorIndependenceReport {
    bool independent = false;
    std::vector<std::pair<int, bool>> vanishing;  // (q, Tor_q == 0) for q >= 1
};
TorIndependenceReport is_tor_independent(const CIVariety& a, const CIVariety& b);

// Excess module E_W = ker(⊕ I_i/(I_i I_W) -> I_W/I_W²), over R/I_W.  Throws
// CertificationError if the assembled map is not surjective.
FPModule excess_module(const IntersectionInstance& inst);

// Tor_q(O_Y, O_Y) vs ∧^q (I/I²), q = 0..codim.
Verdict verify_self_intersection(const CIVariety& y, int degree_bound);

// Tor_q(O_{Y_1},..,O_{Y_n}) vs ∧^q E_W for q = 0..e, plus vanishing at e+1 and
// binomial rank checks when E_W is free.
Verdict verify_excess_formula(const IntersectionInstance& inst, int degree_bound);

// n = 2 only: degreewise HF-exactness of the long exact sequence from
// 0 -> I_W -> O_X -> O_W -> 0 tensored into the resolution product, and the
// quotient identification for H_q(T ⊗ I_W).
Verdict les_verify(const IntersectionInstance& inst, int degree_bound);

}  // namespace extor
