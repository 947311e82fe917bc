#pragma once

// Independent oracles for the test suite.  The graded dimension here is
// computed by exact dense linear algebra over the coefficient field (span +
// Gaussian elimination), sharing no code with the staircase/Groebner route it
// cross-checks.

#include "extor/fp_module.hpp"

namespace extor::oracle {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

// dim_k of the degree-d piece of coker(presentation); requires a homogeneous
// presentation with shifts.
long graded_dimension(const FPModule& m, int d);

HilbertFunction hilbert_by_rank(const FPModule& m, int bound);

}  // namespace extor::oracle
