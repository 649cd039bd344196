#pragma once

// Plain serial reference implementations of the elimination kernels and of
// the faithfulness checker. These stay deliberately simple and independent
// of the OpenMP code paths; tests compare the two and the benchmark tool
// times them against each other.

#include "chowring/linalg.hpp"
#include "chowring/restrictions.hpp"

namespace chowring::reference {

SmithResult smith_normal_form(const IntMatrix& m);

// Invariant factors via gcds of k-minors: d_k = g_k / g_{k-1}. Exponential
// in the matrix size; only usable as an oracle for tiny matrices.
SmithResult smith_by_minor_gcd(const IntMatrix& m);

int f2_rank(const F2Matrix& m);

VerificationReport faithfulness_check(const Presentation& pres, int max_degree);

} // namespace chowring::reference
