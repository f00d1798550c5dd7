#pragma once

#include <cstdint>

#include "shx/hypercomplex.hpp"

namespace shx {

/// Outcome of a randomized counterexample search over pairs (h1, h2).
struct InequalityCounterexample {
    bool found = false;
    int tried = 0;
    Hypercomplex h1 = Hypercomplex::zero(Scale(0.0));
    Hypercomplex h2 = Hypercomplex::zero(Scale(0.0));
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Searches for |<h1,h2>|^2 > |<h1,h1>|^2 |<h2,h2>|^2 (the squared-RHS form;
/// not scale invariant, so violations exist for every t >= 0).
InequalityCounterexample find_printed_cauchy_schwarz_violation(Scale scale, int max_samples,
                                                               std::uint64_t seed,
                                                               double margin = 1e-9);

/// Searches for ||h1 + h2|| > ||h1|| + ||h2||. Violations exist iff t > 0;
/// for t <= 0 the form is (semi)definite and the search provably comes back
/// empty.
InequalityCounterexample find_triangle_violation(Scale scale, int max_samples, std::uint64_t seed,
                                                 double margin = 1e-9);

/// Standard unsquared Cauchy-Schwarz |<h1,h2>|^2 <= <h1,h1><h2,h2>; holds
/// for t <= 0.
InequalityCounterexample find_cauchy_schwarz_violation(Scale scale, int max_samples,
                                                       std::uint64_t seed, double margin = 1e-9);

}  // namespace shx
