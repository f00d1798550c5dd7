#pragma once

#include "shx/hypercomplex.hpp"

namespace shx {

/// Element x + u j_t of the hyperbolic subring D_t (the x2 = x4 = 0 slice).
/// D_{-1} is the complex plane, D_1 the classical hyperbolic numbers.
struct HyperbolicNumber {
    Scale scale;
    double x;
    double u;
};

Hypercomplex embed(const HyperbolicNumber& d);

/// Product inside D_t (the subring is closed and commutative).
HyperbolicNumber hyp_mul(const HyperbolicNumber& p, const HyperbolicNumber& q);

/// The unit e^{j_t theta}:
///   t < 0: cos(sqrt|t| theta) + j_t sin(sqrt|t| theta)/sqrt|t|
///   t > 0: cosh(sqrt t theta) + j_t sinh(sqrt t theta)/sqrt t
///   t = 0: 1 + theta j_0  (the t -> 0 limit of either branch)
/// seminorm(embed(exp_j)) = 1 in all cases.
HyperbolicNumber exp_j(Scale scale, double theta);

/// The full t = 0 unit family: sign + u j_0 with sign in {+1,-1}.
HyperbolicNumber exp_j0(int sign, double u);

struct PolarDecomposition {
    double r;       // seminorm of the input
    double theta;   // branch-solving parameter; at t = 0 this is u/x
    int sign;       // +-1; the reconstruction is sign * r * e^{j_t theta}
    double residual;       // max-abs reconstruction error, relative
    double euclidean_arg;  // Arg((x,u)) in [0, 2pi), reported for comparison
};

/// Inverts h = sign * ||h|| * e^{j_t theta}. Errors: NullConeError when
/// seminorm is below the singular threshold; NoBranchError for t > 0 inputs
/// with x^2 < t u^2 (no cosh-leading branch exists there).
PolarDecomposition polar_decompose(const HyperbolicNumber& d, double rel_eps = 1e-12);

HyperbolicNumber reconstruct(Scale scale, const PolarDecomposition& p);

bool is_unit(const HyperbolicNumber& d, double tol = 1e-9);

}  // namespace shx
