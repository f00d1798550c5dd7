#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "shx/operators.hpp"

namespace shx {

/// Point evaluations of the regular building blocks (same formulas as the
/// HFunction builtins).
Hypercomplex eta(int l, Scale scale, const Point4& p);
Hypercomplex zeta(int l, Scale scale, const Point4& p);

/// (1/N!) sum over all N! orderings of the product. Computed over the
/// multiset of distinct inputs, so repeated elements cost multiset words,
/// not N! ones. N is capped by max_degree.
Hypercomplex sym_product(std::span<const Hypercomplex> hs, int max_degree = kDefaultMaxDegree);

/// sym_product of the expanded list [(h, multiplicity)...] without expanding
/// repeats into distinct permutation slots.
Hypercomplex sym_power_product(std::span<const std::pair<Hypercomplex, int>> factors,
                               int max_degree = kDefaultMaxDegree);

/// The bound of the expansion lemma:
///   t != 0: (sqrt(x1^2+x2^2))^n1 (sqrt|x3^2-sgn(t)x1^2|)^n2 (sqrt|x4^2-sgn(t)x1^2|)^n3
///   t  = 0: (sqrt(x1^2+x2^2))^n1 |x3|^n2 |x4|^n3
/// A theorem for t <= 0; for t > 0 it can fail (see check_eta_norm_bound).
double eta_norm_bound(const MultiIndex& n, Scale scale, const Point4& p);

struct NormBoundReport {
    int checked = 0;
    int violations = 0;
    double worst_excess = 0.0;  // max over samples of seminorm - bound
    MultiIndex worst_n;
    Point4 worst_p{0, 0, 0, 0};
};

/// Samples random (n, p) pairs and records every violation of the bound
/// beyond tol rather than asserting it.
NormBoundReport check_eta_norm_bound(Scale scale, int max_total, int samples, std::uint64_t seed,
                                     double tol = 1e-9, double box_radius = 2.0);

using CoefficientMap = std::map<MultiIndex, Hypercomplex, GradedLexLess>;

/// f_n = (1/n!) d^{|n|} f / dx2^n1 dx3^n2 dx4^n3 at 0 for all |n| <= maxdeg,
/// including n = (0,0,0) -> f(0). Exact for polynomial f.
CoefficientMap taylor_coefficients(const HFunction& f, Scale scale, int maxdeg);

/// Finite expansion f(0) + sum_n eta^n f_n with the coefficients multiplying
/// from the right (the side is what keeps the sum left-regular).
struct RegularSeries {
    Scale scale;
    Hypercomplex constant;
    CoefficientMap coefficients;  // |n| >= 1 entries only

    Hypercomplex evaluate(const Point4& p) const;
    HFunction to_function(int max_degree = kDefaultMaxDegree) const;
};

struct ExpandResult {
    RegularSeries series;
    double residual;  // max over samples, componentwise |f - series|
};

/// Expansion of a left regular function about the origin. Throws
/// NotLeftRegularError (with the worst witness) when the regularity
/// precondition fails on the sample set.
ExpandResult expand(const HFunction& f, Scale scale, int maxdeg, const SampleSet& samples,
                    double regularity_tol = 1e-9);

struct QuadratureOptions {
    int initial_panels = 64;
    int max_panels = 1024;
    double tol = 1e-8;  // stop when doubling changes the estimate less than this
};

/// (R_n f)(w) = integral_0^1 (d f / d x_n)(s w) ds by composite Simpson with
/// panel doubling. For left regular f,
///   f(w) - f(0) = sum_{n=2..4} eta_n(w) (R_n f)(w).
Hypercomplex remainder_integral(const HFunction& f, int n, const Point4& w,
                                const QuadratureOptions& opts = {});

}  // namespace shx
