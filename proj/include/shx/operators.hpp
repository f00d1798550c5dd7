#pragma once

#include <array>

#include "shx/hfunction.hpp"
#include "shx/region.hpp"

namespace shx {

/// The differential operators of the calculus. First-order operators are
/// sums of basis-unit coefficients times partials; where the unit sits
/// (left or right of the derivative) is chosen at application time.
///
///   CauchyFueter        d1 + i d2 + j d3 + k d4             (any t)
///   CauchyFueterDagger  d1 - i d2 - j d3 - k d4             (any t)
///   Nabla               d1 + i d2 - (s/r) j d3 - (s/r) k d4 (t != 0)
///   NablaDagger         d1 - i d2 + (s/r) j d3 + (s/r) k d4 (t != 0)
///   Nabla0 / dagger     d1 +- i d2 +- j d3 +- k d4          (t = 0)
///   Dilated(u3,u4)      d1 + i d2 + u3 j d3 + u4 k d4       (t = 0)
///   Laplacian           d1^2 + d2^2 - sgn(t)(d3^2 + d4^2)   (t != 0)
///   Laplacian0          d1^2 + d2^2                         (t = 0)
///
/// with s = sgn(t), r = sqrt|t|.
enum class OperatorKind {
    CauchyFueter,
    CauchyFueterDagger,
    Nabla,
    NablaDagger,
    Nabla0,
    Nabla0Dagger,
    Laplacian,
    Laplacian0,
    Dilated,
    DilatedDagger,
};

struct DifferentialOperator {
    OperatorKind kind;
    double u3 = 0.0;
    double u4 = 0.0;

    static DifferentialOperator cauchy_fueter() { return {OperatorKind::CauchyFueter}; }
    static DifferentialOperator cauchy_fueter_dagger() { return {OperatorKind::CauchyFueterDagger}; }
    static DifferentialOperator nabla() { return {OperatorKind::Nabla}; }
    static DifferentialOperator nabla_dagger() { return {OperatorKind::NablaDagger}; }
    static DifferentialOperator nabla0() { return {OperatorKind::Nabla0}; }
    static DifferentialOperator nabla0_dagger() { return {OperatorKind::Nabla0Dagger}; }
    static DifferentialOperator laplacian() { return {OperatorKind::Laplacian}; }
    static DifferentialOperator laplacian0() { return {OperatorKind::Laplacian0}; }
    static DifferentialOperator dilated(double u3, double u4) {
        return {OperatorKind::Dilated, u3, u4};
    }
    static DifferentialOperator dilated_dagger(double u3, double u4) {
        return {OperatorKind::DilatedDagger, u3, u4};
    }

    int order() const noexcept {
        return (kind == OperatorKind::Laplacian || kind == OperatorKind::Laplacian0) ? 2 : 1;
    }

    /// Throws ScaleMismatchError when the operator's scale constraint
    /// (t != 0 for Nabla/Laplacian, t = 0 for the 0-scale family) fails.
    void check_scale(Scale scale) const;
};

/// Coefficients of a first-order operator at the given scale, index l = 0..3
/// for d/dx_{l+1}.
std::array<Hypercomplex, 4> operator_coefficients(const DifferentialOperator& op, Scale scale);

enum class Side { Left, Right };

/// Applies the operator to a jet, dropping the order by op.order(); units
/// multiply each partial from the chosen side.
Jet apply_to_jet(const DifferentialOperator& op, const Jet& jf, Side side);

/// d f / d x_l at p, exact for polynomial inputs.
Hypercomplex partial(const HFunction& f, int l, const Point4& p);

Hypercomplex apply_left(const DifferentialOperator& op, const HFunction& f, const Point4& p);
Hypercomplex apply_right(const DifferentialOperator& op, const HFunction& f, const Point4& p);

/// op1 applied (from the left) to q -> apply_left(op2, f, q), evaluated via a
/// single jet of order op1.order() + op2.order().
Hypercomplex compose_operators(const DifferentialOperator& op1, const DifferentialOperator& op2,
                               const HFunction& f, const Point4& p);

struct Verdict {
    bool pass = false;
    Point4 worst_point{0, 0, 0, 0};
    double residual = 0.0;
};

Verdict is_left_regular(const HFunction& f, const SampleSet& samples, double tol = 1e-9);
Verdict is_right_regular(const HFunction& f, const SampleSet& samples, double tol = 1e-9);
Verdict is_harmonic(const HFunction& f, const SampleSet& samples, double tol = 1e-9);

/// Central finite difference (d f / d x_l)(p), step h; the cross-check oracle
/// for the jet path.
Hypercomplex finite_difference_partial(const HFunction& f, int l, const Point4& p,
                                       double step = 1e-5);

}  // namespace shx
