#include "shx/operators.hpp"

#include <cmath>

namespace shx {

void DifferentialOperator::check_scale(Scale scale) const {
    const bool zero = scale.is_zero();
    switch (kind) {
        case OperatorKind::Nabla:
        case OperatorKind::NablaDagger:
        case OperatorKind::Laplacian:
            if (zero)
                throw ScaleMismatchError("operator requires t != 0");
            return;
        case OperatorKind::Nabla0:
        case OperatorKind::Nabla0Dagger:
        case OperatorKind::Laplacian0:
        case OperatorKind::Dilated:
        case OperatorKind::DilatedDagger:
            if (!zero)
                throw ScaleMismatchError("operator requires t = 0");
            return;
        default: return;  // Cauchy-Fueter pair is defined for every scale
    }
}

std::array<Hypercomplex, 4> operator_coefficients(const DifferentialOperator& op, Scale scale) {
    op.check_scale(scale);
    const Hypercomplex one = Hypercomplex::unity(scale);
    const Hypercomplex i = basis_unit(scale, BasisUnit::I);
    const Hypercomplex j = basis_unit(scale, BasisUnit::J);
    const Hypercomplex k = basis_unit(scale, BasisUnit::K);
    switch (op.kind) {
        case OperatorKind::CauchyFueter:
        case OperatorKind::Nabla0: return {one, i, j, k};
        case OperatorKind::CauchyFueterDagger:
        case OperatorKind::Nabla0Dagger: return {one, -i, -j, -k};
        case OperatorKind::Nabla: {
            const double c = scale.sign() / scale.rho();
            return {one, i, -c * j, -c * k};
        }
        case OperatorKind::NablaDagger: {
            const double c = scale.sign() / scale.rho();
            return {one, -i, c * j, c * k};
        }
        case OperatorKind::Dilated: return {one, i, op.u3 * j, op.u4 * k};
        case OperatorKind::DilatedDagger: return {one, -i, -op.u3 * j, -op.u4 * k};
        case OperatorKind::Laplacian:
        case OperatorKind::Laplacian0:
            throw Error("operator_coefficients: Laplacians are second order");
    }
    throw Error("unreachable operator kind");
}

Jet apply_to_jet(const DifferentialOperator& op, const Jet& jf, Side side) {
    const Scale scale = jf.scale();
    op.check_scale(scale);
    if (jf.order() < op.order()) throw Error("apply_to_jet: jet order too small");

    if (op.order() == 2) {
        // Second-order operators have real coefficients, so the side is moot.
        Jet out = jf.partial(1).partial(1) + jf.partial(2).partial(2);
        if (op.kind == OperatorKind::Laplacian) {
            const double s = scale.sign();
            out = out + (-s) * (jf.partial(3).partial(3) + jf.partial(4).partial(4));
        }
        return out;
    }

    const auto coeff = operator_coefficients(op, scale);
    Jet out(scale, jf.order() - 1);
    for (int l = 1; l <= 4; ++l) {
        const Jet dl = jf.partial(l);
        out = out + (side == Side::Left ? dl.left_mul(coeff[static_cast<std::size_t>(l - 1)])
                                        : dl.right_mul(coeff[static_cast<std::size_t>(l - 1)]));
    }
    return out;
}

Hypercomplex partial(const HFunction& f, int l, const Point4& p) {
    return f.eval_jet(p, 1).partial(l).value();
}

Hypercomplex apply_left(const DifferentialOperator& op, const HFunction& f, const Point4& p) {
    return apply_to_jet(op, f.eval_jet(p, op.order()), Side::Left).value();
}

Hypercomplex apply_right(const DifferentialOperator& op, const HFunction& f, const Point4& p) {
    return apply_to_jet(op, f.eval_jet(p, op.order()), Side::Right).value();
}

Hypercomplex compose_operators(const DifferentialOperator& op1, const DifferentialOperator& op2,
                               const HFunction& f, const Point4& p) {
    const Jet jf = f.eval_jet(p, op1.order() + op2.order());
    const Jet inner = apply_to_jet(op2, jf, Side::Left);
    return apply_to_jet(op1, inner, Side::Left).value();
}

namespace {

DifferentialOperator laplacian_for(Scale scale) {
    return scale.is_zero() ? DifferentialOperator::laplacian0() : DifferentialOperator::laplacian();
}

DifferentialOperator nabla_for(Scale scale) {
    return scale.is_zero() ? DifferentialOperator::nabla0() : DifferentialOperator::nabla();
}

bool lex_less(const Point4& p, const Point4& q) {
    for (int l = 0; l < 4; ++l) {
        if (p[l] != q[l]) return p[l] < q[l];
    }
    return false;
}

Verdict sweep(const HFunction& f, const SampleSet& samples, double tol,
              const DifferentialOperator& op, Side side) {
    Verdict v;
    v.pass = true;
    bool first = true;
    for (const Point4& p : sample_points(samples)) {
        const Jet jf = f.eval_jet(p, op.order());
        const double res = apply_to_jet(op, jf, side).value().max_abs();
        // Ties break toward the lexicographically smallest point so the
        // reported witness does not depend on sweep scheduling.
        if (first || res > v.residual ||
            (res == v.residual && lex_less(p, v.worst_point))) {
            v.residual = res;
            v.worst_point = p;
            first = false;
        }
    }
    v.pass = v.residual <= tol;
    return v;
}

}  // namespace

Verdict is_left_regular(const HFunction& f, const SampleSet& samples, double tol) {
    return sweep(f, samples, tol, nabla_for(f.scale()), Side::Left);
}

Verdict is_right_regular(const HFunction& f, const SampleSet& samples, double tol) {
    return sweep(f, samples, tol, nabla_for(f.scale()), Side::Right);
}

Verdict is_harmonic(const HFunction& f, const SampleSet& samples, double tol) {
    return sweep(f, samples, tol, laplacian_for(f.scale()), Side::Left);
}

Hypercomplex finite_difference_partial(const HFunction& f, int l, const Point4& p, double step) {
    Point4 hi = p, lo = p;
    hi[l - 1] += step;
    lo[l - 1] -= step;
    return scalar_mul(1.0 / (2.0 * step), f.eval(hi) - f.eval(lo));
}

}  // namespace shx
