#include "shx/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace shx {

Hypercomplex embed(const HyperbolicNumber& d) {
    return Hypercomplex(d.scale, d.x, 0.0, d.u, 0.0);
}

HyperbolicNumber hyp_mul(const HyperbolicNumber& p, const HyperbolicNumber& q) {
    require_same_scale(p.scale, q.scale, "hyp_mul");
    const double t = p.scale.t();
    // (x + u j)(x' + u' j) = (x x' + t u u') + (x u' + u x') j
    return {p.scale, p.x * q.x + t * p.u * q.u, p.x * q.u + p.u * q.x};
}

HyperbolicNumber exp_j(Scale scale, double theta) {
    const double t = scale.t();
    if (t < 0.0) {
        const double r = scale.rho();
        return {scale, std::cos(r * theta), std::sin(r * theta) / r};
    }
    if (t > 0.0) {
        const double r = scale.rho();
        return {scale, std::cosh(r * theta), std::sinh(r * theta) / r};
    }
    return {scale, 1.0, theta};
}

HyperbolicNumber exp_j0(int sign, double u) {
    if (sign != 1 && sign != -1) throw Error("exp_j0: sign must be +-1");
    return {Scale(0.0), static_cast<double>(sign), u};
}

namespace {

double wrap_to_2pi(double a) {
    const double twopi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, twopi);
    if (r < 0.0) r += twopi;
    return r;
}

}  // namespace

PolarDecomposition polar_decompose(const HyperbolicNumber& d, double rel_eps) {
    const Hypercomplex h = embed(d);
    const double dt = det(h);
    const double t = d.scale.t();
    if (std::fabs(dt) <= singular_threshold(h, rel_eps)) {
        std::ostringstream os;
        os << "polar_decompose: (" << d.x << ", " << d.u << ") lies on the null cone at t = " << t;
        throw NullConeError(os.str());
    }

    PolarDecomposition out{};
    out.r = std::sqrt(std::fabs(dt));
    out.euclidean_arg = wrap_to_2pi(std::atan2(d.u, d.x));

    if (t < 0.0) {
        const double rho = d.scale.rho();
        double theta = std::atan2(d.u * rho, d.x) / rho;
        const double period = 2.0 * std::numbers::pi / rho;
        theta = std::fmod(theta, period);
        if (theta < 0.0) theta += period;
        out.theta = theta;
        out.sign = 1;
    } else if (t > 0.0) {
        if (dt < 0.0) {
            std::ostringstream os;
            os << "polar_decompose: x^2 < t u^2 at t = " << t
               << "; no cosh-leading branch reconstructs (x = " << d.x << ", u = " << d.u << ")";
            throw NoBranchError(os.str());
        }
        const double rho = d.scale.rho();
        out.sign = d.x >= 0.0 ? 1 : -1;
        out.theta = std::atanh(rho * d.u / d.x) / rho;
    } else {
        out.sign = d.x >= 0.0 ? 1 : -1;
        out.theta = d.u / d.x;
    }

    const HyperbolicNumber back = reconstruct(d.scale, out);
    const double scale_ref = std::max({1.0, std::fabs(d.x), std::fabs(d.u)});
    out.residual = std::max(std::fabs(back.x - d.x), std::fabs(back.u - d.u)) / scale_ref;
    return out;
}

HyperbolicNumber reconstruct(Scale scale, const PolarDecomposition& p) {
    const HyperbolicNumber unit = exp_j(scale, p.theta);
    const double s = p.sign * p.r;
    return {scale, s * unit.x, s * unit.u};
}

bool is_unit(const HyperbolicNumber& d, double tol) {
    return std::fabs(seminorm(embed(d)) - 1.0) <= tol;
}

}  // namespace shx
