#include "shx/regular.hpp"

#include <cmath>

#include "shx/detail/sym.hpp"

namespace shx {

Hypercomplex eta(int l, Scale scale, const Point4& p) {
    if (l < 2 || l > 4) throw Error("eta index must be in 2..4");
    if (l == 2) return Hypercomplex(scale, p[1], -p[0], 0, 0);
    // same rounding order as the HFunction path: x1 * (sgn(t)/rho)
    const double c = scale.is_zero() ? p[0] * -1.0 : p[0] * (scale.sign() / scale.rho());
    if (l == 3) return Hypercomplex(scale, p[2], 0, c, 0);
    return Hypercomplex(scale, p[3], 0, 0, c);
}

Hypercomplex zeta(int l, Scale scale, const Point4& p) {
    if (l < 2 || l > 4) throw Error("zeta index must be in 2..4");
    if (l == 2) return Hypercomplex(scale, p[1], -p[0], 0, 0);
    if (l == 3) return Hypercomplex(scale, p[2], 0, -p[0], 0);
    return Hypercomplex(scale, p[3], 0, 0, -p[0]);
}

Hypercomplex sym_product(std::span<const Hypercomplex> hs, int max_degree) {
    if (hs.empty()) throw DegreeError("sym_product of an empty list");
    if (static_cast<int>(hs.size()) > max_degree) {
        throw DegreeError("sym_product: " + std::to_string(hs.size()) +
                          " factors exceed the cap " + std::to_string(max_degree));
    }
    const Scale scale = hs.front().scale();
    // Group exactly equal elements; duplicate factors then cost multiset
    // arrangements instead of full permutations.
    std::vector<std::pair<Hypercomplex, int>> groups;
    for (const Hypercomplex& h : hs) {
        require_same_scale(scale, h.scale(), "sym_product");
        bool found = false;
        for (auto& g : groups) {
            if (g.first == h) {
                ++g.second;
                found = true;
                break;
            }
        }
        if (!found) groups.emplace_back(h, 1);
    }
    return detail::symmetrized_multiset_product(groups);
}

Hypercomplex sym_power_product(std::span<const std::pair<Hypercomplex, int>> factors,
                               int max_degree) {
    int total = 0;
    std::vector<std::pair<Hypercomplex, int>> groups;
    for (const auto& [h, n] : factors) {
        if (n < 0) throw DegreeError("sym_power_product: negative multiplicity");
        total += n;
        if (n > 0) groups.emplace_back(h, n);
    }
    if (total == 0) throw DegreeError("sym_power_product of an empty multiset");
    if (total > max_degree) {
        throw DegreeError("sym_power_product: total multiplicity " + std::to_string(total) +
                          " exceeds the cap " + std::to_string(max_degree));
    }
    for (std::size_t g = 1; g < groups.size(); ++g)
        require_same_scale(groups[0].first.scale(), groups[g].first.scale(), "sym_power_product");
    return detail::symmetrized_multiset_product(groups);
}

namespace {

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

double eta_norm_bound(const MultiIndex& n, Scale scale, const Point4& p) {
    const double b2 = std::sqrt(p[0] * p[0] + p[1] * p[1]);
    double b3 = 0.0, b4 = 0.0;
    if (scale.is_zero()) {
        b3 = std::fabs(p[2]);
        b4 = std::fabs(p[3]);
    } else {
        const double s = scale.sign();
        b3 = std::sqrt(std::fabs(p[2] * p[2] - s * p[0] * p[0]));
        b4 = std::sqrt(std::fabs(p[3] * p[3] - s * p[0] * p[0]));
    }
    return ipow(b2, n.n1) * ipow(b3, n.n2) * ipow(b4, n.n3);
}

namespace {

Hypercomplex eta_power_value(const MultiIndex& n, Scale scale, const Point4& p) {
    if (n.total() == 0) return Hypercomplex::unity(scale);
    std::vector<std::pair<Hypercomplex, int>> groups;
    if (n.n1 > 0) groups.emplace_back(eta(2, scale, p), n.n1);
    if (n.n2 > 0) groups.emplace_back(eta(3, scale, p), n.n2);
    if (n.n3 > 0) groups.emplace_back(eta(4, scale, p), n.n3);
    return detail::symmetrized_multiset_product(groups);
}

std::vector<MultiIndex> multi_indices_up_to(int max_total, bool include_zero) {
    std::vector<MultiIndex> out;
    for (int d = include_zero ? 0 : 1; d <= max_total; ++d)
        for (int n1 = 0; n1 <= d; ++n1)
            for (int n2 = 0; n2 <= d - n1; ++n2) out.push_back({n1, n2, d - n1 - n2});
    return out;
}

}  // namespace

NormBoundReport check_eta_norm_bound(Scale scale, int max_total, int samples, std::uint64_t seed,
                                     double tol, double box_radius) {
    const auto indices = multi_indices_up_to(max_total, false);
    CounterRng rng(seed);
    NormBoundReport report;
    for (int k = 0; k < samples; ++k) {
        const MultiIndex n = indices[rng.next_u64() % indices.size()];
        Point4 p;
        for (double& v : p) v = rng.next_in(-box_radius, box_radius);
        const double excess = seminorm(eta_power_value(n, scale, p)) - eta_norm_bound(n, scale, p);
        ++report.checked;
        if (excess > tol) ++report.violations;
        if (excess > report.worst_excess) {
            report.worst_excess = excess;
            report.worst_n = n;
            report.worst_p = p;
        }
    }
    return report;
}

CoefficientMap taylor_coefficients(const HFunction& f, Scale scale, int maxdeg) {
    require_same_scale(f.scale(), scale, "taylor_coefficients");
    const Jet j = f.eval_jet({0, 0, 0, 0}, maxdeg);
    CoefficientMap out;
    for (const MultiIndex& n : multi_indices_up_to(maxdeg, true)) {
        // Taylor coefficients divide by e!, which here is exactly n!, so the
        // jet coefficient at (0, n1, n2, n3) *is* f_n.
        out.emplace(n, j.coef({0, n.n1, n.n2, n.n3}));
    }
    return out;
}

Hypercomplex RegularSeries::evaluate(const Point4& p) const {
    Hypercomplex acc = constant;
    for (const auto& [n, c] : coefficients) acc = acc + mul(eta_power_value(n, scale, p), c);
    return acc;
}

HFunction RegularSeries::to_function(int max_degree) const {
    HFunction f = HFunction::constant(constant);
    for (const auto& [n, c] : coefficients)
        f = f + HFunction::eta_power(scale, n, max_degree) * HFunction::constant(c);
    return f;
}

ExpandResult expand(const HFunction& f, Scale scale, int maxdeg, const SampleSet& samples,
                    double regularity_tol) {
    require_same_scale(f.scale(), scale, "expand");
    const Verdict reg = is_left_regular(f, samples, regularity_tol);
    if (!reg.pass) {
        throw NotLeftRegularError("expand: input is not left regular (residual " +
                                      std::to_string(reg.residual) + ")",
                                  reg.worst_point, reg.residual);
    }

    CoefficientMap coeffs = taylor_coefficients(f, scale, maxdeg);
    RegularSeries series{scale, coeffs.at(MultiIndex{0, 0, 0}), {}};
    for (const auto& [n, c] : coeffs) {
        if (n.total() == 0) continue;
        if (c.max_abs() <= 1e-12) continue;  // extraction dust on polynomials
        series.coefficients.emplace(n, c);
    }

    double residual = 0.0;
    for (const Point4& p : sample_points(samples))
        residual = std::max(residual, (f.eval(p) - series.evaluate(p)).max_abs());
    return {std::move(series), residual};
}

Hypercomplex remainder_integral(const HFunction& f, int n, const Point4& w,
                                const QuadratureOptions& opts) {
    if (n < 2 || n > 4) throw Error("remainder_integral: n must be in 2..4");
    const Scale scale = f.scale();

    const auto integrand = [&](double s) {
        const Point4 q{s * w[0], s * w[1], s * w[2], s * w[3]};
        return partial(f, n, q);
    };
    const auto simpson = [&](int panels) {
        const double h = 1.0 / panels;
        Hypercomplex acc = Hypercomplex::zero(scale);
        for (int k = 0; k < panels; ++k) {
            const double a = k * h;
            const Hypercomplex fa = integrand(a);
            const Hypercomplex fm = integrand(a + 0.5 * h);
            const Hypercomplex fb = integrand(a + h);
            acc = acc + scalar_mul(h / 6.0, fa + scalar_mul(4.0, fm) + fb);
        }
        return acc;
    };

    Hypercomplex estimate = simpson(opts.initial_panels);
    for (int panels = 2 * opts.initial_panels; panels <= opts.max_panels; panels *= 2) {
        const Hypercomplex refined = simpson(panels);
        const double change = (refined - estimate).max_abs();
        estimate = refined;
        if (change < opts.tol) break;
    }
    return estimate;
}

}  // namespace shx
