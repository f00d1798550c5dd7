// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Exit code is the number of failed criteria.
//
// Criterion 9 note: the eta-monomial norm bound is a theorem only for
// t <= 0. At t in {1, 2} the suite keeps the assertion as specified and it
// fails, printing the concrete counterexample it found. See README.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shx/cli.hpp"
#include "shx/diagnostics.hpp"
#include "shx/hyperbolic.hpp"
#include "shx/realization.hpp"
#include "shx/regular.hpp"
#include "shx/serialization.hpp"

using namespace shx;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::ostringstream notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes << "    FAILED: " << what << "\n";
        }
    }
    void note(const std::string& what) { notes << "    note: " << what << "\n"; }
};

std::vector<Criterion> g_results;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

Hypercomplex random_element(Scale scale, CounterRng& rng, double radius = 2.0) {
    return Hypercomplex(scale, rng.next_in(-radius, radius), rng.next_in(-radius, radius),
                        rng.next_in(-radius, radius), rng.next_in(-radius, radius));
}

Point4 random_point(CounterRng& rng, double radius = 1.0) {
    return {rng.next_in(-radius, radius), rng.next_in(-radius, radius),
            rng.next_in(-radius, radius), rng.next_in(-radius, radius)};
}

double diff(const Hypercomplex& p, const Hypercomplex& q) { return (p - q).max_abs(); }

HFunction random_polynomial(Scale scale, CounterRng& rng, int deg, int terms) {
    HFunction f = HFunction::constant(Hypercomplex::zero(scale));
    for (int k = 0; k < terms; ++k) {
        Exponent e{0, 0, 0, 0};
        int budget = deg;
        for (int l = 0; l < 4; ++l) {
            const int p = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(budget + 1));
            e[static_cast<std::size_t>(l)] = p;
            budget -= p;
        }
        f = f + HFunction::monomial(scale, e, random_element(scale, rng, 1.0));
    }
    return f;
}

Hypercomplex naive_sym_product(const std::vector<Hypercomplex>& hs) {
    std::vector<std::size_t> idx(hs.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    Hypercomplex acc = Hypercomplex::zero(hs.front().scale());
    long long count = 0;
    do {
        Hypercomplex prod = hs[idx[0]];
        for (std::size_t k = 1; k < idx.size(); ++k) prod = mul(prod, hs[idx[k]]);
        acc = acc + prod;
        ++count;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return scalar_mul(1.0 / static_cast<double>(count), acc);
}

std::vector<MultiIndex> indices_up_to(int max_total) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= max_total; ++d)
        for (int n1 = 0; n1 <= d; ++n1)
            for (int n2 = 0; n2 <= d - n1; ++n2) out.push_back({n1, n2, d - n1 - n2});
    return out;
}

const std::vector<double>& all_scales() {
    static const std::vector<double> s{-2.0, -1.0, -0.25, 0.0, 0.5, 1.0, 2.5, 3.0};
    return s;
}

// ---------------------------------------------------------------------------

void criterion_1(Criterion& c) {
    const double t0 = now_seconds();
    for (double t : {-1.0, 0.0, 1.0, 2.5, -0.25}) {
        const Scale s(t);
        const MulTable table = mul_table(s);
        const SymbolicTable& sym = symbolic_mul_table();
        for (int r = 0; r < 4; ++r) {
            for (int col = 0; col < 4; ++col) {
                const Hypercomplex numeric = mul(basis_unit(s, static_cast<BasisUnit>(r)),
                                                 basis_unit(s, static_cast<BasisUnit>(col)));
                c.check(table[r][col] == numeric,
                        "symbolic/numeric mismatch at t=" + std::to_string(t));
                c.check(evaluate_entry(sym[r][col], s) == numeric, "entry evaluation mismatch");
            }
        }
        const Hypercomplex i = basis_unit(s, BasisUnit::I);
        const Hypercomplex j = basis_unit(s, BasisUnit::J);
        const Hypercomplex k = basis_unit(s, BasisUnit::K);
        c.check(mul(i, j) == k && mul(k, i) == j, "cyclic relations");
        c.check(mul(j, k) == scalar_mul(-t, i) && mul(k, j) == scalar_mul(t, i),
                "jk = -t i, kj = t i");
        c.check(mul(j, j) == scalar_mul(t, Hypercomplex::unity(s)), "j^2 = t");
    }
    // Hamilton at t = -1, split at t = 1, degenerate products at t = 0
    const Scale q(-1.0);
    c.check(mul_table(q)[2][3] == basis_unit(q, BasisUnit::I), "Hamilton jk = i");
    c.check(mul_table(q)[2][2] == neg(Hypercomplex::unity(q)), "Hamilton j^2 = -1");
    const Scale sp(1.0);
    c.check(mul_table(sp)[2][2] == Hypercomplex::unity(sp), "split j^2 = 1");
    const Scale z(0.0);
    c.check(mul_table(z)[2][3] == Hypercomplex::zero(z), "j0 k0 = 0");
    c.check(mul_table(z)[3][2] == Hypercomplex::zero(z), "k0 j0 = 0");
    const double dt = now_seconds() - t0;
    c.check(dt < 1.0, "runtime " + std::to_string(dt) + " s >= 1 s");
}

void criterion_2(Criterion& c) {
    CounterRng rng(20001);
    double worst = 0.0;
    for (double t : all_scales()) {
        const Scale s(t);
        for (int k = 0; k < 1000; ++k) {
            const Hypercomplex h1 = random_element(s, rng);
            const Hypercomplex h2 = random_element(s, rng);
            const double em =
                (realize(mul(h1, h2)) - realize(h1) * realize(h2)).cwiseAbs().maxCoeff();
            const double ea =
                (realize(add(h1, h2)) - (realize(h1) + realize(h2))).cwiseAbs().maxCoeff();
            worst = std::max({worst, em, ea});
        }
    }
    c.check(worst <= 1e-12, "homomorphism error " + std::to_string(worst));
}

void criterion_3(Criterion& c) {
    CounterRng rng(30001);
    double worst = 0.0;
    for (double t : all_scales()) {
        const Scale s(t);
        int accepted = 0;
        while (accepted < 1000) {
            const Hypercomplex h = random_element(s, rng);
            if (classify(h).part != InvertibilityClass::GroupPart) continue;
            if (std::fabs(det(h)) <
                1e-6 * (1.0 + std::norm(h.a()) + std::fabs(t) * std::norm(h.b())))
                continue;  // keep the conditioning honest
            const Hypercomplex inv = inverse(h);
            worst = std::max(worst, diff(mul(inv, h), Hypercomplex::unity(s)));
            worst = std::max(worst, diff(mul(h, inv), Hypercomplex::unity(s)));
            ++accepted;
        }
    }
    c.check(worst <= 1e-10, "inverse residual " + std::to_string(worst));

    for (double t : {-2.0, -1.0, -0.25}) {
        const Scale s(t);
        for (int k = 0; k < 1000; ++k) {
            Hypercomplex h = random_element(s, rng);
            if (h.max_abs() == 0.0) continue;
            c.check(classify(h).part == InvertibilityClass::GroupPart,
                    "nonzero element not invertible at t<0");
        }
    }
    // constructed null vectors for t >= 0
    for (double t : {0.0, 1.0, 2.5}) {
        const Scale s(t);
        for (int k = 0; k < 200; ++k) {
            const Complex b(rng.next_in(-2, 2), rng.next_in(-2, 2));
            const double phase = rng.next_in(0, 6.283185307179586);
            const Complex a = t == 0.0 ? Complex(0, 0)
                                       : std::sqrt(t) * std::abs(b) *
                                             Complex(std::cos(phase), std::sin(phase));
            const Hypercomplex h = Hypercomplex::from_pair(s, a, b);
            c.check(classify(h).part == InvertibilityClass::SemigroupPart,
                    "constructed null vector not singular");
            bool threw = false;
            try {
                (void)inverse(h);
            } catch (const SingularError&) {
                threw = true;
            }
            c.check(threw, "inverse accepted a null vector");
        }
    }
}

void criterion_4(Criterion& c) {
    CounterRng rng(40001);
    double worst = 0.0;
    for (double t : all_scales()) {
        const Scale s(t);
        for (int k = 0; k < 1000; ++k) {
            const Hypercomplex h = random_element(s, rng);
            const Hypercomplex g = random_element(s, rng);
            if (conj(conj(h)) != h) c.check(false, "involution not exact");
            worst = std::max(worst, diff(conj(mul(h, g)), mul(conj(g), conj(h))));
            worst = std::max(worst,
                             diff(mul(h, conj(h)), scalar_mul(det(h), Hypercomplex::unity(s))));
            worst = std::max(worst,
                             diff(mul(conj(h), h), scalar_mul(det(h), Hypercomplex::unity(s))));
        }
    }
    c.check(worst <= 1e-12, "conjugation law error " + std::to_string(worst));
}

void criterion_5(Criterion& c) {
    CounterRng rng(50001);
    double worst = 0.0;
    for (double t : all_scales()) {
        const Scale s(t);
        for (int k = 0; k < 1000; ++k) {
            const Hypercomplex h1 = random_element(s, rng);
            const Hypercomplex h2 = random_element(s, rng);
            worst = std::max(worst, std::fabs(bilinear(h1, h2) - bilinear(h2, h1)));
            worst = std::max(worst, std::fabs(bilinear(h1, h1) - det(h1)));
        }
    }
    c.check(worst <= 1e-12, "symmetry / diagonal error " + std::to_string(worst));

    for (double t : {-2.0, -1.0, -0.25}) {
        const Scale s(t);
        for (int k = 0; k < 10000; ++k) {
            const Hypercomplex h = random_element(s, rng);
            if (h.max_abs() < 1e-12) continue;
            c.check(bilinear(h, h) > 0.0, "form not positive definite at t<0");
        }
    }

    for (double t : {0.0, 1.0}) {
        const auto cs = find_printed_cauchy_schwarz_violation(Scale(t), 10000, 50002);
        c.check(cs.found, "no squared-RHS violation found at t=" + std::to_string(t));
    }
    const auto tri1 = find_triangle_violation(Scale(1.0), 10000, 50003);
    c.check(tri1.found, "no triangle violation found at t=1");
    const auto tri0 = find_triangle_violation(Scale(0.0), 10000, 50003);
    c.check(!tri0.found, "triangle violation reported at t=0, impossible for a PSD form");
    c.note("t=0 triangle search is empty as it must be: <.,.> at t=0 is positive "
           "semidefinite, so only the squared-RHS inequality admits counterexamples there");
}

void criterion_6(Criterion& c) {
    const double t0 = now_seconds();
    CounterRng rng(60001);
    double worst = 0.0;
    for (double t : {-2.0, -1.0, 0.5, 1.0, 3.0}) {
        const Scale s(t);
        for (int fidx = 0; fidx < 20; ++fidx) {
            const HFunction f = random_polynomial(s, rng, 3, 6);
            for (int k = 0; k < 100; ++k) {
                const Point4 p = random_point(rng);
                const Hypercomplex lhs = compose_operators(
                    DifferentialOperator::nabla_dagger(), DifferentialOperator::nabla(), f, p);
                const Hypercomplex rhs = apply_left(DifferentialOperator::laplacian(), f, p);
                worst = std::max(worst, diff(lhs, rhs));
            }
        }
    }
    const Scale z(0.0);
    for (int fidx = 0; fidx < 20; ++fidx) {
        const HFunction f = random_polynomial(z, rng, 3, 6);
        for (int k = 0; k < 100; ++k) {
            const Point4 p = random_point(rng);
            const Hypercomplex lhs = compose_operators(DifferentialOperator::nabla0_dagger(),
                                                       DifferentialOperator::nabla0(), f, p);
            worst =
                std::max(worst, diff(lhs, apply_left(DifferentialOperator::laplacian0(), f, p)));
        }
    }
    for (int pair = 0; pair < 10; ++pair) {
        double u3 = 0.0, u4 = 0.0;
        while (std::fabs(u3) < 0.1) u3 = rng.next_in(-3, 3);
        while (std::fabs(u4) < 0.1) u4 = rng.next_in(-3, 3);
        const HFunction f = random_polynomial(z, rng, 3, 6);
        for (int k = 0; k < 50; ++k) {
            const Point4 p = random_point(rng);
            const Hypercomplex lhs = compose_operators(DifferentialOperator::dilated_dagger(u3, u4),
                                                       DifferentialOperator::dilated(u3, u4), f, p);
            worst =
                std::max(worst, diff(lhs, apply_left(DifferentialOperator::laplacian0(), f, p)));
        }
    }
    c.check(worst <= 1e-9, "factorization residual " + std::to_string(worst));
    const double dt = now_seconds() - t0;
    c.check(dt < 30.0, "runtime " + std::to_string(dt) + " s >= 30 s");
    c.notes << "    residual " << worst << ", " << dt << " s\n";
}

void criterion_7(Criterion& c) {
    CounterRng rng(70001);
    double worst = 0.0;
    const auto indices = indices_up_to(4);
    for (double t : {-2.0, -1.0, 0.5, 1.0, 3.0, 0.0}) {
        const Scale s(t);
        const DifferentialOperator nab =
            s.is_zero() ? DifferentialOperator::nabla0() : DifferentialOperator::nabla();
        const DifferentialOperator lap =
            s.is_zero() ? DifferentialOperator::laplacian0() : DifferentialOperator::laplacian();
        std::vector<HFunction> funcs;
        for (int l = 2; l <= 4; ++l) funcs.push_back(HFunction::eta(s, l));
        for (const MultiIndex& n : indices) funcs.push_back(HFunction::eta_power(s, n));
        for (const HFunction& f : funcs) {
            for (int k = 0; k < 100; ++k) {
                const Point4 p = random_point(rng);
                const Jet jf = f.eval_jet(p, 2);
                worst = std::max(worst, apply_to_jet(nab, jf, Side::Left).value().max_abs());
                worst = std::max(worst, apply_to_jet(nab, jf, Side::Right).value().max_abs());
                worst = std::max(worst, apply_to_jet(lap, jf, Side::Left).value().max_abs());
            }
        }
    }
    c.check(worst <= 1e-9, "regularity residual " + std::to_string(worst));

    // zeta_3, zeta_4 fail left regularity with residual exactly |-1 - sgn(t)/sqrt|t||
    const SampleSet samples{RegionSpec::unit_box(), 100, 70002};
    for (double t : {-2.0, -1.0, 0.5, 1.0, 3.0}) {
        const Scale s(t);
        const double expected = std::fabs(-1.0 - s.sign() / s.rho());
        for (int l : {3, 4}) {
            const Verdict v = is_left_regular(HFunction::zeta(s, l), samples);
            c.check(std::fabs(v.residual - expected) <= 1e-10,
                    "zeta residual != |rho| at t=" + std::to_string(t));
            c.check(v.pass == (expected <= 1e-9), "zeta verdict wrong (t=-1 is the regular case)");
        }
    }
}

void criterion_8(Criterion& c) {
    CounterRng rng(80001);
    double worst = 0.0;
    for (double t : {-1.0, 1.0}) {
        const Scale s(t);
        int inputs = 0;
        for (const MultiIndex& n : indices_up_to(6)) {
            if (n.total() < 1) continue;
            for (int trial = 0; trial < 3; ++trial) {
                const Hypercomplex a = random_element(s, rng, 1.0);
                const Hypercomplex b = random_element(s, rng, 1.0);
                const Hypercomplex cc = random_element(s, rng, 1.0);
                std::vector<std::pair<Hypercomplex, int>> groups{{a, n.n1}, {b, n.n2}, {cc, n.n3}};
                std::vector<Hypercomplex> expanded;
                expanded.insert(expanded.end(), n.n1, a);
                expanded.insert(expanded.end(), n.n2, b);
                expanded.insert(expanded.end(), n.n3, cc);
                worst =
                    std::max(worst, diff(sym_power_product(groups), naive_sym_product(expanded)));
                ++inputs;
            }
        }
        c.check(inputs >= 200, "fewer than 200 inputs exercised");
    }
    c.check(worst <= 1e-12, "fast path vs naive error " + std::to_string(worst));
}

void criterion_9(Criterion& c) {
    for (double t : {-1.0, 0.0, 1.0, 2.0}) {
        const NormBoundReport r = check_eta_norm_bound(Scale(t), 4, 10000, 90001);
        std::ostringstream os;
        os.precision(10);
        os << "t=" << t << ": " << r.violations << "/" << r.checked << " violations, worst excess "
           << r.worst_excess;
        if (r.violations > 0)
            os << " at n=" << r.worst_n.str() << " p=(" << r.worst_p[0] << ", " << r.worst_p[1]
               << ", " << r.worst_p[2] << ", " << r.worst_p[3] << ")";
        c.notes << "    " << os.str() << "\n";
        c.check(r.violations == 0, "norm bound violated at t=" + std::to_string(t) +
                                       " (the bound is only a theorem for t <= 0)");
    }
}

void criterion_10(Criterion& c) {
    const double t0 = now_seconds();
    CounterRng rng(100001);
    double worst_coeff = 0.0, worst_res = 0.0;
    for (double t : {-1.0, 0.5, 1.0, 0.0}) {
        const Scale s(t);
        for (int trial = 0; trial < 50; ++trial) {
            RegularSeries original{s, random_element(s, rng, 1.0), {}};
            int placed = 0;
            for (const MultiIndex& n : indices_up_to(3)) {
                if (n.total() < 1) continue;
                if (rng.next_unit() < 0.55) continue;
                original.coefficients.emplace(n, random_element(s, rng, 1.0));
                ++placed;
            }
            if (placed == 0)
                original.coefficients.emplace(MultiIndex{1, 0, 0}, random_element(s, rng, 1.0));

            const SampleSet samples{RegionSpec::unit_box(), 50,
                                    100100 + static_cast<std::uint64_t>(trial)};
            const ExpandResult r = expand(original.to_function(), s, 3, samples);
            worst_res = std::max(worst_res, r.residual);
            worst_coeff = std::max(worst_coeff, diff(r.series.constant, original.constant));
            for (const auto& [n, coeff] : original.coefficients) {
                if (coeff.max_abs() <= 1e-12) continue;
                const auto it = r.series.coefficients.find(n);
                if (it == r.series.coefficients.end()) {
                    c.check(false, "coefficient " + n.str() + " lost in the round trip");
                    continue;
                }
                worst_coeff = std::max(worst_coeff, diff(it->second, coeff));
            }
        }
    }
    c.check(worst_coeff <= 1e-8, "coefficient recovery error " + std::to_string(worst_coeff));
    c.check(worst_res <= 1e-8, "evaluation residual " + std::to_string(worst_res));

    bool rejected = false;
    try {
        (void)expand(HFunction::zeta(Scale(1.0), 3), Scale(1.0), 3,
                     SampleSet{RegionSpec::unit_box(), 50, 100200});
    } catch (const NotLeftRegularError&) {
        rejected = true;
    }
    c.check(rejected, "zeta_3 not rejected");
    const double dt = now_seconds() - t0;
    c.check(dt < 60.0, "runtime " + std::to_string(dt) + " s >= 60 s");
    c.notes << "    coeff err " << worst_coeff << ", residual " << worst_res << ", " << dt
            << " s\n";
}

void criterion_11(Criterion& c) {
    CounterRng rng(110001);
    double worst = 0.0;
    int fcount = 0;
    for (double t : {-1.0, 1.0}) {
        const Scale s(t);
        std::vector<HFunction> funcs;
        for (const MultiIndex& n : indices_up_to(2))
            if (n.total() >= 1) funcs.push_back(HFunction::eta_power(s, n));
        funcs.push_back(HFunction::eta(s, 2) * HFunction::constant(random_element(s, rng, 1.0)));
        // 10 functions per scale, 20 total
        funcs.resize(10, funcs.back());
        fcount += static_cast<int>(funcs.size());
        for (const HFunction& f : funcs) {
            const Hypercomplex f0 = f.eval({0, 0, 0, 0});
            for (int k = 0; k < 50; ++k) {
                const Point4 w = random_point(rng);
                Hypercomplex rhs = Hypercomplex::zero(s);
                for (int nidx = 2; nidx <= 4; ++nidx)
                    rhs = rhs + mul(eta(nidx, s, w), remainder_integral(f, nidx, w));
                worst = std::max(worst, diff(f.eval(w) - f0, rhs));
            }
        }
    }
    c.check(fcount == 20, "function count");
    c.check(worst <= 1e-6, "remainder identity residual " + std::to_string(worst));
    c.notes << "    residual " << worst << "\n";
}

void criterion_12(Criterion& c) {
    CounterRng rng(120001);
    double worst = 0.0;
    for (double t : {-1.0, -0.25, 1.0, 2.0}) {
        const Scale s(t);
        int done = 0;
        while (done < 1000) {
            const HyperbolicNumber d{s, rng.next_in(-3, 3), rng.next_in(-3, 3)};
            const double dd = d.x * d.x - t * d.u * d.u;
            if (std::fabs(dd) < 1e-6) continue;
            if (t > 0.0 && dd < 0.0) continue;  // NoBranch sector, rejected below
            const PolarDecomposition p = polar_decompose(d);
            const HyperbolicNumber back = reconstruct(s, p);
            const double ref = std::max({1.0, std::fabs(d.x), std::fabs(d.u)});
            worst = std::max(worst,
                             std::max(std::fabs(back.x - d.x), std::fabs(back.u - d.u)) / ref);
            ++done;
        }
        for (int k = 0; k < 1000; ++k) {
            const double theta = rng.next_in(-3, 3);
            const double n = seminorm(embed(exp_j(s, theta)));
            c.check(std::fabs(n - 1.0) <= 1e-12, "unit seminorm off at t=" + std::to_string(t));
        }
        bool threw = false;
        try {
            const HyperbolicNumber nullish =
                t > 0.0 ? HyperbolicNumber{s, std::sqrt(t) * 1.5, 1.5} : HyperbolicNumber{s, 0, 0};
            (void)polar_decompose(nullish);
        } catch (const NullConeError&) {
            threw = true;
        }
        c.check(threw, "null-cone input accepted at t=" + std::to_string(t));
    }
    c.check(worst <= 1e-10, "reconstruction error " + std::to_string(worst));

    bool no_branch = false;
    try {
        (void)polar_decompose({Scale(1.0), 0.2, 1.0});
    } catch (const NoBranchError&) {
        no_branch = true;
    }
    c.check(no_branch, "timelike sector at t>0 not rejected");
}

std::string run_binary(const std::string& bin, const std::string& args, int& exit_code) {
    const std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_13(Criterion& c) {
    const std::vector<std::vector<std::string>> cmds = {
        {"table", "--t", "-1"},
        {"table", "--t", "2.5"},
        {"eval", "--t", "-1", "--expr", "i*j"},
        {"eval", "--t", "1", "--fn", "eta3", "--point", "1,0,2,0"},
        {"check", "--t", "1", "--fn", "eta2", "--mode", "left", "--seed", "7"},
        {"check", "--t", "0.5", "--fn", "zeta3", "--mode", "right", "--seed", "7"},
        {"expand", "--t", "1", "--fn", "eta^1,1,0", "--seed", "9", "--maxdeg", "3"},
        {"polar", "--t", "2", "--x", "3", "--u", "1"},
        {"oracle", "--t", "-1", "--fn", "eta^0,1,1", "--seed", "4", "--samples", "20"},
    };
    for (const auto& cmd : cmds) {
        const CliResult a = run_cli(cmd);
        const CliResult b = run_cli(cmd);
        c.check(a.out == b.out && a.exit_code == b.exit_code,
                "in-process reruns differ for subcommand " + cmd[0]);
        c.check(!a.out.empty(), "empty output for subcommand " + cmd[0]);
    }

    const char* bin = std::getenv("SHX_CLI_BIN");
    if (bin == nullptr) {
        c.note("SHX_CLI_BIN not set; binary-level rerun skipped (in-process path covered)");
        return;
    }
    for (const auto& cmd : cmds) {
        std::string args;
        for (const std::string& a : cmd) {
            args += "'";
            args += a;
            args += "' ";
        }
        int code_a = 0, code_b = 0;
        const std::string out_a = run_binary(bin, args, code_a);
        const std::string out_b = run_binary(bin, args, code_b);
        c.check(!out_a.empty() && out_a == out_b && code_a == code_b,
                "binary reruns differ for subcommand " + cmd[0]);
        const CliResult in_process = run_cli(cmd);
        c.check(out_a == in_process.out && code_a == in_process.exit_code,
                "binary output differs from the in-process run for " + cmd[0]);
    }
}

void run(int id, const std::string& title, void (*fn)(Criterion&)) {
    Criterion c{id, title};
    const double t0 = now_seconds();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double dt = now_seconds() - t0;
    std::printf("[%2d] %s  %s (%.2f s)\n", id, c.pass ? "PASS" : "FAIL", title.c_str(), dt);
    std::fputs(c.notes.str().c_str(), stdout);
    g_results.push_back(std::move(c));
}

}  // namespace

int main() {
    run(1, "multiplication tables exact at t in {-1, 0, 1, 2.5, -0.25}", criterion_1);
    run(2, "realization is an additive/multiplicative homomorphism (1e-12)", criterion_2);
    run(3, "inverses on the group part, classification at every signature", criterion_3);
    run(4, "conjugation: involution, anti-multiplicativity, h h^dag = det (1e-12)", criterion_4);
    run(5, "bilinear form: symmetry, diagonal = det, definiteness, counterexamples", criterion_5);
    run(6, "operator factorization nabla^dag nabla = Laplacian, dilated analogue", criterion_6);
    run(7, "eta family two-sided regular + harmonic; zeta residual = |rho|", criterion_7);
    run(8, "symmetrized product fast path = naive N! sum (N <= 6, 1e-12)", criterion_8);
    run(9, "eta-monomial norm bound at t in {-1, 0, 1, 2}", criterion_9);
    run(10, "expansion round trip at t in {-1, 0.5, 1, 0}; non-regular rejected", criterion_10);
    run(11, "remainder identity via Simpson quadrature (1e-6)", criterion_11);
    run(12, "polar decomposition reconstruction, unit seminorm, null-cone rejection",
        criterion_12);
    run(13, "CLI determinism: byte-identical reruns per subcommand", criterion_13);

    int failed = 0;
    for (const Criterion& c : g_results) failed += c.pass ? 0 : 1;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(g_results.size()) - failed,
                g_results.size());
    if (failed > 0) {
        std::printf("expected red: criterion 9 at t in {1, 2} asserts a bound that is only a "
                    "theorem for t <= 0; the printed counterexamples are genuine.\n");
    }
    return failed;
}
