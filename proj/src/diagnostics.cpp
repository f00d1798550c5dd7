#include "shx/diagnostics.hpp"

#include <cmath>

#include "shx/rng.hpp"

namespace shx {

namespace {

Hypercomplex random_element(Scale scale, CounterRng& rng, double radius) {
    return Hypercomplex(scale, rng.next_in(-radius, radius), rng.next_in(-radius, radius),
                        rng.next_in(-radius, radius), rng.next_in(-radius, radius));
}

template <class Check>
InequalityCounterexample search(Scale scale, int max_samples, std::uint64_t seed, Check check) {
    CounterRng rng(seed);
    InequalityCounterexample r;
    for (int k = 0; k < max_samples; ++k) {
        const Hypercomplex h1 = random_element(scale, rng, 1.0);
        const Hypercomplex h2 = random_element(scale, rng, 1.0);
        ++r.tried;
        double lhs = 0.0, rhs = 0.0;
        if (check(h1, h2, lhs, rhs)) {
            r.found = true;
            r.h1 = h1;
            r.h2 = h2;
            r.lhs = lhs;
            r.rhs = rhs;
            return r;
        }
    }
    return r;
}

}  // namespace

InequalityCounterexample find_printed_cauchy_schwarz_violation(Scale scale, int max_samples,
                                                               std::uint64_t seed, double margin) {
    return search(scale, max_samples, seed,
                  [margin](const Hypercomplex& h1, const Hypercomplex& h2, double& lhs,
                           double& rhs) {
                      const double b = bilinear(h1, h2);
                      lhs = b * b;
                      const double q1 = bilinear(h1, h1), q2 = bilinear(h2, h2);
                      rhs = q1 * q1 * q2 * q2;
                      return lhs > rhs + margin;
                  });
}

InequalityCounterexample find_triangle_violation(Scale scale, int max_samples, std::uint64_t seed,
                                                 double margin) {
    return search(scale, max_samples, seed,
                  [margin](const Hypercomplex& h1, const Hypercomplex& h2, double& lhs,
                           double& rhs) {
                      lhs = seminorm(h1 + h2);
                      rhs = seminorm(h1) + seminorm(h2);
                      return lhs > rhs + margin;
                  });
}

InequalityCounterexample find_cauchy_schwarz_violation(Scale scale, int max_samples,
                                                       std::uint64_t seed, double margin) {
    return search(scale, max_samples, seed,
                  [margin](const Hypercomplex& h1, const Hypercomplex& h2, double& lhs,
                           double& rhs) {
                      const double b = bilinear(h1, h2);
                      lhs = b * b;
                      rhs = bilinear(h1, h1) * bilinear(h2, h2);
                      return lhs > rhs + margin;
                  });
}

}  // namespace shx
