#include "shx/region.hpp"

namespace shx {

Point4 sample_point(const RegionSpec& region, CounterRng& rng) {
    if (region.kind == RegionSpec::Kind::Box) {
        Point4 p;
        for (int l = 0; l < 4; ++l)
            p[l] = region.center[l] + region.radius * rng.next_in(-1.0, 1.0);
        return p;
    }
    // Ball: rejection from the enclosing cube, acceptance ~ 0.308 in 4-d.
    for (;;) {
        double q[4];
        double s = 0.0;
        for (double& v : q) {
            v = rng.next_in(-1.0, 1.0);
            s += v * v;
        }
        if (s <= 1.0) {
            Point4 p;
            for (int l = 0; l < 4; ++l) p[l] = region.center[l] + region.radius * q[l];
            return p;
        }
    }
}

std::vector<Point4> sample_points(const SampleSet& samples) {
    CounterRng rng(samples.seed);
    std::vector<Point4> out;
    out.reserve(static_cast<std::size_t>(samples.count));
    for (int i = 0; i < samples.count; ++i) out.push_back(sample_point(samples.region, rng));
    return out;
}

}  // namespace shx
