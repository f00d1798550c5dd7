#pragma once

#include <cstdint>
#include <vector>

#include "shx/hypercomplex.hpp"
#include "shx/rng.hpp"

namespace shx {

/// Open connected sampling domain: an axis-aligned cube (center +- radius per
/// axis) or a Euclidean ball.
struct RegionSpec {
    enum class Kind { Box, Ball };
    Kind kind = Kind::Box;
    Point4 center{0, 0, 0, 0};
    double radius = 1.0;

    static RegionSpec unit_box() { return {}; }
};

struct SampleSet {
    RegionSpec region;
    int count = 100;
    std::uint64_t seed = 0;
};

Point4 sample_point(const RegionSpec& region, CounterRng& rng);

/// Deterministic: depends only on (region, count, seed).
std::vector<Point4> sample_points(const SampleSet& samples);

}  // namespace shx
