#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "shx/errors.hpp"

namespace shx {

/// The real scale t selecting a ring of the family: t = -1 gives the
/// quaternions, t = +1 the split-quaternions, t = 0 the degenerate ring
/// with nilpotent j, k.
class Scale {
public:
    explicit Scale(double t) : t_(t) {
        if (!std::isfinite(t)) throw ParseError("scale must be finite, got " + std::to_string(t));
    }

    double t() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_ == 0.0; }

    /// sgn(t) in {+1,-1}; requesting it at t = 0 is an error.
    double sign() const {
        if (t_ == 0.0) throw Error("sgn(t) is undefined at t = 0");
        return t_ > 0.0 ? 1.0 : -1.0;
    }

    /// rho = sqrt(|t|) >= 0; zero iff t = 0.
    double rho() const noexcept { return std::sqrt(std::fabs(t_)); }

    // Binary operations on ring elements require *bitwise* equal scales;
    // there is no implicit scale coercion (so -0.0 and +0.0 differ).
    friend bool operator==(Scale a, Scale b) noexcept {
        return std::bit_cast<std::uint64_t>(a.t_) == std::bit_cast<std::uint64_t>(b.t_);
    }
    friend bool operator!=(Scale a, Scale b) noexcept { return !(a == b); }

private:
    double t_;
};

inline void require_same_scale(Scale a, Scale b, const char* what) {
    if (a != b) {
        throw ScaleMismatchError(std::string(what) + ": scale mismatch (t = " +
                                 std::to_string(a.t()) + " vs t = " + std::to_string(b.t()) + ")");
    }
}

}  // namespace shx
