#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "shx/scale.hpp"

namespace shx {

using Point4 = std::array<double, 4>;
using Complex = std::complex<double>;

enum class BasisUnit { One = 0, I = 1, J = 2, K = 3 };

/// One element of the t-scaled ring, stored as the four real coordinates of
/// x1 + x2 i + x3 j_t + x4 k_t. The complex-pair view (a, b) with
/// a = x1 + x2 i, b = x3 + x4 i is computed, never stored; the two views
/// round-trip exactly. The product is
///   (a1, b1) (a2, b2) = (a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2)).
class Hypercomplex {
public:
    Hypercomplex(Scale scale, double x1, double x2, double x3, double x4)
        : scale_(scale), x_{x1, x2, x3, x4} {}

    Hypercomplex(Scale scale, const Point4& x) : scale_(scale), x_(x) {}

    static Hypercomplex from_pair(Scale scale, Complex a, Complex b) {
        return Hypercomplex(scale, a.real(), a.imag(), b.real(), b.imag());
    }

    static Hypercomplex zero(Scale scale) { return Hypercomplex(scale, 0, 0, 0, 0); }
    static Hypercomplex unity(Scale scale) { return Hypercomplex(scale, 1, 0, 0, 0); }

    Scale scale() const noexcept { return scale_; }
    double x1() const noexcept { return x_[0]; }
    double x2() const noexcept { return x_[1]; }
    double x3() const noexcept { return x_[2]; }
    double x4() const noexcept { return x_[3]; }
    const Point4& coords() const noexcept { return x_; }

    Complex a() const noexcept { return {x_[0], x_[1]}; }
    Complex b() const noexcept { return {x_[2], x_[3]}; }

    /// max |x_l|: the residual measure used by the regularity verdicts
    /// (the seminorm has a nontrivial kernel for t >= 0 and would hide
    /// nonzero residuals).
    double max_abs() const noexcept {
        double m = 0.0;
        for (double v : x_) m = std::max(m, std::fabs(v));
        return m;
    }

    bool is_zero_exact() const noexcept {
        return x_[0] == 0.0 && x_[1] == 0.0 && x_[2] == 0.0 && x_[3] == 0.0;
    }

    // Exact componentwise equality at equal (bitwise) scales.
    friend bool operator==(const Hypercomplex& p, const Hypercomplex& q) noexcept {
        return p.scale_ == q.scale_ && p.x_ == q.x_;
    }
    friend bool operator!=(const Hypercomplex& p, const Hypercomplex& q) noexcept {
        return !(p == q);
    }

private:
    Scale scale_;
    Point4 x_;
};

inline Hypercomplex add(const Hypercomplex& p, const Hypercomplex& q) {
    require_same_scale(p.scale(), q.scale(), "add");
    return Hypercomplex(p.scale(), p.x1() + q.x1(), p.x2() + q.x2(), p.x3() + q.x3(),
                        p.x4() + q.x4());
}

inline Hypercomplex neg(const Hypercomplex& h) {
    return Hypercomplex(h.scale(), -h.x1(), -h.x2(), -h.x3(), -h.x4());
}

inline Hypercomplex sub(const Hypercomplex& p, const Hypercomplex& q) { return add(p, neg(q)); }

inline Hypercomplex scalar_mul(double r, const Hypercomplex& h) {
    return Hypercomplex(h.scale(), r * h.x1(), r * h.x2(), r * h.x3(), r * h.x4());
}

inline Hypercomplex mul(const Hypercomplex& p, const Hypercomplex& q) {
    require_same_scale(p.scale(), q.scale(), "mul");
    const double t = p.scale().t();
    const Complex a = p.a() * q.a() + t * p.b() * std::conj(q.b());
    const Complex b = p.a() * q.b() + p.b() * std::conj(q.a());
    return Hypercomplex::from_pair(p.scale(), a, b);
}

inline Hypercomplex operator+(const Hypercomplex& p, const Hypercomplex& q) { return add(p, q); }
inline Hypercomplex operator-(const Hypercomplex& p, const Hypercomplex& q) { return sub(p, q); }
inline Hypercomplex operator-(const Hypercomplex& h) { return neg(h); }
inline Hypercomplex operator*(const Hypercomplex& p, const Hypercomplex& q) { return mul(p, q); }
inline Hypercomplex operator*(double r, const Hypercomplex& h) { return scalar_mul(r, h); }
inline Hypercomplex operator*(const Hypercomplex& h, double r) { return scalar_mul(r, h); }

/// Hypercomplex conjugate (a, b) -> (conj(a), -b): involutive, additive,
/// anti-multiplicative, and acts as the adjoint of the realization.
inline Hypercomplex conj(const Hypercomplex& h) {
    return Hypercomplex(h.scale(), h.x1(), -h.x2(), -h.x3(), -h.x4());
}

/// det of the realization: |a|^2 - t |b|^2. Multiplicative.
inline double det(const Hypercomplex& h) {
    const double t = h.scale().t();
    return std::norm(h.a()) - t * std::norm(h.b());
}

/// Normalized matrix trace of the realization: Re(a) = x1.
inline double trace(const Hypercomplex& h) { return h.x1(); }

/// <h1, h2> = trace(h1 h2^dagger) = x1 x1' + x2 x2' - t (x3 x3' + x4 x4').
/// Symmetric, bilinear over R; an inner product for t < 0, indefinite for
/// t > 0, positive semidefinite for t = 0.
inline double bilinear(const Hypercomplex& p, const Hypercomplex& q) {
    require_same_scale(p.scale(), q.scale(), "bilinear");
    const double t = p.scale().t();
    return p.x1() * q.x1() + p.x2() * q.x2() - t * (p.x3() * q.x3() + p.x4() * q.x4());
}

/// sqrt(|det|): a norm for t < 0, a seminorm with nontrivial kernel for t >= 0.
inline double seminorm(const Hypercomplex& h) { return std::sqrt(std::fabs(det(h))); }

/// Relative singularity threshold: |det| <= eps * (1 + |a|^2 + |t||b|^2).
inline double singular_threshold(const Hypercomplex& h, double rel_eps = 1e-12) {
    return rel_eps * (1.0 + std::norm(h.a()) + std::fabs(h.scale().t()) * std::norm(h.b()));
}

enum class InvertibilityClass { GroupPart, SemigroupPart };

struct Classification {
    InvertibilityClass part;
    bool is_zero;  // the zero element reports SemigroupPart with this flag set
};

inline Classification classify(const Hypercomplex& h, double rel_eps = 1e-12) {
    if (std::fabs(det(h)) > singular_threshold(h, rel_eps)) {
        return {InvertibilityClass::GroupPart, false};
    }
    return {InvertibilityClass::SemigroupPart, h.is_zero_exact()};
}

/// (a, b)^{-1} = (conj(a)/det, -b/det); defined on the group part only.
inline Hypercomplex inverse(const Hypercomplex& h, double rel_eps = 1e-12) {
    const double d = det(h);
    if (std::fabs(d) <= singular_threshold(h, rel_eps)) {
        throw SingularError("inverse: |a|^2 = t|b|^2 within tolerance (singular element)");
    }
    return Hypercomplex::from_pair(h.scale(), std::conj(h.a()) / d, -h.b() / d);
}

inline Hypercomplex basis_unit(Scale scale, BasisUnit which) {
    switch (which) {
        case BasisUnit::One: return Hypercomplex(scale, 1, 0, 0, 0);
        case BasisUnit::I: return Hypercomplex(scale, 0, 1, 0, 0);
        case BasisUnit::J: return Hypercomplex(scale, 0, 0, 1, 0);
        case BasisUnit::K: return Hypercomplex(scale, 0, 0, 0, 1);
    }
    throw Error("basis_unit: bad unit");
}

std::string to_pretty_string(const Hypercomplex& h);

}  // namespace shx
