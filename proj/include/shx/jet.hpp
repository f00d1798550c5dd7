#pragma once

#include <array>
#include <vector>

#include "shx/hypercomplex.hpp"

namespace shx {

using Exponent = std::array<int, 4>;

inline int exponent_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Rank of an exponent tuple in the graded-lex enumeration (by total degree,
/// then ascending lex on (e1, e2, e3)). Stateless closed form.
int exponent_rank(const Exponent& e);

/// Number of exponents of total degree <= order in 4 variables.
int exponent_count(int order);

/// All exponents of total degree <= order, in rank order.
const std::vector<Exponent>& exponents_up_to(int order);

/// Truncated multivariate Taylor expansion of an H_t-valued function of four
/// real variables about a base point. Coefficients are Taylor coefficients
/// (derivative / e!), so high orders never touch large factorials. Arithmetic
/// truncates at the jet order and is exact (up to rounding) on polynomials.
class Jet {
public:
    Jet(Scale scale, int order);

    static Jet constant(const Hypercomplex& value, int order);
    /// The coordinate function x_l (l in 1..4) expanded at base value.
    static Jet coordinate(Scale scale, int l, double base_value, int order);

    Scale scale() const noexcept { return scale_; }
    int order() const noexcept { return order_; }

    const Hypercomplex& coef(const Exponent& e) const;
    void set_coef(const Exponent& e, const Hypercomplex& v);

    /// Value at the base point (the order-0 coefficient).
    const Hypercomplex& value() const { return coef_[0]; }

    /// Mixed partial derivative at the base point: coef(e) * e!.
    Hypercomplex derivative(const Exponent& e) const;

    /// Jet of d/dx_l of the represented function; order drops by one.
    Jet partial(int l) const;

    Jet left_mul(const Hypercomplex& c) const;
    Jet right_mul(const Hypercomplex& c) const;

    friend Jet operator+(const Jet& p, const Jet& q);
    friend Jet operator-(const Jet& p, const Jet& q);
    friend Jet operator*(const Jet& p, const Jet& q);  // noncommutative, truncated
    friend Jet operator*(double r, const Jet& j);

private:
    Scale scale_;
    int order_;
    std::vector<Hypercomplex> coef_;  // indexed by exponent_rank
};

}  // namespace shx
