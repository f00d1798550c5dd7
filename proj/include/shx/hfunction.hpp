#pragma once

#include <memory>

#include "shx/jet.hpp"
#include "shx/multi_index.hpp"

namespace shx {

inline constexpr int kDefaultMaxDegree = 8;

/// Immutable evaluable expression over the four coordinate projections,
/// constants, add, the noncommutative product, and real scaling, plus the
/// built-in regular-polynomial families. Evaluation runs on jets of any
/// order; plain point evaluation is the order-0 case. Trees are shareable
/// across threads and evaluation is pure.
class HFunction {
public:
    static HFunction constant(const Hypercomplex& value);
    static HFunction coordinate(Scale scale, int l);  // l in 1..4, value x_l * unity
    /// x1^e1 x2^e2 x3^e3 x4^e4 * coef, the coefficient multiplying from the
    /// right (the monomial itself is real-valued, so the side only matters
    /// for what it touches later).
    static HFunction monomial(Scale scale, const Exponent& e, const Hypercomplex& coef);

    /// eta_2 = x2 - x1 i for all t; for t != 0 eta_l = x_l + (sgn(t)/sqrt|t|) x1 e_l
    /// (l = 3, 4, e_3 = j, e_4 = k); for t = 0 eta_l = x_l - x1 e_l.
    static HFunction eta(Scale scale, int l);
    /// zeta_l = x_l - x1 e_l with e_2 = i, e_3 = j, e_4 = k.
    static HFunction zeta(Scale scale, int l);
    /// The symmetrized monomial eta^n (symmetrized product of the expanded
    /// multiset; eta^(0,0,0) is the constant 1).
    static HFunction eta_power(Scale scale, const MultiIndex& n,
                               int max_degree = kDefaultMaxDegree);

    Scale scale() const;

    Hypercomplex eval(const Point4& p) const;
    Jet eval_jet(const Point4& base, int order) const;

    friend HFunction operator+(const HFunction& f, const HFunction& g);
    friend HFunction operator-(const HFunction& f, const HFunction& g);
    friend HFunction operator*(const HFunction& f, const HFunction& g);
    friend HFunction operator*(double r, const HFunction& f);

    struct Node;

private:
    explicit HFunction(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

}  // namespace shx
