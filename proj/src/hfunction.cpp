#include "shx/hfunction.hpp"

#include <cmath>

#include "shx/detail/sym.hpp"

namespace shx {

namespace {

enum class NodeKind { Constant, Coordinate, Monomial, Add, Mul, ScalarMul, EtaPower };

double binom_small(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Iterated multiplication keeps integer powers exact where std::pow may round.
double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

struct HFunction::Node {
    NodeKind kind;
    Scale scale;

    Hypercomplex value = Hypercomplex::zero(Scale(0.0));  // Constant, Monomial coef
    int coord = 0;                                        // Coordinate
    Exponent exp{0, 0, 0, 0};                             // Monomial
    double factor = 0.0;                                  // ScalarMul
    MultiIndex mindex;                                    // EtaPower
    std::shared_ptr<const Node> lhs, rhs;

    Node(NodeKind k, Scale s) : kind(k), scale(s) {}
};

HFunction::HFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Scale HFunction::scale() const { return node_->scale; }

HFunction HFunction::constant(const Hypercomplex& value) {
    auto n = std::make_shared<Node>(NodeKind::Constant, value.scale());
    n->value = value;
    return HFunction(std::move(n));
}

HFunction HFunction::coordinate(Scale scale, int l) {
    if (l < 1 || l > 4) throw Error("coordinate index must be in 1..4");
    auto n = std::make_shared<Node>(NodeKind::Coordinate, scale);
    n->coord = l;
    return HFunction(std::move(n));
}

HFunction HFunction::monomial(Scale scale, const Exponent& e, const Hypercomplex& coef) {
    require_same_scale(scale, coef.scale(), "monomial");
    for (int v : e)
        if (v < 0) throw ParseError("monomial exponents must be nonnegative");
    auto n = std::make_shared<Node>(NodeKind::Monomial, scale);
    n->exp = e;
    n->value = coef;
    return HFunction(std::move(n));
}

HFunction HFunction::eta(Scale scale, int l) {
    if (l < 2 || l > 4) throw Error("eta index must be in 2..4");
    if (l == 2) {
        return monomial(scale, {0, 1, 0, 0}, Hypercomplex::unity(scale)) +
               monomial(scale, {1, 0, 0, 0}, scalar_mul(-1.0, basis_unit(scale, BasisUnit::I)));
    }
    const BasisUnit unit = (l == 3) ? BasisUnit::J : BasisUnit::K;
    Exponent xe{0, 0, 0, 0};
    xe[l - 1] = 1;
    const double c = scale.is_zero() ? -1.0 : scale.sign() / scale.rho();
    return monomial(scale, xe, Hypercomplex::unity(scale)) +
           monomial(scale, {1, 0, 0, 0}, scalar_mul(c, basis_unit(scale, unit)));
}

HFunction HFunction::zeta(Scale scale, int l) {
    if (l < 2 || l > 4) throw Error("zeta index must be in 2..4");
    const BasisUnit unit = (l == 2) ? BasisUnit::I : (l == 3) ? BasisUnit::J : BasisUnit::K;
    Exponent xe{0, 0, 0, 0};
    xe[l - 1] = 1;
    return monomial(scale, xe, Hypercomplex::unity(scale)) +
           monomial(scale, {1, 0, 0, 0}, scalar_mul(-1.0, basis_unit(scale, unit)));
}

HFunction HFunction::eta_power(Scale scale, const MultiIndex& n, int max_degree) {
    if (n.n1 < 0 || n.n2 < 0 || n.n3 < 0) throw DegreeError("eta_power: negative multi-index");
    if (n.total() > max_degree) {
        throw DegreeError("eta_power: total degree " + std::to_string(n.total()) +
                          " exceeds the cap " + std::to_string(max_degree));
    }
    auto node = std::make_shared<Node>(NodeKind::EtaPower, scale);
    node->mindex = n;
    return HFunction(std::move(node));
}

HFunction operator+(const HFunction& f, const HFunction& g) {
    require_same_scale(f.scale(), g.scale(), "hfunction add");
    auto n = std::make_shared<HFunction::Node>(NodeKind::Add, f.scale());
    n->lhs = f.node_;
    n->rhs = g.node_;
    return HFunction(std::move(n));
}

HFunction operator-(const HFunction& f, const HFunction& g) { return f + (-1.0 * g); }

HFunction operator*(const HFunction& f, const HFunction& g) {
    require_same_scale(f.scale(), g.scale(), "hfunction mul");
    auto n = std::make_shared<HFunction::Node>(NodeKind::Mul, f.scale());
    n->lhs = f.node_;
    n->rhs = g.node_;
    return HFunction(std::move(n));
}

HFunction operator*(double r, const HFunction& f) {
    auto n = std::make_shared<HFunction::Node>(NodeKind::ScalarMul, f.scale());
    n->factor = r;
    n->lhs = f.node_;
    return HFunction(std::move(n));
}

namespace {

// Jet of the real scalar monomial prod x_l^{e_l} about base p, exact:
// the coefficient at exponent k <= e is prod_l C(e_l, k_l) p_l^(e_l - k_l).
Jet monomial_jet(Scale scale, const Exponent& e, const Point4& p, int order) {
    Jet out(scale, order);
    const auto& exps = exponents_up_to(order);
    for (const Exponent& k : exps) {
        bool inside = true;
        double c = 1.0;
        for (int l = 0; l < 4 && inside; ++l) {
            if (k[l] > e[l]) {
                inside = false;
                break;
            }
            c *= binom_small(e[l], k[l]) * ipow(p[l], e[l] - k[l]);
        }
        if (inside && c != 0.0) out.set_coef(k, Hypercomplex(scale, c, 0, 0, 0));
    }
    return out;
}

Jet eta_basis_jet(Scale scale, int l, const Point4& p, int order) {
    Jet x1 = Jet::coordinate(scale, 1, p[0], order);
    if (l == 2) {
        return Jet::coordinate(scale, 2, p[1], order) +
               x1.right_mul(scalar_mul(-1.0, basis_unit(scale, BasisUnit::I)));
    }
    const BasisUnit unit = (l == 3) ? BasisUnit::J : BasisUnit::K;
    const double c = scale.is_zero() ? -1.0 : scale.sign() / scale.rho();
    return Jet::coordinate(scale, l, p[l - 1], order) +
           x1.right_mul(scalar_mul(c, basis_unit(scale, unit)));
}

Jet eval_node(const HFunction::Node& n, const Point4& p, int order);

Jet eta_power_jet(const HFunction::Node& n, const Point4& p, int order) {
    const MultiIndex& m = n.mindex;
    if (m.total() == 0) return Jet::constant(Hypercomplex::unity(n.scale), order);
    std::vector<std::pair<Jet, int>> groups;
    if (m.n1 > 0) groups.emplace_back(eta_basis_jet(n.scale, 2, p, order), m.n1);
    if (m.n2 > 0) groups.emplace_back(eta_basis_jet(n.scale, 3, p, order), m.n2);
    if (m.n3 > 0) groups.emplace_back(eta_basis_jet(n.scale, 4, p, order), m.n3);
    return detail::symmetrized_multiset_product(groups);
}

Jet eval_node(const HFunction::Node& n, const Point4& p, int order) {
    switch (n.kind) {
        case NodeKind::Constant: return Jet::constant(n.value, order);
        case NodeKind::Coordinate: return Jet::coordinate(n.scale, n.coord, p[n.coord - 1], order);
        case NodeKind::Monomial:
            return monomial_jet(n.scale, n.exp, p, order).right_mul(n.value);
        case NodeKind::Add: return eval_node(*n.lhs, p, order) + eval_node(*n.rhs, p, order);
        case NodeKind::Mul: return eval_node(*n.lhs, p, order) * eval_node(*n.rhs, p, order);
        case NodeKind::ScalarMul: return n.factor * eval_node(*n.lhs, p, order);
        case NodeKind::EtaPower: return eta_power_jet(n, p, order);
    }
    throw Error("unreachable node kind");
}

}  // namespace

Hypercomplex HFunction::eval(const Point4& p) const { return eval_jet(p, 0).value(); }

Jet HFunction::eval_jet(const Point4& base, int order) const {
    return eval_node(*node_, base, order);
}

}  // namespace shx
