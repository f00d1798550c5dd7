#include "shx/jet.hpp"

#include <map>
#include <mutex>

namespace shx {

namespace {

// C(n, k) for the small values needed by the ranking (orders stay <= ~16).
long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

int exponent_rank(const Exponent& e) {
    const int d = exponent_degree(e);
    // Tuples of total degree < d come first.
    long long rank = binom(d + 3, 4);
    // Within degree d: ascending lex on (e1, e2, e3); e4 is determined.
    for (int f1 = 0; f1 < e[0]; ++f1) rank += binom(d - f1 + 2, 2);
    for (int f2 = 0; f2 < e[1]; ++f2) rank += d - e[0] - f2 + 1;
    rank += e[2];
    return static_cast<int>(rank);
}

int exponent_count(int order) { return static_cast<int>(binom(order + 4, 4)); }

const std::vector<Exponent>& exponents_up_to(int order) {
    static std::mutex mu;
    static std::map<int, std::vector<Exponent>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<Exponent> exps;
    exps.reserve(static_cast<std::size_t>(exponent_count(order)));
    for (int d = 0; d <= order; ++d)
        for (int e1 = 0; e1 <= d; ++e1)
            for (int e2 = 0; e2 <= d - e1; ++e2)
                for (int e3 = 0; e3 <= d - e1 - e2; ++e3)
                    exps.push_back({e1, e2, e3, d - e1 - e2 - e3});
    return cache.emplace(order, std::move(exps)).first->second;
}

Jet::Jet(Scale scale, int order)
    : scale_(scale),
      order_(order),
      coef_(static_cast<std::size_t>(exponent_count(order)), Hypercomplex::zero(scale)) {
    if (order < 0) throw Error("jet order must be >= 0");
}

Jet Jet::constant(const Hypercomplex& value, int order) {
    Jet j(value.scale(), order);
    j.coef_[0] = value;
    return j;
}

Jet Jet::coordinate(Scale scale, int l, double base_value, int order) {
    if (l < 1 || l > 4) throw Error("coordinate index must be in 1..4");
    Jet j(scale, order);
    j.coef_[0] = Hypercomplex(scale, base_value, 0, 0, 0);
    if (order >= 1) {
        Exponent e{0, 0, 0, 0};
        e[l - 1] = 1;
        j.coef_[static_cast<std::size_t>(exponent_rank(e))] = Hypercomplex::unity(scale);
    }
    return j;
}

const Hypercomplex& Jet::coef(const Exponent& e) const {
    return coef_[static_cast<std::size_t>(exponent_rank(e))];
}

void Jet::set_coef(const Exponent& e, const Hypercomplex& v) {
    require_same_scale(scale_, v.scale(), "jet set_coef");
    coef_[static_cast<std::size_t>(exponent_rank(e))] = v;
}

Hypercomplex Jet::derivative(const Exponent& e) const {
    double f = 1.0;
    for (int l = 0; l < 4; ++l)
        for (int k = 2; k <= e[l]; ++k) f *= k;
    return scalar_mul(f, coef(e));
}

Jet Jet::partial(int l) const {
    if (l < 1 || l > 4) throw Error("coordinate index must be in 1..4");
    if (order_ == 0) throw Error("cannot differentiate an order-0 jet");
    Jet out(scale_, order_ - 1);
    const auto& exps = exponents_up_to(order_ - 1);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        Exponent e = exps[i];
        ++e[l - 1];
        out.coef_[i] = scalar_mul(static_cast<double>(e[l - 1]), coef(e));
    }
    return out;
}

Jet Jet::left_mul(const Hypercomplex& c) const {
    Jet out(scale_, order_);
    for (std::size_t i = 0; i < coef_.size(); ++i) out.coef_[i] = mul(c, coef_[i]);
    return out;
}

Jet Jet::right_mul(const Hypercomplex& c) const {
    Jet out(scale_, order_);
    for (std::size_t i = 0; i < coef_.size(); ++i) out.coef_[i] = mul(coef_[i], c);
    return out;
}

Jet operator+(const Jet& p, const Jet& q) {
    require_same_scale(p.scale_, q.scale_, "jet add");
    if (p.order_ != q.order_) throw Error("jet add: order mismatch");
    Jet out(p.scale_, p.order_);
    for (std::size_t i = 0; i < out.coef_.size(); ++i) out.coef_[i] = p.coef_[i] + q.coef_[i];
    return out;
}

Jet operator-(const Jet& p, const Jet& q) {
    require_same_scale(p.scale_, q.scale_, "jet sub");
    if (p.order_ != q.order_) throw Error("jet sub: order mismatch");
    Jet out(p.scale_, p.order_);
    for (std::size_t i = 0; i < out.coef_.size(); ++i) out.coef_[i] = p.coef_[i] - q.coef_[i];
    return out;
}

Jet operator*(const Jet& p, const Jet& q) {
    require_same_scale(p.scale_, q.scale_, "jet mul");
    if (p.order_ != q.order_) throw Error("jet mul: order mismatch");
    const int K = p.order_;
    Jet out(p.scale_, K);
    const auto& exps = exponents_up_to(K);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (p.coef_[i].is_zero_exact()) continue;
        const int di = exponent_degree(exps[i]);
        for (std::size_t j = 0; j < exps.size(); ++j) {
            if (di + exponent_degree(exps[j]) > K) break;  // rank order is graded
            if (q.coef_[j].is_zero_exact()) continue;
            Exponent e;
            for (int l = 0; l < 4; ++l) e[l] = exps[i][l] + exps[j][l];
            const auto r = static_cast<std::size_t>(exponent_rank(e));
            out.coef_[r] = out.coef_[r] + mul(p.coef_[i], q.coef_[j]);
        }
    }
    return out;
}

Jet operator*(double r, const Jet& j) {
    Jet out(j.scale_, j.order_);
    for (std::size_t i = 0; i < out.coef_.size(); ++i) out.coef_[i] = scalar_mul(r, j.coef_[i]);
    return out;
}

}  // namespace shx
