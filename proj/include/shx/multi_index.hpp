#pragma once

#include <compare>
#include <string>

namespace shx {

/// Index (n1, n2, n3) of a symmetrized eta-monomial; n1 counts eta_2 factors,
/// n2 eta_3, n3 eta_4.
struct MultiIndex {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;

    int total() const noexcept { return n1 + n2 + n3; }

    double factorial() const noexcept {
        auto f = [](int n) {
            double r = 1.0;
            for (int k = 2; k <= n; ++k) r *= k;
            return r;
        };
        return f(n1) * f(n2) * f(n3);
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    std::string str() const {
        return "(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) + ")";
    }
};

/// Graded lexicographic order: by total degree, then lex on (n1, n2, n3).
struct GradedLexLess {
    bool operator()(const MultiIndex& p, const MultiIndex& q) const noexcept {
        if (p.total() != q.total()) return p.total() < q.total();
        if (p.n1 != q.n1) return p.n1 < q.n1;
        if (p.n2 != q.n2) return p.n2 < q.n2;
        return p.n3 < q.n3;
    }
};

}  // namespace shx
