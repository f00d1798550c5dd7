#include "shx/realization.hpp"

#include <cmath>
#include <sstream>

namespace shx {

Realization realize(const Hypercomplex& h) {
    const double t = h.scale().t();
    Realization m;
    m(0, 0) = h.a();
    m(0, 1) = t * h.b();
    m(1, 0) = std::conj(h.b());
    m(1, 1) = std::conj(h.a());
    return m;
}

bool in_realization_pattern(const Realization& m, Scale scale, double tol) {
    const double t = scale.t();
    return std::abs(m(1, 1) - std::conj(m(0, 0))) <= tol &&
           std::abs(m(0, 1) - t * std::conj(m(1, 0))) <= tol;
}

Hypercomplex unrealize(const Realization& m, Scale scale, double tol) {
    if (!in_realization_pattern(m, scale, tol)) {
        std::ostringstream os;
        os << "unrealize: matrix is not in the scale-" << scale.t()
           << " realization pattern (m22 != conj(m11) or m12 != t*conj(m21))";
        throw PatternViolationError(os.str());
    }
    // b comes from m21 in every case; at t = 0 the m12 entry is identically 0.
    return Hypercomplex::from_pair(scale, m(0, 0), std::conj(m(1, 0)));
}

const SymbolicTable& symbolic_mul_table() {
    using C = TableCoeff;
    using B = BasisUnit;
    // Rows are the left factor, columns the right factor, order (1, i, j, k):
    //   i^2 = -1,  j^2 = k^2 = t,
    //   ij = k, jk = -t i, ki = j,  ji = -k, ik = -j, kj = t i.
    static const SymbolicTable table = {{
        {{{C::One, B::One}, {C::One, B::I}, {C::One, B::J}, {C::One, B::K}}},
        {{{C::One, B::I}, {C::MinusOne, B::One}, {C::One, B::K}, {C::MinusOne, B::J}}},
        {{{C::One, B::J}, {C::MinusOne, B::K}, {C::T, B::One}, {C::MinusT, B::I}}},
        {{{C::One, B::K}, {C::One, B::J}, {C::T, B::I}, {C::T, B::One}}},
    }};
    return table;
}

Hypercomplex evaluate_entry(const TableEntry& e, Scale scale) {
    double c = 0.0;
    switch (e.coeff) {
        case TableCoeff::One: c = 1.0; break;
        case TableCoeff::MinusOne: c = -1.0; break;
        case TableCoeff::T: c = scale.t(); break;
        case TableCoeff::MinusT: c = -scale.t(); break;
    }
    Point4 x{0, 0, 0, 0};
    x[static_cast<int>(e.unit)] = c;
    return Hypercomplex(scale, x);
}

MulTable mul_table(Scale scale) {
    const SymbolicTable& sym = symbolic_mul_table();
    MulTable out{{{{Hypercomplex::zero(scale), Hypercomplex::zero(scale),
                    Hypercomplex::zero(scale), Hypercomplex::zero(scale)}},
                  {{Hypercomplex::zero(scale), Hypercomplex::zero(scale),
                    Hypercomplex::zero(scale), Hypercomplex::zero(scale)}},
                  {{Hypercomplex::zero(scale), Hypercomplex::zero(scale),
                    Hypercomplex::zero(scale), Hypercomplex::zero(scale)}},
                  {{Hypercomplex::zero(scale), Hypercomplex::zero(scale),
                    Hypercomplex::zero(scale), Hypercomplex::zero(scale)}}}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = evaluate_entry(sym[r][c], scale);
    return out;
}

namespace {

std::string format_real(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

std::string render_entry(const TableEntry& e, Scale scale) {
    double c = 0.0;
    switch (e.coeff) {
        case TableCoeff::One: c = 1.0; break;
        case TableCoeff::MinusOne: c = -1.0; break;
        case TableCoeff::T: c = scale.t(); break;
        case TableCoeff::MinusT: c = -scale.t(); break;
    }
    static const char* names[4] = {"1", "i", "j", "k"};
    const char* u = names[static_cast<int>(e.unit)];
    if (c == 0.0) return "0";
    if (e.unit == BasisUnit::One) return format_real(c);
    if (c == 1.0) return u;
    if (c == -1.0) return std::string("-") + u;
    return format_real(c) + " " + u;
}

std::string to_pretty_string(const Hypercomplex& h) {
    const std::string ts = format_real(h.scale().t());
    const std::string labels[4] = {"", "i", "j_{" + ts + "}", "k_{" + ts + "}"};
    std::string out;
    for (int l = 0; l < 4; ++l) {
        const double v = h.coords()[l];
        if (v == 0.0) continue;
        if (out.empty()) {
            out = (l == 0) ? format_real(v)
                           : (v == 1.0 ? labels[l]
                                       : (v == -1.0 ? "-" + labels[l]
                                                    : format_real(v) + " " + labels[l]));
        } else {
            const double av = std::fabs(v);
            out += (v < 0) ? " - " : " + ";
            out += (l == 0) ? format_real(av)
                            : (av == 1.0 ? labels[l] : format_real(av) + " " + labels[l]);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace shx
