#pragma once

#include <Eigen/Core>
#include <array>
#include <string>

#include "shx/hypercomplex.hpp"

namespace shx {

/// 2x2 complex realization of an element:
///   pi_t((a,b)) = [ a        t*b     ]
///                 [ conj(b)  conj(a) ]
/// an injective additive and multiplicative homomorphism into M_2(C).
using Realization = Eigen::Matrix2cd;

Realization realize(const Hypercomplex& h);

/// True iff m22 = conj(m11) and m12 = t*conj(m21) within tol (componentwise).
bool in_realization_pattern(const Realization& m, Scale scale, double tol = 1e-9);

/// Inverse of realize. At t = 0 the (1,2) entry carries no information and b
/// is recovered from m21 alone; for all t the pattern is checked first.
Hypercomplex unrealize(const Realization& m, Scale scale, double tol = 1e-9);

// ---- exact basis multiplication table ------------------------------------

/// Basis products are rational in t with coefficients in {+1, -1, +t, -t};
/// the table is stored symbolically so equality checks carry no tolerance.
enum class TableCoeff { One, MinusOne, T, MinusT };

struct TableEntry {
    TableCoeff coeff;
    BasisUnit unit;
};

using SymbolicTable = std::array<std::array<TableEntry, 4>, 4>;
using MulTable = std::array<std::array<Hypercomplex, 4>, 4>;

/// The 4x4 table of basis products, independent of t in symbolic form.
const SymbolicTable& symbolic_mul_table();

Hypercomplex evaluate_entry(const TableEntry& e, Scale scale);

/// All 16 basis products at the given scale, exact (no rounding occurs:
/// every coordinate is 0, +-1 or +-t).
MulTable mul_table(Scale scale);

/// Rendering with t substituted, e.g. "-2.5 i" at t = 2.5.
std::string render_entry(const TableEntry& e, Scale scale);

}  // namespace shx
