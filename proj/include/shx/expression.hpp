#pragma once

#include <string>

#include "shx/hfunction.hpp"

namespace shx {

/// Tiny expression language over the ring, used by `eval`:
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' uint)*
///   atom    := number | ident | etapow '(' int ',' int ',' int ')' | '(' expr ')'
///   ident   := one | i | j | k | x1 | x2 | x3 | x4
///           |  eta2 | eta3 | eta4 | zeta2 | zeta3 | zeta4
/// '*' is the noncommutative ring product; numbers are real constants.
HFunction parse_expression(const std::string& text, Scale scale,
                           int max_degree = kDefaultMaxDegree);

/// Builtin function names accepted by --fn: eta2..eta4, zeta2..zeta4, and
/// eta^n1,n2,n3 (parens optional). Throws ParseError on anything else.
HFunction parse_builtin(const std::string& name, Scale scale,
                        int max_degree = kDefaultMaxDegree);

bool is_builtin_name(const std::string& name);

}  // namespace shx
