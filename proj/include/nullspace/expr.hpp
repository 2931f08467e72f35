#ifndef NULLSPACE_EXPR_HPP
#define NULLSPACE_EXPR_HPP

#include "nullspace/interval.hpp"

#include <string_view>

namespace nullspace {

/// Evaluates an interval expression over the vector operations:
///
///   expr    := term { ("+" | "-") term }
///   term    := "-" term | scalar "*" term | primary
///   primary := "[" rational "," rational "]" | "(" expr ")"
///   scalar  := rational literal ("p", "p/q", optional leading "-")
///
/// "-" between terms is the vector difference x + (-1)*y; a leading "-" is
/// scaling by -1. Decimal literals are rejected with a hint to use exact
/// fractions. Raises ParseError with the offending position on bad input.
Interval eval_expr(std::string_view text);

}  // namespace nullspace

#endif  // NULLSPACE_EXPR_HPP
