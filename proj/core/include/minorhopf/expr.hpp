#pragma once

#include <string_view>

#include "minorhopf/matroid.hpp"

namespace minorhopf {

/// Evaluates a matroid constructor expression.
///
///   U(r,n;a,b,...)   uniform matroid, n must match the label count
///   I(a), Z(a)       isthmus and loop
///   A + B            direct sum          (left associative)
///   A * B            free product        (left associative, binds tighter)
///   M|{a,b}, M/{a,b} restriction and contraction (postfix, bind tightest)
///   dual(M), (M), 1  dual, grouping, the empty matroid
///
/// Throws Errc::ParseError with the offending position; domain errors
/// (GroundOverlap, RankOutOfRange, ...) propagate from the operations.
Matroid parse_matroid_expr(std::string_view text);

}  // namespace minorhopf
