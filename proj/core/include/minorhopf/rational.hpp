#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace minorhopf {

/// Exact rational coefficients. Everything downstream of the chain-count
/// matrix needs characteristic zero and entries like 11/120, so there is
/// no floating point anywhere in the library.
using Rational = mpq_class;

/// mpq_class has no long long constructor; Möbius values and chain counts
/// arrive as long long.
inline Rational to_rational(long long value) {
  return Rational(static_cast<long>(value));
}

/// Renders "p/q" with the canonical (positive) denominator always present,
/// e.g. "-1/1", "11/120".
std::string format_rational(const Rational& q);

/// Parses "p/q" or a bare integer "p". Throws Errc::ParseError.
Rational parse_rational(std::string_view text);

/// Rank of a row family over the rationals; consumes its input.
int row_rank(std::vector<std::vector<Rational>> rows);

}  // namespace minorhopf
