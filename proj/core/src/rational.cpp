#include "minorhopf/rational.hpp"

#include <algorithm>
#include <cctype>

#include "minorhopf/error.hpp"

namespace minorhopf {

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&text](const std::string& why) {
    fail(Errc::ParseError, "'" + std::string(text) + "': " + why);
  };
  if (text.empty()) bad("empty rational");
  const size_t slash = text.find('/');
  const auto digits_ok = [](std::string_view part, bool sign_ok) {
    if (part.empty()) return false;
    size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos
                        ? "1"
                        : std::string(text.substr(slash + 1));
  if (!digits_ok(num, true)) bad("bad numerator");
  if (!digits_ok(den, false)) bad("bad denominator");
  if (mpz_class(den) == 0) bad("zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

int row_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  int rank = 0;
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows.size(); ++col) {
    size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = Rational(1) / rows[lead][col];
    for (size_t j = col; j < cols; ++j) rows[lead][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (size_t j = col; j < cols; ++j)
        rows[i][j] -= factor * rows[lead][j];
    }
    ++lead;
    ++rank;
  }
  return rank;
}

}  // namespace minorhopf
