#include "coxkit/linalg.hpp"

#include <boost/integer/common_factor.hpp>

namespace coxkit {

std::size_t rational_rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  BigInt previous_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows.size() && rows[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    const BigInt pivot = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const BigInt factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        // Exact division: Sylvester's identity keeps every entry a minor.
        rows[r][c] = (rows[r][c] * pivot - factor * rows[rank][c]) / previous_pivot;
      }
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows) {
  IntMatrix scaled;
  scaled.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt lcm = 1;
    for (const Rational& x : row) lcm = boost::integer::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (const Rational& x : row) r.push_back(BigInt(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x))));
    scaled.push_back(std::move(r));
  }
  return rational_rank(std::move(scaled));
}

}  // namespace coxkit
