#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace semicover {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

inline constexpr std::size_t kSmithCap = 64;

/// L * M * R = D with L, R unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix left;
  IntMatrix right;
  /// The min(rows, cols) diagonal entries of D.
  std::vector<BigInt> diagonal;

  std::size_t nonzero_count() const;
};

/// Pivot is the entry of least absolute value, first in row-major order.
/// `columns` fixes the width when `m` has no rows. Throws MatrixTooLarge.
SmithForm smith_normal_form(const IntMatrix& m, std::size_t columns = 0, std::size_t cap = kSmithCap);

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& m);
IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner = 0);
/// Exact determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& m);

}  // namespace semicover
