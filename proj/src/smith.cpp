#include "semicover/smith.hpp"

#include "semicover/errors.hpp"

#include <utility>

namespace semicover {

namespace {

BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Work {
  IntMatrix d, l, r;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(l[i], l[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : r) std::swap(row[i], row[j]);
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < cols; ++c) d[i][c] += q * d[j][c];
    for (std::size_t c = 0; c < rows; ++c) l[i][c] += q * l[j][c];
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t k = 0; k < rows; ++k) d[k][i] += q * d[k][j];
    for (std::size_t k = 0; k < cols; ++k) r[k][i] += q * r[k][j];
  }
};

}  // namespace

std::size_t SmithForm::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& x : diagonal) n += x != 0;
  return n;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& m) {
  IntMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
  const std::size_t n = a.empty() ? inner : a.front().size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  IntMatrix out(a.size(), std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

BigInt determinant(const IntMatrix& m) {
  // Bareiss
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SmithForm smith_normal_form(const IntMatrix& m, std::size_t columns, std::size_t cap) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : columns;
  if (rows > cap || cols > cap) {
    throw Error(ErrorCode::MatrixTooLarge, std::to_string(rows) + "x" + std::to_string(cols) +
                                               " exceeds the " + std::to_string(cap) + " limit");
  }
  for (const auto& row : m) {
    if (row.size() != cols) throw Error(ErrorCode::ParseError, "ragged matrix");
  }
  Work w{m, identity_matrix(rows), identity_matrix(cols), rows, cols};
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block, first in row-major order
      std::size_t pi = rows, pj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (w.d[i][j] != 0 && (best == 0 || abs_of(w.d[i][j]) < best)) {
            best = abs_of(w.d[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) break;
      if (pi != t) w.swap_rows(pi, t);
      if (pj != t) w.swap_cols(pj, t);
      const BigInt p = w.d[t][t];
      for (std::size_t i = t + 1; i < rows; ++i)
        if (w.d[i][t] != 0) w.add_row(i, t, -(w.d[i][t] / p));
      for (std::size_t j = t + 1; j < cols; ++j)
        if (w.d[t][j] != 0) w.add_col(j, t, -(w.d[t][j] / p));
      bool clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i) clean = w.d[i][t] == 0;
      for (std::size_t j = t + 1; j < cols && clean; ++j) clean = w.d[t][j] == 0;
      if (!clean) continue;
      // divisibility: fold an offending row into row t and go again
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.d[i][j] % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.add_row(t, bad, 1);
    }
    if (w.d[t][t] < 0) {
      for (auto& x : w.d[t]) x = -x;
      for (auto& x : w.l[t]) x = -x;
    }
  }
  SmithForm f{std::move(w.d), std::move(w.l), std::move(w.r), {}};
  for (std::size_t t = 0; t < n; ++t) f.diagonal.push_back(f.d[t][t]);
  return f;
}

}  // namespace semicover
