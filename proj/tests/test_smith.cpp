#include "oracles.hpp"

#include "semicover/errors.hpp"
#include "semicover/smith.hpp"

#include <doctest.h>

#include <random>

using namespace semicover;

namespace {

void check_form(const IntMatrix& m, std::size_t cols) {
  const SmithForm f = smith_normal_form(m, cols);
  const std::size_t rows = m.size();
  CHECK(multiply(multiply(f.left, m, rows), f.right, cols) == f.d);
  const BigInt dl = oracle::det_rational(f.left), dr = oracle::det_rational(f.right);
  CHECK((dl == 1 || dl == -1));
  CHECK((dr == 1 || dr == -1));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j) REQUIRE(f.d[i][j] == 0);
  for (std::size_t i = 0; i < f.diagonal.size(); ++i) {
    CHECK(f.diagonal[i] >= 0);
    if (i + 1 < f.diagonal.size() && f.diagonal[i] != 0) CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
    if (i + 1 < f.diagonal.size() && f.diagonal[i] == 0) CHECK(f.diagonal[i + 1] == 0);
  }
  CHECK(static_cast<int>(f.nonzero_count()) == oracle::rational_rank(m));
}

}  // namespace

TEST_CASE("worked examples") {
  const SmithForm klein = smith_normal_form(to_int_matrix({{2, 0}}));
  CHECK(klein.diagonal == std::vector<BigInt>{2});
  CHECK(2 - klein.nonzero_count() == 1);

  const SmithForm free2 = smith_normal_form(to_int_matrix({{0, 0}}));
  CHECK(free2.nonzero_count() == 0);
  const SmithForm none = smith_normal_form({}, 2);
  CHECK(none.diagonal.empty());
  CHECK(none.right == identity_matrix(2));

  const IntMatrix q = to_int_matrix({{4, 0}, {2, -2}, {2, 0}});
  const SmithForm qf = smith_normal_form(q);
  CHECK(qf.diagonal == std::vector<BigInt>{2, 2});
  // independent: D1 = gcd of entries, D1 * d2 = gcd of 2x2 minors
  CHECK(oracle::determinantal_divisor(q, 1) == 2);
  CHECK(oracle::determinantal_divisor(q, 2) == 4);
  check_form(q, 2);
}

TEST_CASE("random matrices") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 10), entry(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    IntMatrix m(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    CAPTURE(trial);
    check_form(m, static_cast<std::size_t>(cols));
  }
}

TEST_CASE("diagonal products match determinantal divisors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    IntMatrix m(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng) * (trial % 3 == 0 ? 2 : 1);
    const SmithForm f = smith_normal_form(m);
    BigInt product = 1;
    for (std::size_t k = 0; k < f.diagonal.size(); ++k) {
      product *= f.diagonal[k];
      CHECK(product == oracle::determinantal_divisor(m, static_cast<int>(k + 1)));
    }
  }
}

TEST_CASE("rank-deficient and degenerate inputs") {
  check_form(to_int_matrix({{0, 0, 0}, {0, 0, 0}}), 3);
  check_form(to_int_matrix({{6, 4}, {9, 6}, {3, 2}}), 2);
  check_form(to_int_matrix({{-7}}), 1);
  const SmithForm g = smith_normal_form(to_int_matrix({{2, 0}, {0, 3}}));
  CHECK(g.diagonal == std::vector<BigInt>{1, 6});
}

TEST_CASE("size cap") {
  const IntMatrix big(65, std::vector<BigInt>(1, 1));
  try {
    smith_normal_form(big);
    FAIL("expected MatrixTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MatrixTooLarge);
  }
  CHECK_NOTHROW(smith_normal_form(IntMatrix(64, std::vector<BigInt>(2, 1))));
}

TEST_CASE("determinant") {
  CHECK(determinant(to_int_matrix({{2, 1}, {7, 4}})) == 1);
  CHECK(determinant(to_int_matrix({{0, 1}, {1, 0}})) == -1);
  const IntMatrix m = to_int_matrix({{3, -2, 5}, {1, 0, 4}, {-6, 2, 2}});
  CHECK(determinant(m) == oracle::det_cofactor(m));
}
