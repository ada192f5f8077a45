#include <doctest.h>

#include <random>

#include "conelab/io.hpp"
#include "conelab/matroid.hpp"
#include "conelab/tumatrix.hpp"
#include "conelab/verify.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {

IntMatrix random_sign_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 3) - 1;
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix h = IntMatrix::identity(n);
  for (int s = 0; s < 6; ++s) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    const long f = static_cast<long>(rng() % 5) - 2;
    for (std::size_t k = 0; k < n; ++k) h(i, k) += f * h(j, k);
  }
  return h;
}

IntMatrix fixture(const std::string& name) { return read_int_matrix(default_fixture_dir() + "/" + name); }

}  // namespace

TEST_CASE("TU scan matches the Leibniz brute force, serial and parallel") {
  std::mt19937_64 rng(3);
  int tu = 0, not_tu = 0;
  for (int t = 0; t < 150; ++t) {
    const IntMatrix m = random_sign_matrix(rng, 2 + rng() % 3, 2 + rng() % 4);
    const bool expect = oracle::brute_tu(m);
    CHECK(is_totally_unimodular(m, Exec::Serial) == expect);
    CHECK(is_totally_unimodular(m, Exec::Parallel) == expect);
    const auto w = tu_violation(m);
    CHECK(w.has_value() == !expect);
    if (w) {
      CHECK(oracle::leibniz(m.submatrix(w->rows, w->cols)) == w->det);
      CHECK(abs(w->det) > 1);
    }
    (expect ? tu : not_tu)++;
  }
  CHECK(tu > 0);
  CHECK(not_tu > 0);
}

TEST_CASE("fixture matrices") {
  CHECK(is_totally_unimodular(fixture("A10.txt")));
  CHECK(oracle::brute_tu(fixture("A10.txt")));
  CHECK(is_totally_unimodular(fixture("AK4.txt")));
  CHECK_FALSE(is_totally_unimodular(IntMatrix{{1, 1}, {-1, 1}}));
  CHECK_THROWS_AS(make_tu(IntMatrix{{1, 1}, {-1, 1}}), InputError);
  CHECK(make_tu(IntMatrix{{1, 0}, {0, 1}}).verified);
}

TEST_CASE("is_unimodular recovers a row transform") {
  std::mt19937_64 rng(5);
  const IntMatrix base = fixture("A10.txt");
  for (int t = 0; t < 10; ++t) {
    const IntMatrix a = random_unimodular(rng, 5) * base;
    const auto h = is_unimodular(a);
    REQUIRE(h);
    const Integer d = determinant(*h);
    CHECK((d == 1 || d == -1));
    CHECK(oracle::brute_tu(*h * a));
  }
  CHECK_FALSE(is_unimodular(IntMatrix{{1, 1}, {1, -1}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("unimodular equivalence") {
  std::mt19937_64 rng(9);
  const IntMatrix a = fixture("AK4.txt");
  for (int t = 0; t < 5; ++t) {
    IntMatrix y(6, 6);
    std::vector<std::size_t> p{0, 1, 2, 3, 4, 5};
    std::shuffle(p.begin(), p.end(), rng);
    for (std::size_t i = 0; i < 6; ++i) y(p[i], i) = rng() % 2 ? 1 : -1;
    CHECK(equivalent_unimodular(a, random_unimodular(rng, 3) * a * y));
  }
  CHECK_FALSE(equivalent_unimodular(IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}},
                                    IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
}

TEST_CASE("Seymour sums stay simple and totally unimodular") {
  const IntMatrix k3 = fixture("AK3.txt");
  const TUMatrix s1 = seymour_sum1(k3, k3);
  CHECK(s1.verified);
  CHECK(s1.inner.rows() == 4);
  CHECK(s1.inner.cols() == 6);
  CHECK(oracle::brute_tu(s1.inner));
  CHECK(assemble_sum1(k3, k3) == s1.inner);

  const SumShape2 s2{fixture("sum2_left_matrix.txt"), fixture("sum2_right_matrix.txt")};
  const TUMatrix t2 = seymour_sum2(s2);
  CHECK(oracle::brute_tu(t2.inner));
  CHECK(is_simple_matrix(t2.inner));
  CHECK(t2.inner == assemble_sum2(s2));

  const SumShape3 s3{fixture("sum3_left_matrix.txt"), fixture("sum3_right_matrix.txt")};
  const TUMatrix t3 = seymour_sum3(s3);
  CHECK(oracle::brute_tu(t3.inner));
  CHECK(is_simple_matrix(t3.inner));
  const Sum3Blocks b = split_sum3(s3);
  CHECK(b.b1.size() == b.b_block.cols());

  CHECK_THROWS_AS(seymour_sum1(IntMatrix{{1, 1}, {-1, 1}}, k3), InputError);
  CHECK_THROWS_AS(seymour_sum2({k3, k3}), InputError);
}
