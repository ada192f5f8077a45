#include <doctest.h>

#include <random>
#include <sstream>

#include "conelab/io.hpp"
#include "conelab/lp.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long span) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = oracle::ratio(static_cast<long>(rng() % (2 * span + 1)) - span, 1 + static_cast<long>(rng() % 3));
  return m;
}

}  // namespace

TEST_CASE("determinant and rank agree with Leibniz expansion and elimination") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const RatMatrix m = random_matrix(rng, n, n, 3);
    CHECK(determinant(m) == oracle::leibniz(m));
    const RatMatrix w = random_matrix(rng, n, n + 2, 1);
    CHECK(rank(w) == oracle::brute_rank(w));
  }
  const IntMatrix z{{2, 1}, {1, 1}};
  CHECK(determinant(z) == 1);
}

TEST_CASE("Hermite normal form is a unimodular row transform") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a(3, 4);
    for (auto i = 0u; i < 3; ++i)
      for (auto j = 0u; j < 4; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
    const HermiteForm h = hermite_normal_form(a);
    CHECK(h.u * a == h.h);
    const Integer d = determinant(h.u);
    CHECK((d == 1 || d == -1));
    CHECK(h.rank == rank(a));
    for (std::size_t i = h.rank; i < h.h.rows(); ++i)
      for (std::size_t j = 0; j < h.h.cols(); ++j) CHECK(h.h(i, j) == 0);
  }
}

TEST_CASE("solve_exact returns a solution and a kernel basis") {
  const RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto s = solve_exact(a, {6, 12, 2});
  REQUIRE(s);
  CHECK(a.apply(s->x) == RatVector{6, 12, 2});
  REQUIRE(s->kernel.size() == 1);
  CHECK(a.apply(s->kernel[0]) == RatVector{0, 0, 0});
  CHECK_FALSE(solve_exact(a, {1, 1, 1}));
  CHECK_THROWS_AS(solve_exact(a, {1, 1}), DimensionError);
}

TEST_CASE("LDL^t reconstructs positive definite matrices and rejects the rest") {
  const RatMatrix q{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  const auto f = ldlt_decompose(q);
  REQUIRE(f);
  RatMatrix d(3, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = f->d[i];
  CHECK(f->l * d * f->l.transpose() == q);
  CHECK_FALSE(ldlt_decompose(RatMatrix{{1, 2}, {2, 1}}));
  CHECK_FALSE(ldlt_decompose(RatMatrix{{1, 0}, {0, 0}}));
}

TEST_CASE("inverses") {
  const RatMatrix a{{2, 1}, {1, 1}};
  CHECK(inverse(a) * a == RatMatrix::identity(2));
  CHECK(inverse(a) == oracle::gj_inverse(a));
  const IntMatrix u{{1, 1, 0}, {0, 1, 0}, {0, 3, 1}};
  CHECK(unimodular_inverse(u) * u == IntMatrix::identity(3));
  CHECK_THROWS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("primitive vectors and canonical sign") {
  CHECK(is_primitive({2, 3}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK_FALSE(is_primitive({0, 0}));
  CHECK(canonical_sign({0, -1, 2}) == IntVector{0, 1, -2});
}

TEST_CASE("matrix text format round-trips") {
  const RatMatrix m{{Rational(1, 2), -3}, {0, Rational(-7, 4)}};
  std::ostringstream out;
  write_matrix(out, m);
  CHECK(parse_matrix(out.str()) == m);
  CHECK(parse_matrix("# comment\n2 2\n1 2\n3 4\n") == RatMatrix{{1, 2}, {3, 4}});
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3\n"), InputError);
  CHECK_THROWS_AS(parse_matrix("1 1\nx\n"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(read_matrix("/nonexistent/file.txt"), InputError);
  CHECK(to_json(Rational(-1, 3)).get<std::string>() == "-1/3");
}

TEST_CASE("exact simplex") {
  // max x + y, x + 2y <= 4, 3x + y <= 6: optimum at (8/5, 6/5).
  LinearProgram lp(2);
  lp.objective = {1, 1};
  lp.add({1, 2}, Sense::LessEqual, 4);
  lp.add({3, 1}, Sense::LessEqual, 6);
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.x == RatVector{Rational(8, 5), Rational(6, 5)});

  LinearProgram bad(1);
  bad.add({1}, Sense::GreaterEqual, 2);
  bad.add({1}, Sense::LessEqual, 1);
  CHECK(solve_lp(bad).status == LpStatus::Infeasible);

  LinearProgram open(1, true);
  open.objective = {-1};
  open.add({1}, Sense::LessEqual, 3);
  CHECK(solve_lp(open).status == LpStatus::Unbounded);
}
