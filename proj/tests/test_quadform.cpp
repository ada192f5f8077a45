#include <doctest.h>

#include <random>
#include <set>

#include "conelab/io.hpp"
#include "conelab/matroid.hpp"
#include "conelab/quadform.hpp"
#include "conelab/verify.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {

std::string dir() { return default_fixture_dir() + "/"; }

std::vector<IntVector> canonical_columns(const IntMatrix& a) {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(oracle::canonical(a.column(j)));
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix h = IntMatrix::identity(n);
  for (int s = 0; s < 5; ++s) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    const long f = rng() % 2 ? 1 : -1;
    for (std::size_t k = 0; k < n; ++k) h(i, k) += f * h(j, k);
  }
  return h;
}

}  // namespace

TEST_CASE("minimal vectors agree with box enumeration, serial and parallel") {
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 60) {
    const std::size_t g = 1 + rng() % 4;
    RatMatrix m;
    long radius = 0;
    if (!oracle::random_pd_form(rng, g, g == 4 ? 3 : 5, m, radius)) continue;
    const QuadForm q(m);
    const auto expect = oracle::box_minimal_vectors(m, radius);
    const auto par = minimal_vectors(q, Exec::Parallel);
    const auto ser = minimal_vectors(q, Exec::Serial);
    CHECK(par.minimum == expect.minimum);
    CHECK(par.vectors == expect.vectors);
    CHECK(ser.vectors == par.vectors);
    ++done;
  }
}

TEST_CASE("short vectors and centered enumeration agree with a box") {
  const QuadForm q(RatMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  const Rational bound(9, 2);
  std::set<IntVector> expect;
  // For this form x_i^2 <= bound (Q^-1)_ii <= 4.5 * 3/2, so radius 3 covers.
  oracle::box(3, 3, [&](const IntVector& x) {
    if (!oracle::is_zero(x) && oracle::value(q.matrix(), x) <= bound) expect.insert(oracle::canonical(x));
  });
  const auto got = short_vectors(q, bound, Exec::Serial);
  CHECK(std::set<IntVector>(got.begin(), got.end()) == expect);
  CHECK(short_vectors(q, bound, Exec::Parallel) == got);

  const RatVector c{Rational(1, 2), Rational(-1, 3), Rational(1, 4)};
  std::set<IntVector> centered;
  oracle::box(3, 4, [&](const IntVector& x) {
    RatVector d(3);
    for (int i = 0; i < 3; ++i) d[i] = Rational(x[i]) - c[i];
    if (oracle::value(q.matrix(), d) <= 3) centered.insert(x);
  });
  const auto e = enumerate_ellipsoid(q, 3, c, Exec::Serial);
  CHECK(std::set<IntVector>(e.begin(), e.end()) == centered);
  CHECK(enumerate_ellipsoid(q, 3, c, Exec::Parallel) == e);
}

TEST_CASE("definiteness agrees with minors") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    RatMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = oracle::ratio(static_cast<long>(rng() % 7) - 2, 1 + static_cast<long>(rng() % 2));
    CHECK(is_positive_definite(QuadForm(m)) == oracle::sylvester_pd(m));
  }
  CHECK(is_positive_semidefinite(QuadForm(RatMatrix{{1, 1}, {1, 1}})));
  CHECK_FALSE(is_positive_semidefinite(QuadForm(RatMatrix{{0, 1}, {1, 0}})));
  CHECK_THROWS(QuadForm(RatMatrix{{1, 2}, {0, 1}}));
}

TEST_CASE("rational rank normal form") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    // h^-1 diag(Q', 0) h^-t for random h.
    const IntMatrix h = random_unimodular(rng, 3);
    RatMatrix d(3, 3);
    d(0, 0) = 2;
    d(0, 1) = d(1, 0) = Rational(1, 2);
    d(1, 1) = 1;
    const RatMatrix hinv = to_rational(unimodular_inverse(h));
    const QuadForm q(hinv * d * hinv.transpose());
    const auto nf = rational_rank_normal_form(q);
    REQUIRE(nf);
    CHECK(nf->reduced.dim() == 2);
    CHECK(is_positive_definite(nf->reduced));
    const Integer det = determinant(nf->h);
    CHECK((det == 1 || det == -1));
    const QuadForm t2 = q.transformed(nf->h);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(t2(i, j) == (i < 2 && j < 2 ? nf->reduced(i, j) : Rational(0)));
  }
  const auto pd = rational_rank_normal_form(q5());
  CHECK(pd->h == IntMatrix::identity(5));
  CHECK_THROWS_AS(rational_rank_normal_form(QuadForm(RatMatrix{{1, 2}, {2, 1}})), InputError);
}

TEST_CASE("Q5 and the principal forms") {
  const auto mv = minimal_vectors(q5());
  CHECK(mv.minimum == 2);
  CHECK(mv.vectors.size() == 20);
  CHECK(is_perfect(q5()));
  std::vector<IntVector> fams;
  for (char f : {'e', 'f', 'g', 'h'})
    for (const auto& v : q5_vector_family(f)) fams.push_back(oracle::canonical(v));
  std::sort(fams.begin(), fams.end());
  CHECK(fams == mv.vectors);
  for (std::size_t g = 2; g <= 5; ++g) {
    const auto m = minimal_vectors(q0_principal(g));
    CHECK(m.minimum == 1);
    CHECK(m.vectors == canonical_columns(graphic_representation(complete_graph(g + 1))));
    CHECK(is_perfect(q0_principal(g)));
  }
}

TEST_CASE("minimal vectors: scaling invariance and GL-equivariance") {
  std::mt19937_64 rng(13);
  const QuadForm q = q0_principal(3);
  const auto base = minimal_vectors(q);
  CHECK(minimal_vectors(q.scaled(Rational(7, 3))).vectors == base.vectors);
  for (int t = 0; t < 10; ++t) {
    const IntMatrix h = random_unimodular(rng, 3);
    const IntMatrix hinv_t = unimodular_inverse(h).transpose();
    std::vector<IntVector> mapped;
    for (const auto& v : base.vectors) {
      IntVector w(3, Integer(0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w[i] += hinv_t(i, j) * v[j];
      mapped.push_back(oracle::canonical(w));
    }
    std::sort(mapped.begin(), mapped.end());
    const auto m = minimal_vectors(q.transformed(h));
    CHECK(m.minimum == base.minimum);
    CHECK(m.vectors == mapped);
  }
}

TEST_CASE("well-suited pairs") {
  const IntMatrix a10 = read_int_matrix(dir() + "A10.txt");
  CHECK(is_well_suited(q0_principal(2), read_int_matrix(dir() + "AK3.txt")));
  CHECK(is_well_suited(QuadForm(RatMatrix::identity(2)), IntMatrix::identity(2)));
  CHECK_FALSE(is_well_suited(q5().scaled(Rational(1, 2)), a10));
  CHECK(is_well_suited(r10_form(), a10));
  CHECK_FALSE(is_well_suited(QuadForm(RatMatrix{{1, 0}, {0, 0}}), IntMatrix::identity(2)));
  CHECK_THROWS_AS(is_well_suited(q5(), IntMatrix::identity(2)), DimensionError);
  // A10 minimal vectors of the well-suited form are exactly its columns.
  const auto mv = minimal_vectors(r10_form());
  CHECK(mv.minimum == 1);
  CHECK(mv.vectors == canonical_columns(a10));
}

TEST_CASE("H functional") {
  const std::vector<Rational> expect{0, -2, 0, -2};
  int k = 0;
  for (char f : {'e', 'f', 'g', 'h'}) {
    for (const auto& v : q5_vector_family(f)) {
      CHECK(h_functional(v) == expect[k]);
      RatMatrix outer(5, 5);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) outer(i, j) = Rational(v[i] * v[j]);
      CHECK(h_functional(outer) == expect[k]);
    }
    ++k;
  }
  for (const auto& v : q5_vector_family('e')) CHECK(oracle::value(h_functional_matrix(), v) == 0);
}

TEST_CASE("fixture files equal the built-in constructors") {
  CHECK(read_matrix(dir() + "Q5.txt") == q5().matrix());
  CHECK(read_matrix(dir() + "H.txt") == h_functional_matrix());
  CHECK(read_matrix(dir() + "Q10.txt") == r10_form().matrix());
  CHECK(read_matrix(dir() + "Q0_2.txt") == q0_principal(2).matrix());
  CHECK(read_matrix(dir() + "Q0_3.txt") == q0_principal(3).matrix());
  CHECK(read_int_matrix(dir() + "AK4.txt") == graphic_representation(complete_graph(4)));
  CHECK(read_int_matrix(dir() + "AK3.txt") == graphic_representation(complete_graph(3)));
}

TEST_CASE("well-suited sums on the fixture pairs") {
  auto pair = [](const std::string& side, int k) {
    const std::string p = dir() + "sum" + std::to_string(k) + "_" + side;
    return WellSuitedPair{QuadForm(read_matrix(p + "_form.txt")), read_int_matrix(p + "_matrix.txt")};
  };
  const WellSuitedPair k3{q0_principal(2), read_int_matrix(dir() + "AK3.txt")};
  const WellSuitedPair s1 = well_suited_sum1(k3, k3);
  CHECK(is_well_suited(s1.form, s1.matrix));
  const WellSuitedPair s2 = well_suited_sum2(pair("left", 2), pair("right", 2));
  CHECK(s2.form.matrix() == RatMatrix{{1, Rational(1, 2), Rational(1, 4)},
                                      {Rational(1, 2), 1, Rational(1, 2)},
                                      {Rational(1, 4), Rational(1, 2), 1}});
  CHECK(oracle::brute_tu(s2.matrix));
  const WellSuitedPair s3 = well_suited_sum3(pair("left", 3), pair("right", 3));
  CHECK(is_well_suited(s3.form, s3.matrix));
  CHECK(oracle::brute_tu(s3.matrix));
  const WellSuitedPair bad{QuadForm(RatMatrix::identity(2)), read_int_matrix(dir() + "AK3.txt")};
  CHECK_THROWS_AS(well_suited_sum1(bad, k3), InputError);
}

TEST_CASE("2-sum claim: exact minimum over a box is 3/4") {
  const Sum2Parts p = sum2_left_parts(QuadForm(read_matrix(dir() + "sum2_left_form.txt")));
  Rational best = 100;
  oracle::box(p.q.dim(), 4, [&](const IntVector& x) {
    if (!oracle::is_zero(x)) best = std::min(best, sum2_claim_value(p, x));
  });
  CHECK(best == Rational(3, 4));
}

TEST_CASE("3-sum claim: the left fixture reaches 2/3 at a unit vector") {
  const Sum3Parts p = sum3_left_parts(QuadForm(read_matrix(dir() + "sum3_left_form.txt")));
  Rational best = 100;
  oracle::box(p.q.dim(), 4, [&](const IntVector& x) {
    if (!oracle::is_zero(x)) best = std::min(best, sum3_claim_value(p, x));
  });
  CHECK(best == Rational(2, 3));
  CHECK(2 * best > 1);
}
