#include <doctest.h>

#include <random>
#include <set>

#include "conelab/cone.hpp"
#include "conelab/delone.hpp"
#include "conelab/io.hpp"
#include "conelab/matroid.hpp"
#include "conelab/verify.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {

std::string dir() { return default_fixture_dir() + "/"; }

std::set<Cell> cell_set(const PeriodicSubdivision& s) { return {s.cells.begin(), s.cells.end()}; }

QuadForm form_of(const IntMatrix& a) {
  RatMatrix q(a.rows(), a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.rows(); ++j) q(i, j) += Rational(a(i, k) * a(j, k));
  return QuadForm(q);
}

// Random Minkowski-reduced binary form: |2b| <= a <= c.
QuadForm random_reduced(std::mt19937_64& rng) {
  const Rational a(1 + static_cast<long>(rng() % 4), 1);
  const Rational c = a + oracle::ratio(static_cast<long>(rng() % 4), 2);
  const Rational b = a * oracle::ratio(static_cast<long>(rng() % 5) - 2, 4);
  return QuadForm(RatMatrix{{a, b}, {b, c}});
}

}  // namespace

TEST_CASE("Delone cells match the brute-force lower hull, g = 2") {
  std::mt19937_64 rng(31);
  std::vector<QuadForm> forms{QuadForm(read_matrix(dir() + "taxonomy_D1.txt")),
                              QuadForm(read_matrix(dir() + "taxonomy_D2.txt")), q0_principal(2)};
  for (int t = 0; t < 12; ++t) forms.push_back(random_reduced(rng));
  for (const auto& q : forms) {
    const auto expect = oracle::lower_hull_cells(q.matrix(), 2, 4);
    CHECK(cell_set(delone_subdivision(q)) == expect);
  }
}

TEST_CASE("Delone cells match the brute-force lower hull, g = 3") {
  for (const auto& q : {q0_principal(3), QuadForm(RatMatrix::identity(3)),
                        QuadForm(RatMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})}) {
    const auto expect = oracle::lower_hull_cells(q.matrix(), 1, 3);
    CHECK(cell_set(delone_subdivision(q)) == expect);
  }
}

TEST_CASE("Voronoi vertices are dual to Delone cells") {
  std::mt19937_64 rng(37);
  std::vector<QuadForm> forms{q0_principal(2), q0_principal(3), QuadForm(RatMatrix::identity(2)),
                              QuadForm(RatMatrix::identity(3))};
  for (int t = 0; t < 8; ++t) forms.push_back(random_reduced(rng));
  for (const auto& q : forms) {
    const VPolytope p = voronoi_polytope(q);
    const PeriodicSubdivision d = delone_subdivision(q);
    std::size_t incidences = 0;
    for (const auto& c : d.cells) incidences += c.size();
    CHECK(p.vertices.size() == incidences);
    CHECK(p.dimension == q.dim());
    // Every vertex is equidistant from the points of its ellipsoid.
    for (const auto& y : p.vertices) {
      const Rational r = q.eval(y);
      CHECK(r > 0);
    }
  }
  CHECK(voronoi_polytope(q0_principal(2)).halfspaces.size() == 6);
  CHECK(voronoi_polytope(QuadForm(RatMatrix::identity(2))).vertices.size() == 4);
  // A3: rhombic dodecahedron. Sum of v v^t over A(K_4): permutohedron.
  const VPolytope fcc = voronoi_polytope(q0_principal(3));
  CHECK(fcc.halfspaces.size() == 12);
  CHECK(fcc.vertices.size() == 14);
  const QuadForm prin = form_of(read_int_matrix(dir() + "AK4.txt"));
  const VPolytope t = voronoi_polytope(prin);
  CHECK(t.halfspaces.size() == 14);
  CHECK(t.vertices.size() == 24);
  CHECK(relevant_vectors(prin, 2).size() == 7);
}

TEST_CASE("Delone subdivision is GL-equivariant") {
  const QuadForm q = q0_principal(2);
  const PeriodicSubdivision base = delone_subdivision(q);
  for (const IntMatrix& h : {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1, 0}, {-1, 1}}}) {
    const IntMatrix m = unimodular_inverse(h).transpose();
    std::set<Cell> mapped;
    for (const auto& c : base.cells) {
      Cell img;
      for (const auto& x : c) img.push_back(m.apply(x));
      mapped.insert(normalize_cell(img));
    }
    CHECK(cell_set(delone_subdivision(q.transformed(h), 4)) == mapped);
  }
}

TEST_CASE("Delone subdivision of a matroidal interior form is the dicing") {
  for (const char* f : {"AK3.txt", "AK4.txt", "I2.txt", "I3.txt"}) {
    const IntMatrix a = read_int_matrix(dir() + f);
    CHECK(subdivisions_equal(delone_subdivision(form_of(a)), dicing_subdivision(a)));
  }
  const IntMatrix theta = cographic_representation(read_graph(dir() + "theta.graph"));
  CHECK(subdivisions_equal(delone_subdivision(form_of(theta)), dicing_subdivision(theta)));
  CHECK_FALSE(subdivisions_equal(delone_subdivision(QuadForm(RatMatrix::identity(2))),
                                 dicing_subdivision(read_int_matrix(dir() + "AK3.txt"))));
  CHECK_THROWS_AS(subdivisions_equal(delone_subdivision(q0_principal(2)), delone_subdivision(q0_principal(3))),
                  DimensionError);
  CHECK_THROWS(dicing_subdivision(IntMatrix{{1, 1}, {1, -1}}));
}

TEST_CASE("semidefinite forms give cylinders") {
  const PeriodicSubdivision d3 = delone_subdivision(QuadForm(RatMatrix{{1, 0}, {0, 0}}));
  CHECK(subdivisions_equal(d3, dicing_subdivision(read_int_matrix(dir() + "segment.txt"))));
  const PeriodicSubdivision d4 = delone_subdivision(QuadForm(RatMatrix(2, 2)));
  CHECK(d4.cells.size() == 1);
  CHECK(subdivisions_equal(d4, dicing_subdivision(IntMatrix(2, 0))));
  CHECK_THROWS_AS(delone_subdivision(QuadForm(RatMatrix{{1, 2}, {2, 1}})), InputError);
}

TEST_CASE("a window that is too small is reported") {
  const QuadForm skew = QuadForm(RatMatrix::identity(2)).transformed(IntMatrix{{1, 0}, {5, 1}});
  CHECK_THROWS_AS(delone_subdivision(skew, 1), InputError);
}

TEST_CASE("secondary cone check: serial and parallel agree") {
  const IntMatrix a = read_int_matrix(dir() + "AK3.txt");
  const auto s = secondary_cone_check(a, 6, 99, 0, Exec::Serial);
  const auto p = secondary_cone_check(a, 6, 99, 0, Exec::Parallel);
  CHECK(s.pass);
  CHECK(s.lambdas == p.lambdas);
  CHECK(s.sample_pass == p.sample_pass);
  for (const auto& l : s.lambdas)
    for (const auto& x : l) CHECK(x > 0);
}

TEST_CASE("Voronoi polytopes of matroidal forms are zonotopes") {
  for (const char* f : {"AK3.txt", "I2.txt", "AK4.txt", "I3.txt"}) CHECK(minkowski_sum_check(read_int_matrix(dir() + f)));
  CHECK(zonotope_vertices(read_int_matrix(dir() + "AK3.txt")).size() == 6);
  CHECK(zonotope_vertices(read_int_matrix(dir() + "AK4.txt")).size() == 24);
  CHECK(zonotope_vertices(IntMatrix::identity(3)).size() == 8);
}
