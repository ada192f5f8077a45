#include <doctest.h>

#include <sstream>

#include "conelab/io.hpp"
#include "conelab/matroid.hpp"
#include "conelab/verify.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {

std::set<std::vector<std::size_t>> as_sets(const Matroid& m) {
  std::set<std::vector<std::size_t>> out;
  for (ElementSet c : circuits(m)) {
    std::vector<std::size_t> idx;
    for (std::size_t e = 0; e < m.size(); ++e)
      if (c >> e & 1u) idx.push_back(e);
    out.insert(idx);
  }
  return out;
}

std::string dir() { return default_fixture_dir() + "/"; }

}  // namespace

TEST_CASE("circuits match minimal dependent sets") {
  for (const char* f : {"AK3.txt", "AK4.txt", "A10.txt", "I3.txt"}) {
    const IntMatrix a = read_int_matrix(dir() + f);
    const Matroid m = vector_matroid(a);
    CHECK(as_sets(m) == oracle::brute_circuits(a));
    CHECK(m.rank() == oracle::brute_rank(to_rational(a)));
    CHECK(m.satisfies_exchange_axiom());
  }
}

TEST_CASE("R10 has rank 5, 10 elements, no circuit of size 3") {
  const Matroid m = vector_matroid(r10_matrix());
  CHECK(m.size() == 10);
  CHECK(m.rank() == 5);
  CHECK(is_simple(m));
  for (const auto& c : as_sets(m)) CHECK(c.size() >= 4);
  CHECK(r10_matrix() == read_int_matrix(dir() + "A10.txt"));
}

TEST_CASE("simplicity") {
  CHECK(is_simple_matrix(read_int_matrix(dir() + "AK4.txt")));
  CHECK_FALSE(is_simple_matrix(IntMatrix{{1, 0, 1}, {0, 1, 0}}));
  CHECK_FALSE(is_simple_matrix(IntMatrix{{1, 0, -1}, {0, 1, 0}}));
  CHECK_FALSE(is_simple_matrix(IntMatrix{{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("graphic representation: circuits are cycles") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.edges.size() == 6);
  const IntMatrix a = graphic_representation(k4);
  CHECK(a.rows() == 3);
  CHECK(matroid_isomorphic(vector_matroid(a), graphic_matroid(k4)));
  CHECK(as_sets(graphic_matroid(k4)) == as_sets(vector_matroid(a)));
  // K4 has four triangles and three 4-cycles.
  CHECK(as_sets(graphic_matroid(k4)).size() == 7);
  const Graph file = read_graph(dir() + "K4.graph");
  CHECK(matroid_isomorphic(graphic_matroid(file), graphic_matroid(k4)));
}

TEST_CASE("cographic representation: circuits are bonds") {
  for (const char* f : {"theta.graph", "K3.graph", "K4.graph"}) {
    const Graph g = read_graph(dir() + f);
    const IntMatrix a = cographic_representation(g);
    CHECK(a.cols() == g.edges.size());
    CHECK(a.rows() == g.edges.size() - g.vertices + 1);
    CHECK(as_sets(vector_matroid(a)) == oracle::bonds(g.vertices, g.edges));
  }
}

TEST_CASE("matroid isomorphism") {
  const IntMatrix a = read_int_matrix(dir() + "AK4.txt");
  const IntMatrix p = a.columns({5, 3, 1, 0, 2, 4});
  CHECK(matroid_isomorphic(vector_matroid(a), vector_matroid(p)));
  CHECK_FALSE(matroid_isomorphic(vector_matroid(a), vector_matroid(IntMatrix{{1, 0, 0, 1, 0, 1},
                                                                          {0, 1, 0, 1, 1, 0},
                                                                          {0, 0, 1, 0, 0, 0}})));
}

TEST_CASE("graph parsing") {
  std::istringstream ok("3 3\n0 1\n1 2\n2 0\n");
  const Graph g = parse_graph(ok);
  CHECK(g.vertices == 3);
  CHECK(is_connected(g));
  std::istringstream bad("2 1\n0 5\n");
  CHECK_THROWS_AS(parse_graph(bad), InputError);
}
