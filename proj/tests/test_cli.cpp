#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "conelab/cli.hpp"
#include "conelab/io.hpp"
#include "conelab/verify.hpp"

using namespace conelab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.rfind("@/", 0) == 0) a = default_fixture_dir() + a.substr(1);
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  const Run r = cli({"verify", "r10", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["status"].get<std::string>() == "pass");
  CHECK(j["evidence"].size() == 5);

  const Run t = cli({"tu", "check", "@/A10.txt"});
  CHECK(t.code == 0);
  CHECK(t.out == "totally unimodular: true\n");

  const Run m = cli({"--format", "json", "qf", "minvec", "@/Q5.txt"});
  CHECK(m.code == 0);
  const Json mj = Json::parse(m.out);
  CHECK(mj["mu"].get<std::string>() == "2");
  CHECK(mj["vectors"].size() == 20);
}

TEST_CASE("exit codes") {
  CHECK(cli({"tu", "check", "@/Q5.txt"}).code == 1);
  CHECK(cli({"tu", "check", "/no/such/file"}).code == 2);
  CHECK(cli({"--bogus", "tu", "check", "@/A10.txt"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"qf", "well-suited", "@/Q5.txt", "@/A10.txt"}).code == 1);
  const Run neg = cli({"tu", "check", "@/Q0_2.txt"});
  CHECK(neg.code == 2);
  const Run seymour = cli({"verify", "seymour", "--samples", "20"});
  CHECK(seymour.code == 1);
  CHECK(cli({"--seed", "-4", "verify", "principal", "--g", "2"}).code == 2);
  CHECK(cli({"qf", "minvec", "@/taxonomy_D3.txt"}).code == 2);
  CHECK(cli({"cone", "member", "@/I2.txt", "@/AK3.txt"}).code == 0);
  CHECK(cli({"cone", "member", "@/Q0_2.txt", "@/AK3.txt"}).code == 1);
}

TEST_CASE("non-TU input reports a witness") {
  const std::string path = (std::filesystem::temp_directory_path() / "conelab_not_tu.txt").string();
  std::ofstream(path) << "2 2\n1 1\n-1 1\n";
  const Run r = cli({"--format", "json", "tu", "check", path});
  CHECK(r.code == 1);
  const Json j = Json::parse(r.out);
  CHECK_FALSE(j["totally_unimodular"].get<bool>());
  CHECK(j["witness"]["det"].get<std::string>() == "2");
  const Run rat = cli({"tu", "check", "@/sum2_left_form.txt"});
  CHECK(rat.code == 2);
  CHECK_FALSE(rat.err.empty());
}

TEST_CASE("identical invocations give identical JSON") {
  const std::vector<std::string> args{"--format", "json", "verify", "principal", "--g", "3"};
  const Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Run c = cli({"--format", "json", "--seed", "99", "verify", "principal", "--g", "3"});
  CHECK(c.out != a.out);
}

TEST_CASE("cone files from perfect-cone output are accepted back") {
  const Run p = cli({"qf", "perfect-cone", "@/Q0_3.txt"});
  REQUIRE(p.code == 0);
  CHECK(parse_matrix(p.out).cols() == 6);
}

TEST_CASE("every dispatch-table example runs and every library operation is reachable") {
  const std::set<std::string> operations{
      // exactcore
      "determinant", "rank", "hermite_normal_form", "solve_exact", "ldlt_decompose", "inverse", "unimodular_inverse",
      // tumatrix
      "is_totally_unimodular", "tu_violation", "make_tu", "is_unimodular", "equivalent_unimodular", "seymour_sum1",
      "seymour_sum2", "seymour_sum3", "assemble_sum1", "assemble_sum2", "assemble_sum3", "split_sum2", "split_sum3",
      // matroids
      "vector_matroid", "circuits", "is_simple", "is_simple_matrix", "satisfies_exchange_axiom", "matroid_isomorphic",
      "graphic_matroid", "graphic_representation", "cographic_representation", "read_graph", "is_connected",
      "complete_graph", "r10_matrix",
      // quadforms
      "is_positive_definite", "is_positive_semidefinite", "rational_rank_normal_form", "enumerate_ellipsoid",
      "short_vectors", "minimal_vectors", "span_dimension", "is_perfect", "is_well_suited", "well_suited_sum1",
      "well_suited_sum2", "well_suited_sum3", "sum2_form", "sum3_form", "sum2_left_parts", "sum2_right_parts",
      "sum3_left_parts", "sum3_right_parts", "sum3_coupling", "sum2_claim_value", "sum3_claim_value", "q5",
      "q0_principal", "r10_form", "h_functional_matrix", "h_functional", "q5_vector_family",
      // cones
      "make_cone", "cone_dimension", "sigma_of_matrix", "perfect_cone_of", "face_by_deletion", "membership",
      "principal_cone_contains", "gl_conjugate", "pair_functional", "evaluate_functional", "certifies",
      "find_supporting_functional", "match_generators", "check_face", "is_face", "is_extremal_generator",
      "all_generators_extremal", "matroidal_cones_equivalent",
      // delone
      "delone_subdivision", "normalize_cell", "dicing_subdivision", "subdivisions_equal", "relevant_vectors",
      "voronoi_polytope", "secondary_cone_check", "zonotope_vertices", "minkowski_sum_check",
      // verify
      "verify_r10", "load_r10_inputs", "verify_principal", "verify_taxonomy_g2", "verify_seymour_pipeline"};
  std::set<std::string> reached;
  for (const auto& c : dispatch_table()) {
    reached.insert(c.ops.begin(), c.ops.end());
    const Run r = cli(c.example);
    INFO(c.path, " -> ", r.err);
    if (c.path == "verify seymour")
      CHECK(r.code == 1);
    else
      CHECK(r.code == 0);
  }
  for (const auto& op : operations) {
    INFO(op);
    CHECK(reached.count(op) == 1);
  }
}
