#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conelab/exact.hpp"
#include "conelab/io.hpp"
#include "conelab/quadform.hpp"

namespace conelab {

struct Evidence {
  std::string claim;
  std::string computed;
  std::string expected;
  // How the computed value was obtained: exact, enumeration, lp, sampling.
  std::string method;
  bool pass = false;
};

/// Outcome of a named scenario; passes iff every evidence row does.
struct Report {
  std::string scenario;
  bool pass = true;
  std::vector<Evidence> evidence;
  std::uint64_t seed = 0;
  double wall_seconds = 0;
  Json attachments = Json::object();

  void add(Evidence e);
};

// 12345 unless CONELAB_SEED is set.
std::uint64_t default_seed();
std::string default_fixture_dir();

// Wall time is left out unless asked for, so that reports are byte-stable.
Json to_json(const Report& r, bool timing = false);
std::string to_text(const Report& r, bool timing = false);

struct R10Inputs {
  IntMatrix a10;
  QuadForm q5;
  RatMatrix h;
};
R10Inputs load_r10_inputs(const std::string& fixture_dir);

/// A10 TU and simple; Q5 perfect; M(Q5) = {e, f, g, h} with minimum 2;
/// H = (0, -2, 0, -2) on the families; sigma(A10) a face of sigma[Q5].
Report verify_r10(const R10Inputs& in);
Report verify_r10(const std::string& fixture_dir);

/// M(Q0) against A(K_{g+1}) and the principal inequalities against
/// membership on random forms, 2 <= g <= 5.
Report verify_principal(std::size_t g, std::uint64_t seed, std::size_t samples = 100);

/// The four perfect cones and four secondary cones for g = 2.
Report verify_taxonomy_g2(const std::string& fixture_dir);

/// Well-suited sums on the fixture pairs plus the bounds used in their
/// proofs, sampled on random integer vectors.
Report verify_seymour_pipeline(const std::string& fixture_dir, std::uint64_t seed, std::size_t samples = 1000);

}  // namespace conelab
