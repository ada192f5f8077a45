#pragma once

#include <cstdint>
#include <vector>

#include "conelab/exact.hpp"
#include "conelab/io.hpp"
#include "conelab/parallel.hpp"
#include "conelab/quadform.hpp"

namespace conelab {

// A cell is its sorted set of lattice points.
using Cell = std::vector<IntVector>;

/// Translation classes of cells, each normalized so that its
/// lexicographically smallest point is the origin. Unbounded cells (rank
/// deficient input) are clipped to the window [-R, R+1]^g before
/// normalization.
struct PeriodicSubdivision {
  std::size_t g = 0;
  long window = 0;
  std::vector<Cell> cells;
  bool normalized = true;
};

// 3 for g <= 3, 2 for g = 4.
long default_window(std::size_t g);

Cell normalize_cell(Cell c);

/// Del(Q) for positive semidefinite Q, g <= 4. Cells are dual to the
/// vertices of Vor(Q): the lattice points on the empty ellipsoid around each
/// vertex. Semidefinite input goes through the rank normal form.
PeriodicSubdivision delone_subdivision(const QuadForm& q, long window = 0);

/// Cells of the arrangement {v_i^t x in Z} for A simple unimodular, g <= 4.
PeriodicSubdivision dicing_subdivision(const IntMatrix& a, long window = 0);

// Throws on dimension or window mismatch.
bool subdivisions_equal(const PeriodicSubdivision& s1, const PeriodicSubdivision& s2);

/// normal^t Q x <= offset, with offset = Q(normal) / 2.
struct Halfspace {
  IntVector normal;
  Rational offset;
};

struct VPolytope {
  std::size_t g = 0;
  std::size_t dimension = 0;
  RatMatrix form;
  std::vector<Halfspace> halfspaces;
  std::vector<RatVector> vertices;
};

/// Voronoi-relevant vectors of a positive definite form within [-R, R]^g:
/// v is relevant iff +-v are the only shortest vectors of v + 2Z^g.
/// One per +- pair.
std::vector<IntVector> relevant_vectors(const QuadForm& q, long radius);

/// Vor(Q) = {x : Q(x) <= Q(x - v) for all v in Z^g}. Every vertex is checked
/// against the whole lattice; an outside vertex means the window was too
/// small and raises InputError.
VPolytope voronoi_polytope(const QuadForm& q, long radius = 0);

/// For random positive lambda, Del(sum lambda_i v_i v_i^t) equals the dicing
/// of A. Samples are drawn serially; the comparisons run per Exec.
struct SecondaryCheckResult {
  bool pass = true;
  std::vector<RatVector> lambdas;
  std::vector<bool> sample_pass;
};
SecondaryCheckResult secondary_cone_check(const IntMatrix& a, std::size_t samples, std::uint64_t seed,
                                          long window = 0, Exec exec = Exec::Parallel);

/// Vertices sum_i eps_i v_i / 2 over realizable sign vectors eps.
std::vector<RatVector> zonotope_vertices(const IntMatrix& a);

/// With Q = sum v_i v_i^t, the image Q.Vor(Q) is the zonotope
/// sum_i [-1/2, 1/2] v_i; compares vertex sets exactly.
bool minkowski_sum_check(const IntMatrix& a);

Json to_json(const PeriodicSubdivision& s);
Json to_json(const VPolytope& p);

}  // namespace conelab
