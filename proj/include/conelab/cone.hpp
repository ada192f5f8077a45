#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conelab/exact.hpp"
#include "conelab/io.hpp"
#include "conelab/quadform.hpp"

namespace conelab {

enum class Provenance { Matroidal, Perfect, Other };

const char* provenance_name(Provenance p);

/// Cone spanned by the rank-one forms v v^t of its generators. Generators are
/// primitive, canonically signed and pairwise distinct.
struct RayCone {
  std::size_t g = 0;
  std::vector<IntVector> generators;
  bool simplicial = true;
  Provenance provenance = Provenance::Other;
  // Defining matrix for matroidal cones; generator i is column i.
  std::optional<IntMatrix> source;
};

// Validates the generators and computes the simplicial flag.
RayCone make_cone(std::size_t g, std::vector<IntVector> generators, Provenance p = Provenance::Other);

// Dimension of the linear span of the v v^t.
std::size_t cone_dimension(const RayCone& c);

// Generators sorted, for set comparison.
std::vector<IntVector> generator_set(const RayCone& c);

/// sigma(A): requires A simple and unimodular.
RayCone sigma_of_matrix(const IntMatrix& a);

/// sigma[Q] for positive definite Q.
RayCone perfect_cone_of(const QuadForm& q);

/// sigma(A \ I) for a matroidal cone; I indexes generators (columns).
RayCone face_by_deletion(const RayCone& c, const std::vector<std::size_t>& deleted);

/// Coefficients lambda >= 0 with Q = sum lambda_i v_i v_i^t.
std::optional<RatVector> membership(const QuadForm& q, const RayCone& c);

/// q_ij <= 0 off the diagonal and every row sum >= 0.
bool principal_cone_contains(const QuadForm& q);

/// h . c . h^t: generators v -> h v.
RayCone gl_conjugate(const IntMatrix& h, const RayCone& c);

// <H, v v^t> = v^t H v.
Rational pair_functional(const RatMatrix& h, const IntVector& v);

struct FaceCertificate {
  RatMatrix functional;
  std::vector<std::size_t> zero_set;
  std::vector<std::size_t> strict_set;
  // Value on every generator, in generator order.
  RatVector values;
};

// Evaluates h on all generators and sorts them into zero / strict sets.
// Generators with positive value land in neither set.
FaceCertificate evaluate_functional(const RatMatrix& h, const RayCone& c);

// True iff cert vanishes exactly on sub and is negative on the rest.
bool certifies(const FaceCertificate& cert, const std::vector<std::size_t>& sub, const RayCone& c);

/// Exact LP: maximize t with H = 0 on sub, H(v v^t) <= -t elsewhere,
/// |H_ij| <= 1. Absent when the optimum is t <= 0.
std::optional<FaceCertificate> find_supporting_functional(const std::vector<std::size_t>& sub, const RayCone& c);

struct FaceCheck {
  bool face = false;
  std::optional<FaceCertificate> certificate;
  std::string diagnostic;
};

// Indices of c's generators matching sub_cone's generators up to sign.
std::optional<std::vector<std::size_t>> match_generators(const RayCone& sub_cone, const RayCone& c);

FaceCheck check_face(const RayCone& sub_cone, const RayCone& c);
bool is_face(const RayCone& sub_cone, const RayCone& c);

/// No generator is a nonnegative combination of the others (LP infeasibility).
bool is_extremal_generator(const RayCone& c, std::size_t i);
bool all_generators_extremal(const RayCone& c);

/// Matroidal cones up to GL_g(Z), via equivalence of the defining matrices.
bool matroidal_cones_equivalent(const RayCone& a, const RayCone& b);

Json to_json(const RayCone& c);
Json to_json(const FaceCertificate& cert);

}  // namespace conelab
