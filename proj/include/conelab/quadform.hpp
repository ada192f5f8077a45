#pragma once

#include <optional>
#include <vector>

#include "conelab/exact.hpp"
#include "conelab/parallel.hpp"

namespace conelab {

/// Symmetric rational g x g matrix, Q(x) = x^t Q x.
class QuadForm {
 public:
  QuadForm() = default;
  explicit QuadForm(RatMatrix m);

  std::size_t dim() const { return m_.rows(); }
  const RatMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Rational operator()(const IntVector& x) const;
  Rational eval(const RatVector& x) const;
  // B(x, y) = x^t Q y.
  Rational bilinear(const RatVector& x, const RatVector& y) const;

  QuadForm scaled(const Rational& c) const;
  // h Q h^t.
  QuadForm transformed(const IntMatrix& h) const;

  friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.m_ == b.m_; }

 private:
  RatMatrix m_;
};

bool is_positive_definite(const QuadForm& q);
bool is_positive_semidefinite(const QuadForm& q);

/// h Q h^t = diag(Q', 0) with h in GL_g(Z) and Q' positive definite.
struct RankNormalForm {
  IntMatrix h;
  QuadForm reduced;
};
// Throws InputError on indefinite input. Always present for rational
// input: the null space of a rational matrix is rational.
std::optional<RankNormalForm> rational_rank_normal_form(const QuadForm& q);

/// All x in Z^g with Q(x - center) <= bound (Fincke-Pohst on an exact LDL^t;
/// interval ends found by comparing squares, no roots taken). Output sorted.
std::vector<IntVector> enumerate_ellipsoid(const QuadForm& q, const Rational& bound,
                                           const RatVector& center, Exec exec = Exec::Parallel);

/// Nonzero x with Q(x) <= bound, one per +- pair (first nonzero entry
/// positive), sorted lexicographically.
std::vector<IntVector> short_vectors(const QuadForm& q, const Rational& bound, Exec exec = Exec::Parallel);

struct MinimalVectorSet {
  Rational minimum;
  std::vector<IntVector> vectors;
};
MinimalVectorSet minimal_vectors(const QuadForm& q, Exec exec = Exec::Parallel);

// Upper-triangle coordinates (i <= j) of x x^t, the basis used for the
// symmetric space throughout.
RatVector outer_coordinates(const IntVector& x);
RatVector form_coordinates(const RatMatrix& q);
std::size_t span_dimension(const std::vector<IntVector>& vectors, std::size_t g);

bool is_perfect(const QuadForm& q);

/// mu(Q) = 1 and the vectors of value 1 are exactly +- the columns of a.
/// False for forms that are not positive definite.
bool is_well_suited(const QuadForm& q, const IntMatrix& a);

struct WellSuitedPair {
  QuadForm form;
  IntMatrix matrix;
};

// Each constructor validates its inputs and re-verifies the output by
// enumeration, throwing VerificationError on mismatch.
WellSuitedPair well_suited_sum1(const WellSuitedPair& p1, const WellSuitedPair& p2);
// p1.matrix = [B 0; b^t 1], p1.form = [Q1 r1; r1^t 1];
// p2.matrix = [c^t 1; C 0], p2.form = [1 r2^t; r2 Q2].
WellSuitedPair well_suited_sum2(const WellSuitedPair& p1, const WellSuitedPair& p2);
// Forms carry the central block [1 -1/2; -1/2 1] on the glued coordinates.
WellSuitedPair well_suited_sum3(const WellSuitedPair& p1, const WellSuitedPair& p2);

QuadForm sum2_form(const QuadForm& left, const QuadForm& right);
QuadForm sum3_form(const QuadForm& left, const QuadForm& right);

// Pieces of the glued forms.
struct Sum2Parts {
  QuadForm q;
  RatVector r;
};
Sum2Parts sum2_left_parts(const QuadForm& left);
Sum2Parts sum2_right_parts(const QuadForm& right);
struct Sum3Parts {
  QuadForm q;
  RatVector r, s;
};
Sum3Parts sum3_left_parts(const QuadForm& left);
Sum3Parts sum3_right_parts(const QuadForm& right);
// M[j][k] = 4/3 (r1_j r2_k + s1_j s2_k) + 2/3 (r1_j s2_k + s1_j r2_k).
RatMatrix sum3_coupling(const Sum3Parts& left, const Sum3Parts& right);

// Q(xi) - <xi, r>^2: minimum over the glued coordinate.
Rational sum2_claim_value(const Sum2Parts& p, const IntVector& xi);
// Q(xi) - 4/3 (<xi,r>^2 + <xi,s>^2 + <xi,r><xi,s>): minimum over the two
// glued coordinates.
Rational sum3_claim_value(const Sum3Parts& p, const IntVector& xi);

QuadForm q5();
QuadForm q0_principal(std::size_t g);
// Q5/2 - H/10: value 1 exactly on the ten columns of A10 (Q5/2 itself takes
// value 1 on all twenty minimal vectors of Q5).
QuadForm r10_form();

/// The functional on symmetric 5x5 matrices that pairs with the symmetric
/// matrix carrying 1 at cyclic distance 1, 2 at cyclic distance 2 and 0 on
/// the diagonal. Summing over ordered index pairs, H(v v^t) = v^t H v.
RatMatrix h_functional_matrix();
Rational h_functional(const RatMatrix& alpha);
Rational h_functional(const IntVector& v);

// The twenty vectors e_i, f_i, g_i, h_i (cyclic indices) in that order.
std::vector<IntVector> q5_vector_family(char family);

}  // namespace conelab
