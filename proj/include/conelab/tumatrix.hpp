#pragma once

#include <optional>
#include <vector>

#include "conelab/exact.hpp"
#include "conelab/parallel.hpp"

namespace conelab {

/// An integer matrix together with whether total unimodularity was checked.
struct TUMatrix {
  IntMatrix inner;
  bool verified = false;
};

// Checks the matrix and returns it with verified = true; throws InputError
// when some square submatrix has determinant outside {-1, 0, 1}.
TUMatrix make_tu(IntMatrix a);

struct SubmatrixWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Integer det;
};

/// Exhaustive scan of all square submatrices.
bool is_totally_unimodular(const IntMatrix& a, Exec exec = Exec::Parallel);

// First violating submatrix in (size, row subset, column subset) order.
std::optional<SubmatrixWitness> tu_violation(const IntMatrix& a);

/// Returns h in GL_g(Z) with h * a totally unimodular, or nothing when no
/// such h exists. Complete: if a is unimodular, every column basis of the
/// Hermite row basis has determinant +-1 and pivoting on the first one
/// yields a totally unimodular matrix.
std::optional<IntMatrix> is_unimodular(const IntMatrix& a);

/// a == h * b * Y for some h in GL_g(Z) and signed permutation Y. Decided
/// by isomorphism of the vector matroids.
bool equivalent_unimodular(const IntMatrix& a, const IntMatrix& b);

/// Left = [B 0; b^t 1], right = [c^t 1; C 0].
struct SumShape2 {
  IntMatrix left;
  IntMatrix right;
};

/// Left = [B 0 0 0; b1^t 1 0 1; b2^t 0 1 1], right = [c1^t 1 0 1; c2^t 0 1 1; C 0 0 0].
struct SumShape3 {
  IntMatrix left;
  IntMatrix right;
};

// Block pieces of a sum shape, after validation of the fixed columns.
struct Sum2Blocks {
  IntMatrix b_block, c_block;
  IntVector b, c;
};
struct Sum3Blocks {
  IntMatrix b_block, c_block;
  IntVector b1, b2, c1, c2;
};
Sum2Blocks split_sum2(const SumShape2& s);
Sum3Blocks split_sum3(const SumShape3& s);

// Block assembly only (shape checks, no simplicity or unimodularity checks).
IntMatrix assemble_sum1(const IntMatrix& a1, const IntMatrix& a2);
IntMatrix assemble_sum2(const SumShape2& s);
IntMatrix assemble_sum3(const SumShape3& s);

// Checked sums: inputs must be simple and totally unimodular; the output is
// re-verified.
TUMatrix seymour_sum1(const IntMatrix& a1, const IntMatrix& a2);
TUMatrix seymour_sum2(const SumShape2& s);
TUMatrix seymour_sum3(const SumShape3& s);

}  // namespace conelab
