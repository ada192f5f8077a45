#include "conelab/tumatrix.hpp"

#include <atomic>
#include <cstdint>

#include "conelab/matroid.hpp"

namespace conelab {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  if (k == 0 || k > n) return out;
  Mask s = (Mask(1) << k) - 1;
  const Mask limit = Mask(1) << n;
  while (s < limit) {
    out.push_back(s);
    Mask c = s & (~s + 1);
    Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

std::vector<std::size_t> bits(Mask m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) idx.push_back(i);
  return idx;
}

// Bareiss on a k x k scratch. Intermediate values are minors of the
// submatrix; products are formed in 128 bits.
std::int64_t small_det(std::vector<std::int64_t>& a, std::size_t k) {
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p * k + c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i)
      for (std::size_t j = c + 1; j < k; ++j) {
        __int128 t = static_cast<__int128>(a[c * k + c]) * a[i * k + j] -
                     static_cast<__int128>(a[i * k + c]) * a[c * k + j];
        a[i * k + j] = static_cast<std::int64_t>(t / prev);
      }
    prev = a[c * k + c];
  }
  return sign * a[k * k - 1];
}

struct SmallMatrix {
  std::size_t rows, cols;
  std::vector<std::int64_t> v;
};

// Determinant of the submatrix (row_idx x columns of col_mask); returns
// true when it lies in {-1, 0, 1}.
bool minor_ok(const SmallMatrix& a, const std::vector<std::size_t>& row_idx, Mask col_mask,
              std::vector<std::int64_t>& scratch, std::int64_t* det_out) {
  const std::size_t k = row_idx.size();
  scratch.resize(k * k);
  std::size_t cj = 0;
  for (std::size_t j = 0; col_mask; ++j, col_mask >>= 1) {
    if (!(col_mask & 1)) continue;
    for (std::size_t i = 0; i < k; ++i) scratch[i * k + cj] = a.v[row_idx[i] * a.cols + j];
    ++cj;
  }
  std::int64_t d = small_det(scratch, k);
  if (det_out) *det_out = d;
  return d >= -1 && d <= 1;
}

// Nothing when some entry is outside {-1,0,1} (reported as a 1x1 violation).
std::optional<SmallMatrix> to_small(const IntMatrix& a, SubmatrixWitness* bad) {
  SmallMatrix s{a.rows(), a.cols(), std::vector<std::int64_t>(a.rows() * a.cols())};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& x = a(i, j);
      if (abs(x) > 1) {
        if (bad) *bad = SubmatrixWitness{{i}, {j}, x};
        return std::nullopt;
      }
      s.v[i * a.cols() + j] = x.get_si();
    }
  return s;
}

void check_size(const IntMatrix& a) {
  if (a.rows() >= 64 || a.cols() >= 64) throw DimensionError("total unimodularity scan supports fewer than 64 rows and columns");
}

}  // namespace

std::optional<SubmatrixWitness> tu_violation(const IntMatrix& a) {
  check_size(a);
  SubmatrixWitness w;
  auto s = to_small(a, &w);
  if (!s) return w;
  std::vector<std::int64_t> scratch;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 2; k <= kmax; ++k) {
    const auto col_sets = subsets_of_size(a.cols(), k);
    for (Mask rm : subsets_of_size(a.rows(), k)) {
      const auto rows = bits(rm);
      for (Mask cm : col_sets) {
        std::int64_t d = 0;
        if (!minor_ok(*s, rows, cm, scratch, &d)) return SubmatrixWitness{rows, bits(cm), Integer(static_cast<long>(d))};
      }
    }
  }
  return std::nullopt;
}

bool is_totally_unimodular(const IntMatrix& a, Exec exec) {
  if (exec == Exec::Serial) return !tu_violation(a).has_value();
  check_size(a);
  auto s = to_small(a, nullptr);
  if (!s) return false;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  // Sizes are processed in increasing order so every Bareiss intermediate is
  // an already verified minor.
  for (std::size_t k = 2; k <= kmax; ++k) {
    const auto col_sets = subsets_of_size(a.cols(), k);
    const auto row_sets = subsets_of_size(a.rows(), k);
    std::atomic<bool> bad{false};
    const long count = static_cast<long>(row_sets.size());
#pragma omp parallel
    {
      std::vector<std::int64_t> scratch;
#pragma omp for schedule(dynamic, 8)
      for (long r = 0; r < count; ++r) {
        if (bad.load(std::memory_order_relaxed)) continue;
        const auto rows = bits(row_sets[r]);
        for (Mask cm : col_sets) {
          if (!minor_ok(*s, rows, cm, scratch, nullptr)) {
            bad.store(true, std::memory_order_relaxed);
            break;
          }
        }
      }
    }
    if (bad.load()) return false;
  }
  return true;
}

TUMatrix make_tu(IntMatrix a) {
  if (auto w = tu_violation(a)) {
    throw InputError("matrix is not totally unimodular: a " + std::to_string(w->rows.size()) + "x" +
                     std::to_string(w->rows.size()) + " submatrix has determinant " + w->det.get_str());
  }
  return TUMatrix{std::move(a), true};
}

std::optional<IntMatrix> is_unimodular(const IntMatrix& a) {
  const std::size_t g = a.rows();
  if (is_totally_unimodular(a)) return IntMatrix::identity(g);
  const HermiteForm hf = hermite_normal_form(a);
  const std::size_t r = hf.rank;

  // First column basis of the nonzero Hermite rows, chosen greedily.
  std::vector<std::size_t> basis;
  for (std::size_t j = 0; j < a.cols() && basis.size() < r; ++j) {
    auto trial = basis;
    trial.push_back(j);
    std::vector<std::size_t> top(r);
    for (std::size_t i = 0; i < r; ++i) top[i] = i;
    if (rank(hf.h.submatrix(top, trial)) == trial.size()) basis = trial;
  }
  std::vector<std::size_t> top(r);
  for (std::size_t i = 0; i < r; ++i) top[i] = i;
  const IntMatrix b = hf.h.submatrix(top, basis);
  if (abs(determinant(b)) != 1) return std::nullopt;

  IntMatrix d = IntMatrix::identity(g);
  const IntMatrix b_inv = unimodular_inverse(b);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) d(i, j) = b_inv(i, j);
  IntMatrix h = d * hf.u;
  if (!is_totally_unimodular(h * a)) return std::nullopt;
  return h;
}

bool equivalent_unimodular(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("equivalent_unimodular: shapes differ");
  if (!is_unimodular(a)) throw InputError("equivalent_unimodular: first matrix is not unimodular");
  if (!is_unimodular(b)) throw InputError("equivalent_unimodular: second matrix is not unimodular");
  if (rank(a) != rank(b)) return false;
  return matroid_isomorphic(vector_matroid(a), vector_matroid(b));
}

namespace {

void require_simple_tu(const IntMatrix& a, const char* what) {
  if (!is_simple_matrix(a)) throw InputError(std::string(what) + " is not simple");
  if (!is_totally_unimodular(a)) throw InputError(std::string(what) + " is not totally unimodular");
}

void require_no_zero_column(const IntMatrix& m, const char* what) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows(); ++i) zero = zero && sgn(m(i, j)) == 0;
    if (zero) throw InputError(std::string(what) + " has a zero column");
  }
}

// Checks that the trailing columns of m equal `pattern` (row-major, rows x w).
void require_trailing(const IntMatrix& m, const std::vector<std::vector<int>>& pattern, const char* what) {
  const std::size_t w = pattern.empty() ? 0 : pattern[0].size();
  if (m.cols() < w + 1 || m.rows() != pattern.size()) throw InputError(std::string(what) + ": wrong block shape");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < w; ++k)
      if (m(i, m.cols() - w + k) != pattern[i][k]) throw InputError(std::string(what) + ": trailing columns do not match the sum pattern");
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

}  // namespace

Sum2Blocks split_sum2(const SumShape2& s) {
  const IntMatrix& l = s.left;
  const IntMatrix& r = s.right;
  if (l.rows() < 2 || r.rows() < 2) throw InputError("2-sum blocks need at least two rows");
  std::vector<std::vector<int>> lp(l.rows(), {0}), rp(r.rows(), {0});
  lp.back()[0] = 1;
  rp.front()[0] = 1;
  require_trailing(l, lp, "2-sum left");
  require_trailing(r, rp, "2-sum right");
  const std::size_t g1 = l.rows() - 1, n1 = l.cols() - 1;
  const std::size_t g2 = r.rows() - 1, n2 = r.cols() - 1;
  Sum2Blocks b;
  b.b_block = l.submatrix(range(0, g1), range(0, n1));
  b.b = l.submatrix({g1}, range(0, n1)).row(0);
  b.c = r.submatrix({0}, range(0, n2)).row(0);
  b.c_block = r.submatrix(range(1, g2 + 1), range(0, n2));
  require_no_zero_column(b.b_block, "2-sum block B");
  require_no_zero_column(b.c_block, "2-sum block C");
  return b;
}

Sum3Blocks split_sum3(const SumShape3& s) {
  const IntMatrix& l = s.left;
  const IntMatrix& r = s.right;
  if (l.rows() < 3 || r.rows() < 3) throw InputError("3-sum blocks need at least three rows");
  std::vector<std::vector<int>> lp(l.rows(), {0, 0, 0}), rp(r.rows(), {0, 0, 0});
  lp[l.rows() - 2] = {1, 0, 1};
  lp[l.rows() - 1] = {0, 1, 1};
  rp[0] = {1, 0, 1};
  rp[1] = {0, 1, 1};
  require_trailing(l, lp, "3-sum left");
  require_trailing(r, rp, "3-sum right");
  const std::size_t g1 = l.rows() - 2, n1 = l.cols() - 3;
  const std::size_t g2 = r.rows() - 2, n2 = r.cols() - 3;
  Sum3Blocks b;
  b.b_block = l.submatrix(range(0, g1), range(0, n1));
  b.b1 = l.submatrix({g1}, range(0, n1)).row(0);
  b.b2 = l.submatrix({g1 + 1}, range(0, n1)).row(0);
  b.c1 = r.submatrix({0}, range(0, n2)).row(0);
  b.c2 = r.submatrix({1}, range(0, n2)).row(0);
  b.c_block = r.submatrix(range(2, g2 + 2), range(0, n2));
  require_no_zero_column(b.b_block, "3-sum block B");
  require_no_zero_column(b.c_block, "3-sum block C");
  return b;
}

IntMatrix assemble_sum1(const IntMatrix& a1, const IntMatrix& a2) {
  IntMatrix a(a1.rows() + a2.rows(), a1.cols() + a2.cols());
  for (std::size_t i = 0; i < a1.rows(); ++i)
    for (std::size_t j = 0; j < a1.cols(); ++j) a(i, j) = a1(i, j);
  for (std::size_t i = 0; i < a2.rows(); ++i)
    for (std::size_t j = 0; j < a2.cols(); ++j) a(a1.rows() + i, a1.cols() + j) = a2(i, j);
  return a;
}

IntMatrix assemble_sum2(const SumShape2& s) {
  const Sum2Blocks p = split_sum2(s);
  const std::size_t g1 = p.b_block.rows(), n1 = p.b_block.cols();
  const std::size_t g2 = p.c_block.rows(), n2 = p.c_block.cols();
  IntMatrix a(g1 + g2 + 1, n1 + n2 + 1);
  for (std::size_t i = 0; i < g1; ++i)
    for (std::size_t j = 0; j < n1; ++j) a(i, j) = p.b_block(i, j);
  for (std::size_t j = 0; j < n1; ++j) a(g1, j) = p.b[j];
  for (std::size_t j = 0; j < n2; ++j) a(g1, n1 + j) = p.c[j];
  a(g1, n1 + n2) = 1;
  for (std::size_t i = 0; i < g2; ++i)
    for (std::size_t j = 0; j < n2; ++j) a(g1 + 1 + i, n1 + j) = p.c_block(i, j);
  return a;
}

IntMatrix assemble_sum3(const SumShape3& s) {
  const Sum3Blocks p = split_sum3(s);
  const std::size_t g1 = p.b_block.rows(), n1 = p.b_block.cols();
  const std::size_t g2 = p.c_block.rows(), n2 = p.c_block.cols();
  IntMatrix a(g1 + g2 + 2, n1 + n2 + 3);
  for (std::size_t i = 0; i < g1; ++i)
    for (std::size_t j = 0; j < n1; ++j) a(i, j) = p.b_block(i, j);
  for (std::size_t j = 0; j < n1; ++j) {
    a(g1, j) = p.b1[j];
    a(g1 + 1, j) = p.b2[j];
  }
  for (std::size_t j = 0; j < n2; ++j) {
    a(g1, n1 + j) = p.c1[j];
    a(g1 + 1, n1 + j) = p.c2[j];
  }
  const std::size_t t = n1 + n2;
  a(g1, t) = 1;
  a(g1, t + 2) = 1;
  a(g1 + 1, t + 1) = 1;
  a(g1 + 1, t + 2) = 1;
  for (std::size_t i = 0; i < g2; ++i)
    for (std::size_t j = 0; j < n2; ++j) a(g1 + 2 + i, n1 + j) = p.c_block(i, j);
  return a;
}

namespace {

TUMatrix finish_sum(IntMatrix a, const char* what) {
  if (!is_simple_matrix(a) || !is_totally_unimodular(a)) {
    throw VerificationError(std::string(what) + " of simple totally unimodular blocks is not simple and totally unimodular");
  }
  return TUMatrix{std::move(a), true};
}

}  // namespace

TUMatrix seymour_sum1(const IntMatrix& a1, const IntMatrix& a2) {
  require_simple_tu(a1, "1-sum left");
  require_simple_tu(a2, "1-sum right");
  return finish_sum(assemble_sum1(a1, a2), "1-sum");
}

TUMatrix seymour_sum2(const SumShape2& s) {
  split_sum2(s);
  require_simple_tu(s.left, "2-sum left");
  require_simple_tu(s.right, "2-sum right");
  return finish_sum(assemble_sum2(s), "2-sum");
}

TUMatrix seymour_sum3(const SumShape3& s) {
  split_sum3(s);
  require_simple_tu(s.left, "3-sum left");
  require_simple_tu(s.right, "3-sum right");
  return finish_sum(assemble_sum3(s), "3-sum");
}

}  // namespace conelab
