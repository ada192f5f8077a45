#include "conelab/exact.hpp"

#include <utility>

namespace conelab {

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = a(i, j).get_num();
    }
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

bool is_symmetric(const RatMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

namespace {

// In-place Bareiss elimination. Returns the rank; `sign` collects row swaps.
// After the call, m(r-1, pivot col) holds the last leading minor.
std::size_t bareiss(IntMatrix& m, int& sign, Integer& last_pivot) {
  sign = 1;
  last_pivot = 1;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    last_pivot = prev;
    ++r;
  }
  return r;
}

IntMatrix clear_denominators(const RatMatrix& a, Integer& scale) {
  IntMatrix m(a.rows(), a.cols());
  scale = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
    scale *= l;
  }
  return m;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Integer last;
  std::size_t r = bareiss(m, sign, last);
  if (r < m.rows()) return 0;
  return sign * last;
}

Rational determinant(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  Integer scale;
  IntMatrix m = clear_denominators(a, scale);
  Rational d(determinant(m), scale);
  d.canonicalize();
  return d;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  int sign = 1;
  Integer last;
  return bareiss(m, sign, last);
}

std::size_t rank(const RatMatrix& a) {
  Integer scale;
  return rank(clear_denominators(a, scale));
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);

  auto row_sub = [&](std::size_t target, std::size_t source, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < n; ++j) h(target, j) -= q * h(source, j);
    for (std::size_t j = 0; j < m; ++j) u(target, j) -= q * u(source, j);
  };
  auto row_negate = [&](std::size_t r) {
    for (std::size_t j = 0; j < n; ++j) h(r, j) = -h(r, j);
    for (std::size_t j = 0; j < m; ++j) u(r, j) = -u(r, j);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on the column segment h[r.., c] until one nonzero remains.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == m) break;
      if (best != r) {
        h.swap_rows(best, r);
        u.swap_rows(best, r);
      }
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        row_sub(i, r, q);
        if (sgn(h(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) row_negate(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      row_sub(i, r, q);
    }
    ++r;
  }
  return HermiteForm{std::move(h), std::move(u), r};
}

std::optional<ExactSolution> solve_exact(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw DimensionError("solve_exact: rows of A must match length of b");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  RatMatrix t(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a(i, j);
    t(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(t(p, c)) == 0) ++p;
    if (p == m) continue;
    t.swap_rows(p, r);
    const Rational inv = 1 / t(r, c);
    for (std::size_t j = c; j <= n; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(t(i, c)) == 0) continue;
      const Rational f = t(i, c);
      for (std::size_t j = c; j <= n; ++j) t(i, j) -= f * t(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (sgn(t(i, n)) != 0) return std::nullopt;

  ExactSolution sol;
  sol.x.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    sol.x[pivot_cols[k]] = t(k, n);
    is_pivot[pivot_cols[k]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector k(n, Rational(0));
    k[f] = 1;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p) k[pivot_cols[p]] = -t(p, f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<LdltFactors> ldlt_decompose(const RatMatrix& q) {
  if (!q.is_square()) throw DimensionError("ldlt_decompose: matrix must be square");
  if (!is_symmetric(q)) throw InputError("ldlt_decompose: matrix is not symmetric");
  const std::size_t n = q.rows();
  LdltFactors f{RatMatrix::identity(n), RatVector(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational dj = q(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= f.l(j, k) * f.l(j, k) * f.d[k];
    if (sgn(dj) <= 0) return std::nullopt;
    f.d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = q(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.l(i, k) * f.l(j, k) * f.d[k];
      f.l(i, j) = s / dj;
    }
  }
  return f;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix t(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a(i, j);
    t(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(t(p, c)) == 0) ++p;
    if (p == n) throw InputError("inverse of a singular matrix");
    t.swap_rows(p, c);
    const Rational inv = 1 / t(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) t(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(t(i, c)) == 0) continue;
      const Rational f = t(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) t(i, j) -= f * t(c, j);
    }
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = t(i, n + j);
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const Integer d = determinant(a);
  if (abs(d) != 1) throw InputError("matrix is not in GL_n(Z)");
  auto inv = to_integer(inverse(to_rational(a)));
  if (!inv) throw VerificationError("inverse of a unimodular matrix is not integral");
  return *inv;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector canonical_sign(IntVector v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

bool is_primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g == 1;
}

}  // namespace conelab
