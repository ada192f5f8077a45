#include "conelab/quadform.hpp"

#include <algorithm>
#include <set>

#include "conelab/tumatrix.hpp"

namespace conelab {

QuadForm::QuadForm(RatMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(i, j).canonicalize();
  if (!m_.is_square()) throw DimensionError("quadratic form matrix must be square");
  if (!is_symmetric(m_)) throw InputError("quadratic form matrix must be symmetric");
}

Rational QuadForm::operator()(const IntVector& x) const { return eval(to_rational(x)); }

Rational QuadForm::eval(const RatVector& x) const { return bilinear(x, x); }

Rational QuadForm::bilinear(const RatVector& x, const RatVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionError("vector length does not match form dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0) s += x[i] * m_(i, j) * y[j];
  }
  return s;
}

QuadForm QuadForm::scaled(const Rational& c) const { return QuadForm(c * m_); }

QuadForm QuadForm::transformed(const IntMatrix& h) const {
  const RatMatrix hr = to_rational(h);
  return QuadForm(hr * m_ * hr.transpose());
}

bool is_positive_definite(const QuadForm& q) { return ldlt_decompose(q.matrix()).has_value(); }

bool is_positive_semidefinite(const QuadForm& q) {
  const std::size_t g = q.dim();
  if (g > 16) throw DimensionError("semidefiniteness test limited to g <= 16");
  for (std::size_t mask = 1; mask < (std::size_t(1) << g); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g; ++i)
      if (mask & (std::size_t(1) << i)) idx.push_back(i);
    if (sgn(determinant(q.matrix().submatrix(idx, idx))) < 0) return false;
  }
  return true;
}

std::optional<RankNormalForm> rational_rank_normal_form(const QuadForm& q) {
  const std::size_t g = q.dim();
  if (is_positive_definite(q)) return RankNormalForm{IntMatrix::identity(g), q};
  if (!is_positive_semidefinite(q)) throw InputError("rational_rank_normal_form: form is indefinite");
  Integer den = 1;
  for (const auto& x : q.matrix().entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix scaled(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) scaled(i, j) = Rational(q(i, j) * den).get_num();
  // The rows of U below the rank span the integral kernel.
  const HermiteForm hf = hermite_normal_form(scaled);
  const QuadForm t = q.transformed(hf.u);
  const std::size_t r = hf.rank;
  std::vector<std::size_t> top(r);
  for (std::size_t i = 0; i < r; ++i) top[i] = i;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if ((i >= r || j >= r) && sgn(t(i, j)) != 0) throw VerificationError("normal form: kernel rows are not isotropic");
  QuadForm reduced(t.matrix().submatrix(top, top));
  if (!is_positive_definite(reduced)) throw VerificationError("normal form: reduced block is not positive definite");
  return RankNormalForm{hf.u, std::move(reduced)};
}

namespace {

struct Ellipsoid {
  const LdltFactors& f;
  const RatVector& center;
  std::size_t g;
};

// Integers k with d (k - c)^2 <= rem, ascending.
std::vector<Integer> level_range(const Rational& d, const Rational& c, const Rational& rem) {
  std::vector<Integer> out;
  if (sgn(rem) < 0) return out;
  Integer k0;
  mpz_fdiv_q(k0.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  auto fits = [&](const Integer& k) {
    Rational t = Rational(k) - c;
    return d * t * t <= rem;
  };
  std::vector<Integer> down;
  for (Integer k = k0; fits(k); --k) down.push_back(k);
  std::reverse(down.begin(), down.end());
  out = std::move(down);
  for (Integer k = k0 + 1; fits(k); ++k) out.push_back(k);
  return out;
}

// Fills x[j..0] given x[g-1..j+1]; rem is the unused part of the bound.
void descend(const Ellipsoid& e, std::size_t j, const Rational& rem, IntVector& x,
             std::vector<IntVector>& out) {
  Rational shift = 0;
  for (std::size_t i = j + 1; i < e.g; ++i)
    if (sgn(e.f.l(i, j)) != 0) shift += e.f.l(i, j) * (Rational(x[i]) - e.center[i]);
  const Rational c = e.center[j] - shift;
  for (const Integer& k : level_range(e.f.d[j], c, rem)) {
    x[j] = k;
    Rational t = Rational(k) - c;
    Rational next = rem - e.f.d[j] * t * t;
    if (j == 0) {
      out.push_back(x);
    } else {
      descend(e, j - 1, next, x, out);
    }
  }
}

}  // namespace

std::vector<IntVector> enumerate_ellipsoid(const QuadForm& q, const Rational& bound, const RatVector& center,
                                           Exec exec) {
  const std::size_t g = q.dim();
  if (center.size() != g) throw DimensionError("enumeration center has wrong length");
  if (g == 0) return sgn(bound) >= 0 ? std::vector<IntVector>{IntVector{}} : std::vector<IntVector>{};
  const auto f = ldlt_decompose(q.matrix());
  if (!f) throw InputError("enumeration requires a positive definite form");
  Ellipsoid e{*f, center, g};
  const std::size_t top = g - 1;
  const std::vector<Integer> outer = level_range(f->d[top], center[top], bound);

  std::vector<std::vector<IntVector>> parts(outer.size());
  auto run = [&](std::size_t idx) {
    IntVector x(g);
    x[top] = outer[idx];
    Rational t = Rational(outer[idx]) - center[top];
    Rational rem = bound - f->d[top] * t * t;
    if (top == 0) {
      parts[idx].push_back(x);
    } else {
      descend(e, top - 1, rem, x, parts[idx]);
    }
  };
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < outer.size(); ++i) run(i);
  } else {
    const long n = static_cast<long>(outer.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) run(static_cast<std::size_t>(i));
  }
  std::vector<IntVector> all;
  for (auto& p : parts)
    for (auto& v : p) all.push_back(std::move(v));
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<IntVector> short_vectors(const QuadForm& q, const Rational& bound, Exec exec) {
  std::vector<IntVector> out;
  for (auto& v : enumerate_ellipsoid(q, bound, RatVector(q.dim(), Rational(0)), exec)) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Integer& z) { return sgn(z) == 0; });
    if (zero || canonical_sign(v) != v) continue;
    out.push_back(std::move(v));
  }
  return out;
}

MinimalVectorSet minimal_vectors(const QuadForm& q, Exec exec) {
  if (!is_positive_definite(q)) throw InputError("minimal_vectors: form is not positive definite");
  if (q.dim() == 0) throw InputError("minimal_vectors: zero-dimensional form");
  Rational bound = q(0, 0);
  for (std::size_t i = 1; i < q.dim(); ++i) bound = std::min(bound, q(i, i));
  auto cand = short_vectors(q, bound, exec);
  MinimalVectorSet out;
  out.minimum = bound;
  for (const auto& v : cand) out.minimum = std::min(out.minimum, q(v));
  for (auto& v : cand)
    if (q(v) == out.minimum) out.vectors.push_back(std::move(v));
  return out;
}

RatVector outer_coordinates(const IntVector& x) {
  RatVector c;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i; j < x.size(); ++j) c.emplace_back(x[i] * x[j]);
  return c;
}

RatVector form_coordinates(const RatMatrix& q) {
  RatVector c;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = i; j < q.cols(); ++j) c.push_back(q(i, j));
  return c;
}

std::size_t span_dimension(const std::vector<IntVector>& vectors, std::size_t g) {
  if (vectors.empty()) return 0;
  const std::size_t d = g * (g + 1) / 2;
  RatMatrix m(vectors.size(), d);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != g) throw DimensionError("vector length does not match dimension");
    const auto c = outer_coordinates(vectors[k]);
    for (std::size_t j = 0; j < d; ++j) m(k, j) = c[j];
  }
  return rank(m);
}

bool is_perfect(const QuadForm& q) {
  const auto mv = minimal_vectors(q);
  return span_dimension(mv.vectors, q.dim()) == q.dim() * (q.dim() + 1) / 2;
}

namespace {

std::vector<IntVector> canonical_columns(const IntMatrix& a) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(canonical_sign(a.column(j)));
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

}  // namespace

bool is_well_suited(const QuadForm& q, const IntMatrix& a) {
  if (a.rows() != q.dim()) throw DimensionError("is_well_suited: matrix rows do not match form dimension");
  if (!is_positive_definite(q)) return false;
  const auto sv = short_vectors(q, Rational(1));
  for (const auto& v : sv)
    if (q(v) != 1) return false;
  return sv == canonical_columns(a);
}

namespace {

void require_pair(const WellSuitedPair& p, const char* what) {
  if (!is_well_suited(p.form, p.matrix)) throw InputError(std::string(what) + ": form is not well-suited for its matrix");
}

WellSuitedPair finish(QuadForm q, IntMatrix a, const char* what) {
  if (!is_well_suited(q, a)) throw VerificationError(std::string(what) + ": assembled form is not well-suited");
  return WellSuitedPair{std::move(q), std::move(a)};
}

std::vector<std::size_t> iota_range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

}  // namespace

WellSuitedPair well_suited_sum1(const WellSuitedPair& p1, const WellSuitedPair& p2) {
  require_pair(p1, "1-sum left");
  require_pair(p2, "1-sum right");
  const std::size_t g1 = p1.form.dim(), g2 = p2.form.dim();
  RatMatrix m(g1 + g2, g1 + g2);
  for (std::size_t i = 0; i < g1; ++i)
    for (std::size_t j = 0; j < g1; ++j) m(i, j) = p1.form(i, j);
  for (std::size_t i = 0; i < g2; ++i)
    for (std::size_t j = 0; j < g2; ++j) m(g1 + i, g1 + j) = p2.form(i, j);
  return finish(QuadForm(std::move(m)), seymour_sum1(p1.matrix, p2.matrix).inner, "1-sum");
}

Sum2Parts sum2_left_parts(const QuadForm& left) {
  const std::size_t n = left.dim();
  if (n < 2) throw InputError("2-sum left form needs dimension at least 2");
  if (left(n - 1, n - 1) != 1) throw InputError("2-sum left form must have 1 in the glued diagonal entry");
  const std::size_t g1 = n - 1;
  Sum2Parts p{QuadForm(left.matrix().submatrix(iota_range(0, g1), iota_range(0, g1))), {}};
  for (std::size_t i = 0; i < g1; ++i) p.r.push_back(left(i, g1));
  return p;
}

Sum2Parts sum2_right_parts(const QuadForm& right) {
  const std::size_t n = right.dim();
  if (n < 2) throw InputError("2-sum right form needs dimension at least 2");
  if (right(0, 0) != 1) throw InputError("2-sum right form must have 1 in the glued diagonal entry");
  Sum2Parts p{QuadForm(right.matrix().submatrix(iota_range(1, n), iota_range(1, n))), {}};
  for (std::size_t j = 1; j < n; ++j) p.r.push_back(right(0, j));
  return p;
}

QuadForm sum2_form(const QuadForm& left, const QuadForm& right) {
  const Sum2Parts a = sum2_left_parts(left);
  const Sum2Parts b = sum2_right_parts(right);
  const std::size_t g1 = a.q.dim(), g2 = b.q.dim();
  const std::size_t n = g1 + g2 + 1;
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < g1; ++i) {
    for (std::size_t j = 0; j < g1; ++j) m(i, j) = a.q(i, j);
    m(i, g1) = m(g1, i) = a.r[i];
    for (std::size_t k = 0; k < g2; ++k) m(i, g1 + 1 + k) = m(g1 + 1 + k, i) = a.r[i] * b.r[k];
  }
  m(g1, g1) = 1;
  for (std::size_t k = 0; k < g2; ++k) {
    m(g1, g1 + 1 + k) = m(g1 + 1 + k, g1) = b.r[k];
    for (std::size_t l = 0; l < g2; ++l) m(g1 + 1 + k, g1 + 1 + l) = b.q(k, l);
  }
  return QuadForm(std::move(m));
}

WellSuitedPair well_suited_sum2(const WellSuitedPair& p1, const WellSuitedPair& p2) {
  require_pair(p1, "2-sum left");
  require_pair(p2, "2-sum right");
  const TUMatrix a = seymour_sum2(SumShape2{p1.matrix, p2.matrix});
  if (p1.form.dim() != p1.matrix.rows() || p2.form.dim() != p2.matrix.rows()) throw DimensionError("2-sum: form and matrix sizes differ");
  return finish(sum2_form(p1.form, p2.form), a.inner, "2-sum");
}

namespace {

void require_central(const QuadForm& q, std::size_t a, const char* what) {
  const Rational half(-1, 2);
  if (q(a, a) != 1 || q(a + 1, a + 1) != 1 || q(a, a + 1) != half) {
    throw InputError(std::string(what) + " must carry the block [1 -1/2; -1/2 1] on the glued coordinates");
  }
}

}  // namespace

Sum3Parts sum3_left_parts(const QuadForm& left) {
  const std::size_t n = left.dim();
  if (n < 3) throw InputError("3-sum left form needs dimension at least 3");
  const std::size_t g1 = n - 2;
  require_central(left, g1, "3-sum left form");
  Sum3Parts p{QuadForm(left.matrix().submatrix(iota_range(0, g1), iota_range(0, g1))), {}, {}};
  for (std::size_t i = 0; i < g1; ++i) {
    p.r.push_back(left(i, g1));
    p.s.push_back(left(i, g1 + 1));
  }
  return p;
}

Sum3Parts sum3_right_parts(const QuadForm& right) {
  const std::size_t n = right.dim();
  if (n < 3) throw InputError("3-sum right form needs dimension at least 3");
  require_central(right, 0, "3-sum right form");
  Sum3Parts p{QuadForm(right.matrix().submatrix(iota_range(2, n), iota_range(2, n))), {}, {}};
  for (std::size_t j = 2; j < n; ++j) {
    p.r.push_back(right(0, j));
    p.s.push_back(right(1, j));
  }
  return p;
}

RatMatrix sum3_coupling(const Sum3Parts& left, const Sum3Parts& right) {
  const Rational four_thirds(4, 3), two_thirds(2, 3);
  RatMatrix m(left.r.size(), right.r.size());
  for (std::size_t j = 0; j < left.r.size(); ++j)
    for (std::size_t k = 0; k < right.r.size(); ++k)
      m(j, k) = four_thirds * (left.r[j] * right.r[k] + left.s[j] * right.s[k]) +
                two_thirds * (left.r[j] * right.s[k] + left.s[j] * right.r[k]);
  return m;
}

QuadForm sum3_form(const QuadForm& left, const QuadForm& right) {
  const Sum3Parts a = sum3_left_parts(left);
  const Sum3Parts b = sum3_right_parts(right);
  const RatMatrix mc = sum3_coupling(a, b);
  const std::size_t g1 = a.q.dim(), g2 = b.q.dim();
  const std::size_t x = g1, y = g1 + 1, o = g1 + 2;
  RatMatrix m(g1 + g2 + 2, g1 + g2 + 2);
  for (std::size_t i = 0; i < g1; ++i) {
    for (std::size_t j = 0; j < g1; ++j) m(i, j) = a.q(i, j);
    m(i, x) = m(x, i) = a.r[i];
    m(i, y) = m(y, i) = a.s[i];
    for (std::size_t k = 0; k < g2; ++k) m(i, o + k) = m(o + k, i) = mc(i, k);
  }
  m(x, x) = m(y, y) = 1;
  m(x, y) = m(y, x) = Rational(-1, 2);
  for (std::size_t k = 0; k < g2; ++k) {
    m(x, o + k) = m(o + k, x) = b.r[k];
    m(y, o + k) = m(o + k, y) = b.s[k];
    for (std::size_t l = 0; l < g2; ++l) m(o + k, o + l) = b.q(k, l);
  }
  return QuadForm(std::move(m));
}

WellSuitedPair well_suited_sum3(const WellSuitedPair& p1, const WellSuitedPair& p2) {
  require_pair(p1, "3-sum left");
  require_pair(p2, "3-sum right");
  const TUMatrix a = seymour_sum3(SumShape3{p1.matrix, p2.matrix});
  return finish(sum3_form(p1.form, p2.form), a.inner, "3-sum");
}

Rational sum2_claim_value(const Sum2Parts& p, const IntVector& xi) {
  const Rational t = dot(p.r, to_rational(xi));
  return p.q(xi) - t * t;
}

Rational sum3_claim_value(const Sum3Parts& p, const IntVector& xi) {
  const RatVector x = to_rational(xi);
  const Rational a = dot(p.r, x), b = dot(p.s, x);
  return p.q(xi) - Rational(4, 3) * (a * a + b * b + a * b);
}

QuadForm q5() {
  return QuadForm(RatMatrix{{2, 1, 0, 0, 1}, {1, 2, 1, 0, 0}, {0, 1, 2, 1, 0}, {0, 0, 1, 2, 1}, {1, 0, 0, 1, 2}});
}

QuadForm q0_principal(std::size_t g) {
  if (g == 0) throw InputError("q0_principal: dimension must be at least 1");
  RatMatrix m(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) m(i, j) = i == j ? Rational(1) : Rational(1, 2);
  return QuadForm(std::move(m));
}

QuadForm r10_form() {
  return QuadForm(Rational(1, 2) * q5().matrix() + Rational(-1, 10) * h_functional_matrix());
}

RatMatrix h_functional_matrix() {
  RatMatrix h(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    h(i, (i + 1) % 5) = h((i + 1) % 5, i) = 1;
    h(i, (i + 2) % 5) = h((i + 2) % 5, i) = 2;
  }
  return h;
}

Rational h_functional(const RatMatrix& alpha) {
  if (alpha.rows() != 5 || alpha.cols() != 5) throw DimensionError("h_functional: expected a 5x5 array");
  if (!is_symmetric(alpha)) throw InputError("h_functional: coefficient array is not symmetric");
  const RatMatrix h = h_functional_matrix();
  Rational s = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) s += h(i, j) * alpha(i, j);
  return s;
}

Rational h_functional(const IntVector& v) {
  if (v.size() != 5) throw DimensionError("h_functional: expected a vector of length 5");
  RatMatrix alpha(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) alpha(i, j) = v[i] * v[j];
  return h_functional(alpha);
}

std::vector<IntVector> q5_vector_family(char family) {
  std::vector<int> pattern;
  switch (family) {
    case 'e': pattern = {1}; break;
    case 'f': pattern = {1, -1}; break;
    case 'g': pattern = {1, -1, 1}; break;
    case 'h': pattern = {1, -1, 1, -1}; break;
    default: throw InputError(std::string("unknown vector family '") + family + "'");
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < 5; ++i) {
    IntVector v(5, Integer(0));
    for (std::size_t k = 0; k < pattern.size(); ++k) v[(i + k) % 5] += pattern[k];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace conelab
