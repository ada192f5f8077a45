#include "conelab/delone.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>

#include "conelab/lp.hpp"
#include "conelab/matroid.hpp"
#include "conelab/tumatrix.hpp"

namespace conelab {

long default_window(std::size_t g) { return g <= 3 ? 3 : 2; }

namespace {

long resolve_window(long window, std::size_t g) {
  if (window == 0) return default_window(g);
  if (window < 1) throw InputError("window radius must be positive");
  return window;
}

void check_dim(std::size_t g, const char* what) {
  if (g > 4) throw DimensionError(std::string(what) + " is limited to g <= 4");
}

std::vector<IntVector> box_points(std::size_t g, long lo, long hi) {
  std::vector<IntVector> out;
  IntVector x(g, Integer(lo));
  if (g == 0) return {x};
  while (true) {
    out.push_back(x);
    std::size_t i = g;
    while (i > 0) {
      --i;
      if (x[i] < hi) {
        ++x[i];
        break;
      }
      x[i] = lo;
      if (i == 0) return out;
    }
  }
}

std::size_t affine_rank(const Cell& pts, std::size_t g) {
  if (pts.size() < 2) return 0;
  IntMatrix m(pts.size() - 1, g);
  for (std::size_t k = 1; k < pts.size(); ++k)
    for (std::size_t j = 0; j < g; ++j) m(k - 1, j) = pts[k][j] - pts[0][j];
  return rank(m);
}

bool on_window_boundary(const IntVector& x, long window) {
  for (const auto& c : x)
    if (c <= -window || c >= window + 1) return true;
  return false;
}

void finalize(PeriodicSubdivision& s) {
  std::sort(s.cells.begin(), s.cells.end());
  s.cells.erase(std::unique(s.cells.begin(), s.cells.end()), s.cells.end());
}

RatVector times_form(const RatMatrix& q, const IntVector& v) {
  RatVector out(q.rows(), Rational(0));
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) out[i] += q(i, j) * v[j];
  return out;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VPolytope voronoi_definite(const QuadForm& q, long radius) {
  const std::size_t g = q.dim();
  VPolytope p;
  p.g = p.dimension = g;
  p.form = q.matrix();
  if (g == 0) {
    p.vertices.push_back({});
    return p;
  }
  for (const auto& v : relevant_vectors(q, radius)) {
    IntVector neg(v);
    for (auto& x : neg) x = -x;
    const Rational off = q(v) / 2;
    p.halfspaces.push_back({v, off});
    p.halfspaces.push_back({neg, off});
  }
  std::vector<RatVector> rows;
  for (const auto& h : p.halfspaces) rows.push_back(times_form(p.form, h.normal));

  // Drop halfspaces implied by the others.
  for (std::size_t i = 0; i < p.halfspaces.size();) {
    LinearProgram lp(g, true);
    lp.objective = rows[i];
    for (std::size_t j = 0; j < p.halfspaces.size(); ++j)
      if (j != i) lp.add(rows[j], Sense::LessEqual, p.halfspaces[j].offset);
    const LpResult r = solve_lp(lp);
    if (r.status == LpStatus::Optimal && r.value <= p.halfspaces[i].offset) {
      p.halfspaces.erase(p.halfspaces.begin() + static_cast<long>(i));
      rows.erase(rows.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }

  // Too few relevant vectors in the window leave the polytope unbounded.
  for (std::size_t k = 0; k < 2 * g; ++k) {
    LinearProgram lp(g, true);
    lp.objective[k / 2] = k % 2 ? -1 : 1;
    for (std::size_t j = 0; j < p.halfspaces.size(); ++j) lp.add(rows[j], Sense::LessEqual, p.halfspaces[j].offset);
    if (solve_lp(lp).status != LpStatus::Optimal) throw InputError("voronoi: window too small, polytope is unbounded");
  }

  std::set<RatVector> verts;
  for_each_subset(p.halfspaces.size(), g, [&](const std::vector<std::size_t>& idx) {
    RatMatrix m(g, g);
    RatVector b(g);
    for (std::size_t k = 0; k < g; ++k) {
      for (std::size_t j = 0; j < g; ++j) m(k, j) = rows[idx[k]][j];
      b[k] = p.halfspaces[idx[k]].offset;
    }
    if (sgn(determinant(m)) == 0) return;
    const auto sol = solve_exact(m, b);
    for (std::size_t h = 0; h < rows.size(); ++h)
      if (dot(rows[h], sol->x) > p.halfspaces[h].offset) return;
    verts.insert(sol->x);
  });
  p.vertices.assign(verts.begin(), verts.end());

  // Each vertex must have the origin among its nearest lattice points.
  for (const auto& y : p.vertices) {
    const Rational r = q.eval(y);
    for (const auto& x : enumerate_ellipsoid(q, r, y)) {
      RatVector d(g);
      for (std::size_t k = 0; k < g; ++k) d[k] = Rational(x[k]) - y[k];
      if (q.eval(d) < r) throw InputError("voronoi: window too small, vertex " + format_vector(y) + " is closer to " + format_vector(x));
    }
  }
  return p;
}

std::vector<Cell> delone_cells_definite(const QuadForm& q, long window) {
  const std::size_t g = q.dim();
  const VPolytope vor = voronoi_definite(q, window);
  std::vector<Cell> cells;
  for (const auto& y : vor.vertices) {
    Cell c = enumerate_ellipsoid(q, q.eval(y), y);
    for (const auto& x : c)
      if (on_window_boundary(x, window) && g > 0)
        throw InputError("delone: window too small, cell around " + format_vector(y) + " reaches the boundary");
    cells.push_back(normalize_cell(std::move(c)));
  }
  return cells;
}

}  // namespace

Cell normalize_cell(Cell c) {
  if (c.empty()) return c;
  std::sort(c.begin(), c.end());
  const IntVector base = c.front();
  for (auto& x : c)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= base[i];
  return c;
}

std::vector<IntVector> relevant_vectors(const QuadForm& q, long radius) {
  if (!is_positive_definite(q)) throw InputError("relevant_vectors: form is not positive definite");
  const std::size_t g = q.dim();
  std::vector<IntVector> out;
  for (auto& v : box_points(g, -radius, radius)) {
    if (std::all_of(v.begin(), v.end(), [](const Integer& z) { return sgn(z) == 0; })) continue;
    if (canonical_sign(v) != v) continue;
    RatVector center(g);
    for (std::size_t i = 0; i < g; ++i) center[i] = Rational(-v[i]) / 2;
    if (enumerate_ellipsoid(q, q(v) / 4, center, Exec::Serial).size() == 2) out.push_back(std::move(v));
  }
  return out;
}

VPolytope voronoi_polytope(const QuadForm& q, long radius) {
  const std::size_t g = q.dim();
  check_dim(g, "voronoi_polytope");
  radius = resolve_window(radius, g);
  if (is_positive_definite(q)) return voronoi_definite(q, radius);
  const auto nf = rational_rank_normal_form(q);
  const std::size_t r = nf->reduced.dim();
  const VPolytope sub = voronoi_definite(nf->reduced, radius);
  // x = h^t (y, 0); lattice vectors map the same way.
  const IntMatrix ht = nf->h.transpose();
  auto lift = [&](const auto& y) {
    using V = std::decay_t<decltype(y)>;
    V out(g, typename V::value_type(0));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t k = 0; k < r; ++k) out[i] += ht(i, k) * y[k];
    return out;
  };
  VPolytope p;
  p.g = g;
  p.dimension = r;
  p.form = q.matrix();
  for (const auto& h : sub.halfspaces) p.halfspaces.push_back({lift(h.normal), h.offset});
  for (const auto& y : sub.vertices) p.vertices.push_back(lift(y));
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

PeriodicSubdivision delone_subdivision(const QuadForm& q, long window) {
  const std::size_t g = q.dim();
  check_dim(g, "delone_subdivision");
  window = resolve_window(window, g);
  PeriodicSubdivision s;
  s.g = g;
  s.window = window;
  if (is_positive_definite(q)) {
    s.cells = delone_cells_definite(q, window);
    finalize(s);
    return s;
  }
  const auto nf = rational_rank_normal_form(q);
  const std::size_t r = nf->reduced.dim();
  const auto box = box_points(g, -window, window + 1);
  if (r == 0) {
    s.cells.push_back(normalize_cell(box));
    return s;
  }
  // Cells are cylinders over Del(Q') in the coordinates z = h^{-t} x.
  const IntMatrix hit = unimodular_inverse(nf->h).transpose();
  std::vector<IntVector> zs;
  for (const auto& x : box) {
    IntVector z = hit.apply(x);
    z.resize(r);
    zs.push_back(std::move(z));
  }
  for (const Cell& base : delone_cells_definite(nf->reduced, window)) {
    const std::set<IntVector> members(base.begin(), base.end());
    Cell c;
    for (std::size_t k = 0; k < box.size(); ++k)
      if (members.count(zs[k])) c.push_back(box[k]);
    s.cells.push_back(normalize_cell(std::move(c)));
  }
  finalize(s);
  return s;
}

PeriodicSubdivision dicing_subdivision(const IntMatrix& a, long window) {
  const std::size_t g = a.rows(), n = a.cols();
  check_dim(g, "dicing_subdivision");
  if (n > 16) throw DimensionError("dicing_subdivision: at most 16 hyperplane families");
  if (n > 0) {
    if (!is_simple_matrix(a)) throw InputError("dicing_subdivision: matrix is not simple");
    if (!is_unimodular(a)) throw InputError("dicing_subdivision: matrix is not unimodular");
  }
  window = resolve_window(window, g);
  const bool bounded = rank(a) == g;
  PeriodicSubdivision s;
  s.g = g;
  s.window = window;
  const auto box = box_points(g, -window, window + 1);
  std::vector<IntVector> values;
  const IntMatrix at = a.transpose();
  for (const auto& x : box) values.push_back(at.apply(x));
  // Every cell has a lattice vertex; translating it to the origin leaves
  // k_i in {-1, 0} for the slab k_i <= v_i^t x <= k_i + 1.
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Cell c;
    for (std::size_t p = 0; p < box.size(); ++p) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) {
        const long k = (mask >> i) & 1 ? 0 : -1;
        inside = values[p][i] >= k && values[p][i] <= k + 1;
      }
      if (inside) c.push_back(box[p]);
    }
    if (affine_rank(c, g) != g) continue;
    if (bounded) {
      for (const auto& x : c)
        if (on_window_boundary(x, window)) throw InputError("dicing: window too small");
    }
    s.cells.push_back(normalize_cell(std::move(c)));
  }
  finalize(s);
  return s;
}

bool subdivisions_equal(const PeriodicSubdivision& s1, const PeriodicSubdivision& s2) {
  if (s1.g != s2.g) throw DimensionError("subdivisions_equal: dimensions differ");
  if (s1.window != s2.window) throw InputError("subdivisions_equal: windows differ");
  return s1.cells == s2.cells;
}

SecondaryCheckResult secondary_cone_check(const IntMatrix& a, std::size_t samples, std::uint64_t seed, long window,
                                          Exec exec) {
  const std::size_t g = a.rows(), n = a.cols();
  if (g > 3) throw DimensionError("secondary_cone_check is limited to g <= 3");
  window = resolve_window(window, g);
  const PeriodicSubdivision dicing = dicing_subdivision(a, window);

  SecondaryCheckResult res;
  std::mt19937_64 rng(seed);
  std::vector<QuadForm> forms;
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector lambda(n);
    for (auto& l : lambda) {
      const long num = 1 + static_cast<long>(rng() % 9);
      const long den = 1 + static_cast<long>(rng() % 4);
      l = Rational(num, den);
      l.canonicalize();
    }
    RatMatrix m(g, g);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) m(i, j) += lambda[k] * a(i, k) * a(j, k);
    forms.emplace_back(std::move(m));
    res.lambdas.push_back(std::move(lambda));
  }

  std::vector<char> ok(samples, 0);
  std::exception_ptr err;
  auto run = [&](std::size_t s) { ok[s] = subdivisions_equal(delone_subdivision(forms[s], window), dicing); };
  if (exec == Exec::Serial) {
    for (std::size_t s = 0; s < samples; ++s) run(s);
  } else {
    const long ns = static_cast<long>(samples);
#pragma omp parallel for schedule(dynamic, 1)
    for (long s = 0; s < ns; ++s) {
      try {
        run(static_cast<std::size_t>(s));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }
  for (char c : ok) {
    res.sample_pass.push_back(c != 0);
    res.pass = res.pass && c != 0;
  }
  return res;
}

std::vector<RatVector> zonotope_vertices(const IntMatrix& a) {
  const std::size_t g = a.rows(), n = a.cols();
  if (n > 16) throw DimensionError("zonotope_vertices: at most 16 generators");
  std::set<RatVector> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    // The sign vector is realized iff some w has eps_i v_i^t w >= 1.
    LinearProgram lp(g, true);
    RatVector vertex(g, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      const int eps = (mask >> i) & 1 ? 1 : -1;
      RatVector row(g);
      for (std::size_t k = 0; k < g; ++k) {
        row[k] = eps * a(k, i);
        vertex[k] += Rational(eps * a(k, i), 2);
      }
      lp.add(std::move(row), Sense::GreaterEqual, 1);
    }
    if (solve_lp(lp).status != LpStatus::Infeasible) {
      for (auto& x : vertex) x.canonicalize();
      out.insert(vertex);
    }
  }
  return {out.begin(), out.end()};
}

bool minkowski_sum_check(const IntMatrix& a) {
  const std::size_t g = a.rows();
  if (g > 3) throw DimensionError("minkowski_sum_check is limited to g <= 3");
  RatMatrix m(g, g);
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) m(i, j) += Rational(a(i, k) * a(j, k));
  const QuadForm q(m);
  if (!is_positive_definite(q)) throw InputError("minkowski_sum_check: columns do not span");
  const VPolytope vor = voronoi_polytope(q);
  std::vector<RatVector> image;
  for (const auto& y : vor.vertices) image.push_back(m.apply(y));
  std::sort(image.begin(), image.end());
  return image == zonotope_vertices(a);
}

Json to_json(const PeriodicSubdivision& s) {
  Json cells = Json::array();
  for (const auto& c : s.cells) {
    Json cell = Json::array();
    for (const auto& x : c) cell.push_back(to_json(x));
    cells.push_back(cell);
  }
  return Json{{"g", s.g}, {"window", s.window}, {"cells", cells}};
}

Json to_json(const VPolytope& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces) hs.push_back(Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  Json vs = Json::array();
  for (const auto& v : p.vertices) vs.push_back(to_json(v));
  return Json{{"g", p.g}, {"dimension", p.dimension}, {"halfspaces", hs}, {"vertices", vs}};
}

}  // namespace conelab
