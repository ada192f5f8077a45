#include "conelab/cone.hpp"

#include <algorithm>
#include <set>

#include "conelab/lp.hpp"
#include "conelab/matroid.hpp"
#include "conelab/tumatrix.hpp"

namespace conelab {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Matroidal: return "matroidal";
    case Provenance::Perfect: return "perfect";
    case Provenance::Other: return "other";
  }
  return "other";
}

RayCone make_cone(std::size_t g, std::vector<IntVector> generators, Provenance p) {
  std::set<IntVector> seen;
  for (auto& v : generators) {
    if (v.size() != g) throw DimensionError("cone generator has length " + std::to_string(v.size()) + ", expected " + std::to_string(g));
    if (!is_primitive(v)) throw InputError("cone generators must be primitive nonzero vectors");
    v = canonical_sign(std::move(v));
    if (!seen.insert(v).second) throw InputError("cone generators must be pairwise non-proportional");
  }
  RayCone c;
  c.g = g;
  c.generators = std::move(generators);
  c.provenance = p;
  c.simplicial = span_dimension(c.generators, g) == c.generators.size();
  return c;
}

std::size_t cone_dimension(const RayCone& c) { return span_dimension(c.generators, c.g); }

std::vector<IntVector> generator_set(const RayCone& c) {
  auto s = c.generators;
  std::sort(s.begin(), s.end());
  return s;
}

RayCone sigma_of_matrix(const IntMatrix& a) {
  if (a.cols() > 0) {
    if (!is_simple_matrix(a)) throw InputError("sigma_of_matrix: matrix is not simple");
    if (!is_unimodular(a)) throw InputError("sigma_of_matrix: matrix is not unimodular");
  }
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < a.cols(); ++j) gens.push_back(a.column(j));
  RayCone c = make_cone(a.rows(), std::move(gens), Provenance::Matroidal);
  if (!c.simplicial) throw VerificationError("sigma_of_matrix: generators of a unimodular cone are dependent");
  c.source = a;
  return c;
}

RayCone perfect_cone_of(const QuadForm& q) {
  return make_cone(q.dim(), minimal_vectors(q).vectors, Provenance::Perfect);
}

RayCone face_by_deletion(const RayCone& c, const std::vector<std::size_t>& deleted) {
  if (!c.source || !c.simplicial) throw InputError("face_by_deletion: cone has no defining matrix");
  std::set<std::size_t> del;
  for (std::size_t i : deleted) {
    if (i >= c.generators.size()) throw InputError("face_by_deletion: index " + std::to_string(i) + " out of range");
    del.insert(i);
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < c.generators.size(); ++j)
    if (!del.count(j)) keep.push_back(j);
  std::vector<std::size_t> rows(c.g);
  for (std::size_t i = 0; i < c.g; ++i) rows[i] = i;
  RayCone f = sigma_of_matrix(c.source->submatrix(rows, keep));
  return f;
}

namespace {

// Columns are the outer-product coordinates of the generators.
RatMatrix generator_system(const RayCone& c) {
  const std::size_t d = c.g * (c.g + 1) / 2;
  RatMatrix m(d, c.generators.size());
  for (std::size_t j = 0; j < c.generators.size(); ++j) {
    const auto oc = outer_coordinates(c.generators[j]);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = oc[i];
  }
  return m;
}

std::optional<RatVector> nonnegative_combination(const RatMatrix& sys, const RatVector& target) {
  LinearProgram lp(sys.cols());
  for (std::size_t i = 0; i < sys.rows(); ++i) lp.add(sys.row(i), Sense::Equal, target[i]);
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace

std::optional<RatVector> membership(const QuadForm& q, const RayCone& c) {
  if (q.dim() != c.g) throw DimensionError("membership: form dimension does not match cone");
  const RatVector target = form_coordinates(q.matrix());
  const RatMatrix sys = generator_system(c);
  if (c.generators.empty()) {
    bool zero = std::all_of(target.begin(), target.end(), [](const Rational& x) { return sgn(x) == 0; });
    return zero ? std::optional<RatVector>(RatVector{}) : std::nullopt;
  }
  if (!c.simplicial) return nonnegative_combination(sys, target);
  const auto sol = solve_exact(sys, target);
  if (!sol) return std::nullopt;
  for (const auto& x : sol->x)
    if (sgn(x) < 0) return std::nullopt;
  return sol->x;
}

bool principal_cone_contains(const QuadForm& q) {
  for (std::size_t i = 0; i < q.dim(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < q.dim(); ++j) {
      if (i != j && sgn(q(i, j)) > 0) return false;
      row += q(i, j);
    }
    if (sgn(row) < 0) return false;
  }
  return true;
}

RayCone gl_conjugate(const IntMatrix& h, const RayCone& c) {
  if (!h.is_square() || h.rows() != c.g) throw DimensionError("gl_conjugate: h must be g x g");
  const Integer d = determinant(h);
  if (d != 1 && d != -1) throw InputError("gl_conjugate: h is not in GL_g(Z)");
  std::vector<IntVector> gens;
  for (const auto& v : c.generators) gens.push_back(h.apply(v));
  RayCone out = make_cone(c.g, std::move(gens), c.provenance);
  if (c.source) out.source = h * *c.source;
  return out;
}

Rational pair_functional(const RatMatrix& h, const IntVector& v) {
  if (h.rows() != v.size() || h.cols() != v.size()) throw DimensionError("functional and vector sizes differ");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += h(i, j) * v[i] * v[j];
  return s;
}

FaceCertificate evaluate_functional(const RatMatrix& h, const RayCone& c) {
  if (!is_symmetric(h)) throw InputError("supporting functional must be symmetric");
  FaceCertificate cert{h, {}, {}, {}};
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    Rational val = pair_functional(h, c.generators[i]);
    if (sgn(val) == 0) cert.zero_set.push_back(i);
    if (sgn(val) < 0) cert.strict_set.push_back(i);
    cert.values.push_back(std::move(val));
  }
  return cert;
}

bool certifies(const FaceCertificate& cert, const std::vector<std::size_t>& sub, const RayCone& c) {
  std::vector<std::size_t> s(sub);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return cert.zero_set == s && cert.zero_set.size() + cert.strict_set.size() == c.generators.size();
}

std::optional<FaceCertificate> find_supporting_functional(const std::vector<std::size_t>& sub, const RayCone& c) {
  std::vector<bool> in_sub(c.generators.size(), false);
  for (std::size_t i : sub) {
    if (i >= c.generators.size()) throw InputError("supporting functional: index out of range");
    in_sub[i] = true;
  }
  const std::size_t g = c.g;
  if (std::all_of(in_sub.begin(), in_sub.end(), [](bool b) { return b; }))
    return evaluate_functional(RatMatrix(g, g), c);

  // Variables: upper triangle of H (i <= j), then t.
  const std::size_t d = g * (g + 1) / 2;
  LinearProgram lp(d + 1, true);
  lp.objective[d] = 1;
  auto pairing_row = [&](const IntVector& v) {
    RatVector row(d + 1, Rational(0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i; j < g; ++j, ++k) row[k] = i == j ? Rational(v[i] * v[i]) : Rational(2 * v[i] * v[j]);
    return row;
  };
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    RatVector row = pairing_row(c.generators[i]);
    if (in_sub[i]) {
      lp.add(std::move(row), Sense::Equal, 0);
    } else {
      row[d] = 1;
      lp.add(std::move(row), Sense::LessEqual, 0);
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    RatVector e(d + 1, Rational(0));
    e[k] = 1;
    lp.add(e, Sense::LessEqual, 1);
    lp.add(e, Sense::GreaterEqual, -1);
  }
  RatVector et(d + 1, Rational(0));
  et[d] = 1;
  lp.add(et, Sense::LessEqual, 1);

  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal || sgn(r.value) <= 0) return std::nullopt;
  RatMatrix h(g, g);
  std::size_t k = 0;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j, ++k) h(i, j) = h(j, i) = r.x[k];
  FaceCertificate cert = evaluate_functional(h, c);
  if (!certifies(cert, sub, c)) throw VerificationError("LP functional does not certify the face");
  return cert;
}

std::optional<std::vector<std::size_t>> match_generators(const RayCone& sub_cone, const RayCone& c) {
  if (sub_cone.g != c.g) return std::nullopt;
  std::vector<std::size_t> idx;
  for (const auto& v : sub_cone.generators) {
    const IntVector cv = canonical_sign(v);
    auto it = std::find(c.generators.begin(), c.generators.end(), cv);
    if (it == c.generators.end()) return std::nullopt;
    idx.push_back(static_cast<std::size_t>(it - c.generators.begin()));
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

FaceCheck check_face(const RayCone& sub_cone, const RayCone& c) {
  FaceCheck out;
  if (sub_cone.g != c.g) {
    out.diagnostic = "dimension mismatch: " + std::to_string(sub_cone.g) + " vs " + std::to_string(c.g);
    return out;
  }
  const auto idx = match_generators(sub_cone, c);
  if (!idx) {
    for (const auto& v : sub_cone.generators) {
      if (std::find(c.generators.begin(), c.generators.end(), canonical_sign(v)) == c.generators.end()) {
        out.diagnostic = "generator " + format_vector(v) + " is not a generator of the ambient cone";
        break;
      }
    }
    return out;
  }
  out.certificate = find_supporting_functional(*idx, c);
  out.face = out.certificate.has_value();
  if (!out.face) out.diagnostic = "no functional vanishes on the subset and is negative on the rest";
  return out;
}

bool is_face(const RayCone& sub_cone, const RayCone& c) { return check_face(sub_cone, c).face; }

bool is_extremal_generator(const RayCone& c, std::size_t i) {
  if (i >= c.generators.size()) throw InputError("generator index out of range");
  RayCone rest = c;
  rest.generators.erase(rest.generators.begin() + static_cast<long>(i));
  if (rest.generators.empty()) return true;
  return !nonnegative_combination(generator_system(rest), outer_coordinates(c.generators[i])).has_value();
}

bool all_generators_extremal(const RayCone& c) {
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    if (!is_extremal_generator(c, i)) return false;
  return true;
}

bool matroidal_cones_equivalent(const RayCone& a, const RayCone& b) {
  if (!a.source || !b.source) throw InputError("cone equivalence needs matroidal cones with defining matrices");
  if (a.g != b.g || a.generators.size() != b.generators.size()) return false;
  if (a.generators.empty()) return true;
  return equivalent_unimodular(*a.source, *b.source);
}

Json to_json(const RayCone& c) {
  Json gens = Json::array();
  for (const auto& v : c.generators) gens.push_back(to_json(v));
  return Json{{"g", c.g}, {"generators", gens}, {"simplicial", c.simplicial}, {"provenance", provenance_name(c.provenance)}};
}

Json to_json(const FaceCertificate& cert) {
  return Json{{"H", to_json(cert.functional)},
              {"values", to_json(cert.values)},
              {"zero_set", cert.zero_set},
              {"strict_set", cert.strict_set}};
}

}  // namespace conelab
