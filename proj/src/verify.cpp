#include "conelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "conelab/cone.hpp"
#include "conelab/delone.hpp"
#include "conelab/matroid.hpp"
#include "conelab/tumatrix.hpp"

#ifndef CONELAB_FIXTURE_DIR
#define CONELAB_FIXTURE_DIR "fixtures"
#endif

namespace conelab {

void Report::add(Evidence e) {
  pass = pass && e.pass;
  evidence.push_back(std::move(e));
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CONELAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("CONELAB_SEED is not a non-negative integer: ") + s);
  }
  return 12345;
}

std::string default_fixture_dir() { return CONELAB_FIXTURE_DIR; }

Json to_json(const Report& r, bool timing) {
  Json rows = Json::array();
  for (const auto& e : r.evidence)
    rows.push_back(Json{{"claim", e.claim},
                        {"computed", e.computed},
                        {"expected", e.expected},
                        {"method", e.method},
                        {"pass", e.pass}});
  Json j{{"scenario", r.scenario},
         {"status", r.pass ? "pass" : "fail"},
         {"seed", r.seed},
         {"evidence", rows},
         {"attachments", r.attachments}};
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

std::string to_text(const Report& r, bool timing) {
  std::ostringstream out;
  out << "scenario " << r.scenario << ": " << (r.pass ? "PASS" : "FAIL") << " (seed " << r.seed << ")";
  if (timing) out << " " << r.wall_seconds << " s";
  out << "\n";
  for (const auto& e : r.evidence) {
    out << "  [" << (e.pass ? "pass" : "FAIL") << "] " << e.claim << "\n"
        << "         computed: " << e.computed << "\n"
        << "         expected: " << e.expected << " (" << e.method << ")\n";
  }
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

std::string path(const std::string& dir, const std::string& name) { return dir + "/" + name; }

std::string yes(bool b) { return b ? "true" : "false"; }

std::string format_set(const std::vector<IntVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + format_vector(vs[i]);
  return s + "}";
}

std::string format_matrix(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + format_rational(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::vector<IntVector> canonical_columns(const IntMatrix& a) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(canonical_sign(a.column(j)));
  std::sort(cols.begin(), cols.end());
  return cols;
}

struct Outcome {
  std::string computed;
  bool pass;
};

template <class F>
void check(Report& r, std::string claim, std::string expected, std::string method, F&& f) {
  Evidence e{std::move(claim), "", std::move(expected), std::move(method), false};
  try {
    Outcome o = f();
    e.computed = std::move(o.computed);
    e.pass = o.pass;
  } catch (const std::exception& ex) {
    e.computed = std::string("error: ") + ex.what();
  }
  r.add(std::move(e));
}

// Rows whose criterion is string equality with the expected value.
template <class F>
void check_eq(Report& r, std::string claim, std::string expected, std::string method, F&& f) {
  const std::string exp = expected;
  check(r, std::move(claim), std::move(expected), std::move(method), [&]() {
    std::string c = f();
    return Outcome{c, c == exp};
  });
}

void finish(Report& r, Clock::time_point start) {
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

Rational random_ratio(std::mt19937_64& rng, long lo, long hi, long max_den) {
  const long num = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

IntVector random_nonzero(std::mt19937_64& rng, std::size_t n, long bound) {
  IntVector x(n);
  do {
    for (auto& z : x) z = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  } while (std::all_of(x.begin(), x.end(), [](const Integer& z) { return sgn(z) == 0; }));
  return x;
}

QuadForm read_form(const std::string& dir, const std::string& name) { return QuadForm(read_matrix(path(dir, name))); }

}  // namespace

R10Inputs load_r10_inputs(const std::string& dir) {
  return R10Inputs{read_int_matrix(path(dir, "A10.txt")), read_form(dir, "Q5.txt"), read_matrix(path(dir, "H.txt"))};
}

Report verify_r10(const std::string& dir) { return verify_r10(load_r10_inputs(dir)); }

Report verify_r10(const R10Inputs& in) {
  const auto start = Clock::now();
  Report r;
  r.scenario = "r10";

  check_eq(r, "A10 is totally unimodular and simple", "TU=true, simple=true", "exact", [&] {
    return "TU=" + yes(is_totally_unimodular(in.a10)) + ", simple=" + yes(is_simple_matrix(in.a10));
  });

  check_eq(r, "Q5 is positive definite and perfect", "positive definite=true, perfect=true, span=15", "enumeration", [&] {
    const bool pd = is_positive_definite(in.q5);
    if (!pd) return std::string("positive definite=false");
    const auto mv = minimal_vectors(in.q5);
    const std::size_t span = span_dimension(mv.vectors, in.q5.dim());
    const std::size_t full = in.q5.dim() * (in.q5.dim() + 1) / 2;
    return "positive definite=true, perfect=" + yes(span == full) + ", span=" + std::to_string(span);
  });

  std::vector<IntVector> families;
  for (char f : std::string("efgh"))
    for (auto& v : q5_vector_family(f)) families.push_back(canonical_sign(v));
  std::sort(families.begin(), families.end());

  check_eq(r, "M(Q5) is the twenty vectors e_i, f_i, g_i, h_i with minimum 2", "mu=2, |M|=20, equals families=true",
           "enumeration", [&] {
             const auto mv = minimal_vectors(in.q5);
             return "mu=" + format_rational(mv.minimum) + ", |M|=" + std::to_string(mv.vectors.size()) +
                    ", equals families=" + yes(mv.vectors == families);
           });

  check_eq(r, "H on the families e, f, g, h", "(0,-2,0,-2)", "exact", [&] {
    std::string s = "(";
    for (char f : std::string("efgh")) {
      const auto vs = q5_vector_family(f);
      const Rational first = pair_functional(in.h, vs[0]);
      bool constant = true;
      for (const auto& v : vs) constant = constant && pair_functional(in.h, v) == first;
      s += (f == 'e' ? "" : ",") + (constant ? format_rational(first) : std::string("mixed"));
    }
    return s + ")";
  });

  check_eq(r, "sigma(A10) is a face of sigma[Q5]: H vanishes on A10 and is negative on the other minimal vectors",
           "supplied H certifies=true, LP certificate=true", "lp", [&] {
             std::vector<IntVector> cols;
             for (std::size_t j = 0; j < in.a10.cols(); ++j) cols.push_back(in.a10.column(j));
             const RayCone sub = make_cone(in.a10.rows(), cols, Provenance::Matroidal);
             const RayCone perfect = perfect_cone_of(in.q5);
             const auto idx = match_generators(sub, perfect);
             if (!idx) return std::string("columns of A10 are not minimal vectors of Q5");
             const FaceCertificate supplied = evaluate_functional(in.h, perfect);
             const FaceCheck lp = check_face(sub, perfect);
             r.attachments["supplied_functional"] = to_json(supplied);
             if (lp.certificate) r.attachments["lp_certificate"] = to_json(*lp.certificate);
             return "supplied H certifies=" + yes(certifies(supplied, *idx, perfect)) + ", LP certificate=" + yes(lp.face);
           });

  finish(r, start);
  return r;
}

Report verify_principal(std::size_t g, std::uint64_t seed, std::size_t samples) {
  if (g < 2 || g > 5) throw InputError("verify principal: g must be between 2 and 5");
  const auto start = Clock::now();
  Report r;
  r.scenario = "principal-g" + std::to_string(g);
  r.seed = seed;
  const IntMatrix a = graphic_representation(complete_graph(g + 1));
  const QuadForm q0 = q0_principal(g);
  const std::string n = std::to_string(a.cols());

  check_eq(r, "M(Q0) equals the columns of A(K_" + std::to_string(g + 1) + ") up to sign",
           "mu=1, |M|=" + n + ", equal=true", "enumeration", [&] {
             const auto mv = minimal_vectors(q0);
             return "mu=" + format_rational(mv.minimum) + ", |M|=" + std::to_string(mv.vectors.size()) +
                    ", equal=" + yes(mv.vectors == canonical_columns(a));
           });

  const RayCone sigma = sigma_of_matrix(a);
  check_eq(r, "sigma[Q0] and sigma(A(K_" + std::to_string(g + 1) + ")) have the same generators", "true", "enumeration",
           [&] { return yes(generator_set(perfect_cone_of(q0)) == generator_set(sigma)); });

  check_eq(r, "Q0 is well-suited for A(K_" + std::to_string(g + 1) + ")", "true", "enumeration",
           [&] { return yes(is_well_suited(q0, a)); });

  std::mt19937_64 rng(seed + g);
  const std::string all = std::to_string(samples) + "/" + std::to_string(samples);

  check_eq(r, "forms with strict principal inequalities lie in sigma(A(K_" + std::to_string(g + 1) + "))", all, "sampling",
           [&] {
             std::size_t ok = 0;
             for (std::size_t s = 0; s < samples; ++s) {
               RatMatrix m(g, g);
               for (std::size_t i = 0; i < g; ++i)
                 for (std::size_t j = i + 1; j < g; ++j) m(i, j) = m(j, i) = -random_ratio(rng, 1, 5, 3);
               for (std::size_t i = 0; i < g; ++i) {
                 Rational off = 0;
                 for (std::size_t j = 0; j < g; ++j)
                   if (j != i) off += m(i, j);
                 m(i, i) = -off + random_ratio(rng, 1, 5, 3);
               }
               const QuadForm q(m);
               if (principal_cone_contains(q) && membership(q, sigma)) ++ok;
             }
             return std::to_string(ok) + "/" + std::to_string(samples);
           });

  check_eq(r, "positive combinations of the generators satisfy the principal inequalities", all, "sampling", [&] {
    std::size_t ok = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      RatMatrix m(g, g);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Rational l = random_ratio(rng, 1, 9, 4);
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j) m(i, j) += l * a(i, k) * a(j, k);
      }
      if (principal_cone_contains(QuadForm(m))) ++ok;
    }
    return std::to_string(ok) + "/" + std::to_string(samples);
  });

  check(r, "principal inequalities agree with membership on random symmetric forms",
        "agree " + all + ", both outcomes seen", "sampling", [&] {
          std::size_t agree = 0, inside = 0;
          for (std::size_t s = 0; s < samples; ++s) {
            // Odd samples sit near the boundary: nonpositive off-diagonal
            // entries and row sums of either sign.
            RatMatrix m(g, g);
            const bool near = s % 2 == 1;
            for (std::size_t i = 0; i < g; ++i)
              for (std::size_t j = i + 1; j < g; ++j) m(i, j) = m(j, i) = random_ratio(rng, -3, near ? 0 : 1, 2);
            for (std::size_t i = 0; i < g; ++i) {
              Rational off = 0;
              for (std::size_t j = 0; j < g; ++j)
                if (j != i) off += m(i, j);
              m(i, i) = near ? -off + random_ratio(rng, -1, 3, 2) : random_ratio(rng, 0, 8, 2);
            }
            const QuadForm q(m);
            const bool by_ineq = principal_cone_contains(q);
            if (by_ineq == membership(q, sigma).has_value()) ++agree;
            if (by_ineq) ++inside;
          }
          const bool both = inside > 0 && inside < samples;
          return Outcome{"agree " + std::to_string(agree) + "/" + std::to_string(samples) + ", inside " +
                             std::to_string(inside),
                         agree == samples && both};
        });

  finish(r, start);
  return r;
}

Report verify_taxonomy_g2(const std::string& dir) {
  const auto start = Clock::now();
  Report r;
  r.scenario = "taxonomy-g2";
  const IntVector r13{1, 0}, r23{0, 1}, r12{1, -1};
  const std::vector<std::vector<IntVector>> expected_cones = {{r13, r12, r23}, {r13, r23}, {r13}, {}};
  const std::vector<IntMatrix> matroids = {read_int_matrix(path(dir, "AK3.txt")), read_int_matrix(path(dir, "I2.txt")),
                                           read_int_matrix(path(dir, "segment.txt")), IntMatrix(2, 0)};
  auto sorted = [](std::vector<IntVector> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  std::vector<std::vector<IntVector>> perfect_list(4), secondary_list(4);
  const char* names[] = {"<R12,R13,R23>", "<R13,R23>", "<R13>", "{0}"};
  for (int k = 0; k < 3; ++k) {
    const std::string file = "taxonomy_P" + std::to_string(k + 1) + ".txt";
    check_eq(r, "perfect cone of " + file + " is " + names[k], format_set(sorted(expected_cones[k])), "enumeration", [&] {
      perfect_list[k] = generator_set(perfect_cone_of(read_form(dir, file)));
      return format_set(perfect_list[k]);
    });
  }
  check_eq(r, "the zero cone is the apex face of sigma[taxonomy_P1]", "{}, face=true", "lp", [&] {
    const RayCone full = sigma_of_matrix(matroids[0]);
    const RayCone apex = face_by_deletion(full, {0, 1, 2});
    perfect_list[3] = apex.generators;
    return format_set(apex.generators) + ", face=" + yes(is_face(apex, perfect_cone_of(read_form(dir, "taxonomy_P1.txt"))));
  });
  check(r, "the listed fourth representative taxonomy_P4 has a nonzero perfect cone (its minimum is attained)",
        "nonempty", "enumeration", [&] {
          const auto gens = generator_set(perfect_cone_of(read_form(dir, "taxonomy_P4.txt")));
          return Outcome{format_set(gens), !gens.empty()};
        });

  std::vector<PeriodicSubdivision> dels;
  for (int k = 0; k < 4; ++k) {
    const std::string file = "taxonomy_D" + std::to_string(k + 1) + ".txt";
    check_eq(r, "Del(" + file + ") is the dicing of its matroid and the form is interior to " + names[k],
             "subdivision match=true, interior=true", "exact", [&] {
               const QuadForm q = read_form(dir, file);
               const PeriodicSubdivision del = delone_subdivision(q);
               dels.push_back(del);
               const bool match = subdivisions_equal(del, dicing_subdivision(matroids[k]));
               const RayCone sigma = sigma_of_matrix(matroids[k]);
               const auto lambda = membership(q, sigma);
               bool interior = lambda.has_value();
               if (lambda)
                 for (const auto& l : *lambda) interior = interior && sgn(l) > 0;
               secondary_list[k] = generator_set(sigma);
               return "subdivision match=" + yes(match) + ", interior=" + yes(interior);
             });
  }
  check_eq(r, "the four Delone subdivisions are pairwise distinct", "true", "exact", [&] {
    if (dels.size() != 4) return std::string("incomplete");
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (dels[i].cells == dels[j].cells) return std::string("false");
    return std::string("true");
  });
  check_eq(r, "the perfect cones and the secondary cones coincide", "true", "exact",
           [&] { return yes(perfect_list == secondary_list); });

  finish(r, start);
  return r;
}

Report verify_seymour_pipeline(const std::string& dir, std::uint64_t seed, std::size_t samples) {
  const auto start = Clock::now();
  Report r;
  r.scenario = "seymour";
  r.seed = seed;
  std::mt19937_64 rng(seed);

  const WellSuitedPair k3{read_form(dir, "Q0_2.txt"), read_int_matrix(path(dir, "AK3.txt"))};
  const WellSuitedPair s2l{read_form(dir, "sum2_left_form.txt"), read_int_matrix(path(dir, "sum2_left_matrix.txt"))};
  const WellSuitedPair s2r{read_form(dir, "sum2_right_form.txt"), read_int_matrix(path(dir, "sum2_right_matrix.txt"))};
  const WellSuitedPair s3l{read_form(dir, "sum3_left_form.txt"), read_int_matrix(path(dir, "sum3_left_matrix.txt"))};
  const WellSuitedPair s3r{read_form(dir, "sum3_right_form.txt"), read_int_matrix(path(dir, "sum3_right_matrix.txt"))};

  auto describe = [](const WellSuitedPair& p) {
    return std::to_string(p.matrix.rows()) + "x" + std::to_string(p.matrix.cols()) +
           ", well-suited=" + yes(is_well_suited(p.form, p.matrix)) +
           ", TU=" + yes(is_totally_unimodular(p.matrix)) + ", simple=" + yes(is_simple_matrix(p.matrix));
  };

  check_eq(r, "1-sum of two (Q0, A(K_3)) pairs", "4x6, well-suited=true, TU=true, simple=true", "enumeration",
           [&] { return describe(well_suited_sum1(k3, k3)); });

  check_eq(r, "1-sum of (Q10, A10) with ((1), [1]); Q5/2 itself is not well-suited for A10",
           "Q5/2 well-suited=false, Q10 well-suited=true, 6x11, well-suited=true, TU=true, simple=true", "enumeration",
           [&] {
             const IntMatrix a10 = read_int_matrix(path(dir, "A10.txt"));
             const WellSuitedPair r10{read_form(dir, "Q10.txt"), a10};
             const WellSuitedPair one{QuadForm(RatMatrix{{1}}), IntMatrix{{1}}};
             const bool half = is_well_suited(read_form(dir, "Q5.txt").scaled(Rational(1, 2)), a10);
             return "Q5/2 well-suited=" + yes(half) + ", Q10 well-suited=" + yes(is_well_suited(r10.form, a10)) + ", " +
                    describe(well_suited_sum1(r10, one));
           });

  check_eq(r, "2-sum fixture assembles the glued form", "[[1,1/2,1/4],[1/2,1,1/2],[1/4,1/2,1]]", "exact",
           [&] { return format_matrix(sum2_form(s2l.form, s2r.form).matrix()); });

  check_eq(r, "2-sum output", "3x5, well-suited=true, TU=true, simple=true", "enumeration",
           [&] { return describe(well_suited_sum2(s2l, s2r)); });

  check_eq(r, "3-sum output", "4x9, well-suited=true, TU=true, simple=true", "enumeration", [&] {
    const WellSuitedPair out = well_suited_sum3(s3l, s3r);
    r.attachments["sum3_form"] = to_json(out.form.matrix());
    return describe(out);
  });

  check_eq(r, "2-sum expansion Q1 + Q2 + 2<r1,x1><r2,x2> + 2x(<r1,x1> + <r2,x2>) + x^2",
           std::to_string(samples) + "/" + std::to_string(samples), "sampling", [&] {
             const QuadForm bar = sum2_form(s2l.form, s2r.form);
             const Sum2Parts a = sum2_left_parts(s2l.form), b = sum2_right_parts(s2r.form);
             const std::size_t g1 = a.q.dim(), g2 = b.q.dim();
             std::size_t ok = 0;
             for (std::size_t s = 0; s < samples; ++s) {
               const IntVector v = random_nonzero(rng, g1 + g2 + 1, 5);
               const IntVector x1(v.begin(), v.begin() + static_cast<long>(g1));
               const IntVector x2(v.begin() + static_cast<long>(g1 + 1), v.end());
               const Rational x(v[g1]);
               const Rational p = dot(a.r, to_rational(x1)), q = dot(b.r, to_rational(x2));
               if (bar(v) == a.q(x1) + b.q(x2) + 2 * p * q + 2 * x * (p + q) + x * x) ++ok;
             }
             return std::to_string(ok) + "/" + std::to_string(samples);
           });

  check_eq(r, "3-sum coupling cancels the cross terms on all unit-vector pairs", "true", "exact", [&] {
    // Fixture parts plus random rational glue vectors.
    std::vector<std::pair<Sum3Parts, Sum3Parts>> cases{{sum3_left_parts(s3l.form), sum3_right_parts(s3r.form)}};
    for (int t = 0; t < 20; ++t) {
      Sum3Parts a{QuadForm(RatMatrix::identity(2)), {}, {}}, b{QuadForm(RatMatrix::identity(3)), {}, {}};
      for (int i = 0; i < 2; ++i) {
        a.r.push_back(random_ratio(rng, -4, 4, 3));
        a.s.push_back(random_ratio(rng, -4, 4, 3));
      }
      for (int i = 0; i < 3; ++i) {
        b.r.push_back(random_ratio(rng, -4, 4, 3));
        b.s.push_back(random_ratio(rng, -4, 4, 3));
      }
      cases.emplace_back(a, b);
    }
    for (const auto& [a, b] : cases) {
      const RatMatrix m = sum3_coupling(a, b);
      for (std::size_t j = 0; j < a.r.size(); ++j)
        for (std::size_t k = 0; k < b.r.size(); ++k) {
          const Rational &a1 = a.r[j], &b1 = a.s[j], &a2 = b.r[k], &b2 = b.s[k];
          const Rational cross = Rational(-4, 3) * (2 * a1 * a2 + 2 * b1 * b2 + a1 * b2 + a2 * b1);
          if (cross + 2 * m(j, k) != 0) return std::string("false");
        }
    }
    return std::string("true");
  });

  // Sampled lower bounds on each side of a sum, plus the smallest unit
  // vector values so that the tight case is always looked at.
  struct Side {
    std::string name;
    std::size_t dim;
    std::function<Rational(const IntVector&)> value;
  };
  auto sample_min = [&](const std::vector<Side>& sides, IntVector& arg, std::string& where) {
    Rational best = -1;
    bool first = true;
    for (const auto& side : sides) {
      std::vector<IntVector> xs;
      for (std::size_t i = 0; i < side.dim; ++i) {
        IntVector e(side.dim, Integer(0));
        e[i] = 1;
        xs.push_back(e);
      }
      for (std::size_t s = 0; s < samples; ++s) xs.push_back(random_nonzero(rng, side.dim, 3));
      for (const auto& x : xs) {
        const Rational v = side.value(x);
        if (first || v < best) {
          best = v;
          arg = x;
          where = side.name;
          first = false;
        }
      }
    }
    return best;
  };

  check(r, "2-sum bound Q_i(x) - <x, r_i>^2 >= 3/4 on sampled nonzero x, with a tight case",
        "min=3/4", "sampling", [&] {
          const Sum2Parts a = sum2_left_parts(s2l.form), b = sum2_right_parts(s2r.form);
          const std::vector<Side> sides{{"left", a.q.dim(), [&](const IntVector& x) { return sum2_claim_value(a, x); }},
                                        {"right", b.q.dim(), [&](const IntVector& x) { return sum2_claim_value(b, x); }}};
          IntVector arg;
          std::string where;
          const Rational m = sample_min(sides, arg, where);
          return Outcome{"min=" + format_rational(m) + " at " + format_vector(arg) + " (" + where + ")",
                         m == Rational(3, 4)};
        });

  Rational sum3_min = 0;
  check(r, "3-sum bound Q_i(x) - 4/3 (<x,r_i>^2 + <x,s_i>^2 + <x,r_i><x,s_i>) >= 3/4 on sampled nonzero x",
        ">= 3/4", "sampling", [&] {
          const Sum3Parts a = sum3_left_parts(s3l.form), b = sum3_right_parts(s3r.form);
          const std::vector<Side> sides{{"left", a.q.dim(), [&](const IntVector& x) { return sum3_claim_value(a, x); }},
                                        {"right", b.q.dim(), [&](const IntVector& x) { return sum3_claim_value(b, x); }}};
          IntVector arg;
          std::string where;
          sum3_min = sample_min(sides, arg, where);
          return Outcome{"min=" + format_rational(sum3_min) + " at " + format_vector(arg) + " (" + where + ")",
                         sum3_min >= Rational(3, 4)};
        });

  check(r, "3-sum: twice the sampled minimum still exceeds 1, which is what the glued bound needs", "> 1", "sampling",
        [&] {
          const Rational twice = 2 * sum3_min;
          return Outcome{format_rational(sum3_min) + " + " + format_rational(sum3_min) + " = " + format_rational(twice),
                         twice > 1};
        });

  finish(r, start);
  return r;
}

}  // namespace conelab
