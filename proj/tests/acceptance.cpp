// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

#include "conelab/cone.hpp"
#include "conelab/delone.hpp"
#include "conelab/io.hpp"
#include "conelab/matroid.hpp"
#include "conelab/quadform.hpp"
#include "conelab/tumatrix.hpp"
#include "conelab/verify.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const std::string dir = default_fixture_dir() + "/";

std::string yes(bool b) { return b ? "true" : "false"; }

QuadForm form_of(const IntMatrix& a) {
  RatMatrix q(a.rows(), a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.rows(); ++j) q(i, j) += Rational(a(i, k) * a(j, k));
  return QuadForm(q);
}

WellSuitedPair pair(int k, const std::string& side) {
  const std::string p = dir + "sum" + std::to_string(k) + "_" + side;
  return {QuadForm(read_matrix(p + "_form.txt")), read_int_matrix(p + "_matrix.txt")};
}

Outcome r10() {
  const Report r = verify_r10(dir);
  std::size_t ok = 0;
  for (const auto& e : r.evidence) ok += e.pass;
  return {r.pass, std::to_string(ok) + "/" + std::to_string(r.evidence.size()) + " rows"};
}

Outcome perfect_dimension() {
  const auto mv = minimal_vectors(q5());
  const std::size_t d = span_dimension(mv.vectors, 5);
  return {d == 15 && cone_dimension(perfect_cone_of(q5())) == 15, "span dimension " + std::to_string(d)};
}

Outcome principal() {
  std::string detail;
  bool pass = true;
  for (std::size_t g = 2; g <= 5; ++g) {
    const Report r = verify_principal(g, default_seed(), 100);
    pass = pass && r.pass;
    detail += "g=" + std::to_string(g) + ":" + (r.pass ? "ok " : "FAIL ");
  }
  return {pass, detail + "(100 forms each)"};
}

Outcome taxonomy() {
  const Report r = verify_taxonomy_g2(dir);
  std::size_t ok = 0;
  for (const auto& e : r.evidence) ok += e.pass;
  return {r.pass, std::to_string(ok) + "/" + std::to_string(r.evidence.size()) + " rows"};
}

Outcome secondary() {
  const std::vector<std::pair<std::string, IntMatrix>> cases{
      {"A(K3)", read_int_matrix(dir + "AK3.txt")},
      {"A(K4)", read_int_matrix(dir + "AK4.txt")},
      {"I2", IntMatrix::identity(2)},
      {"I3", IntMatrix::identity(3)},
      {"theta*", cographic_representation(read_graph(dir + "theta.graph"))}};
  bool pass = true;
  std::string detail;
  for (const auto& [name, a] : cases) {
    const auto res = secondary_cone_check(a, 5, default_seed());
    pass = pass && res.pass && res.sample_pass.size() == 5;
    detail += name + ":" + (res.pass ? "ok " : "FAIL ");
  }
  return {pass, detail + "(5 samples each)"};
}

Outcome sums() {
  const WellSuitedPair k3{QuadForm(read_matrix(dir + "Q0_2.txt")), read_int_matrix(dir + "AK3.txt")};
  const std::vector<std::pair<std::string, WellSuitedPair>> outs{
      {"1-sum", well_suited_sum1(k3, k3)},
      {"2-sum", well_suited_sum2(pair(2, "left"), pair(2, "right"))},
      {"3-sum", well_suited_sum3(pair(3, "left"), pair(3, "right"))}};
  const std::vector<TUMatrix> seymour{
      seymour_sum1(k3.matrix, k3.matrix),
      seymour_sum2({pair(2, "left").matrix, pair(2, "right").matrix}),
      seymour_sum3({pair(3, "left").matrix, pair(3, "right").matrix})};
  bool pass = true;
  std::string detail;
  for (std::size_t k = 0; k < 3; ++k) {
    const bool ws = is_well_suited(outs[k].second.form, outs[k].second.matrix);
    const bool tu = is_totally_unimodular(seymour[k].inner) && oracle::brute_tu(seymour[k].inner);
    const bool simple = is_simple_matrix(seymour[k].inner);
    const bool same = seymour[k].inner == outs[k].second.matrix;
    pass = pass && ws && tu && simple && same;
    detail += outs[k].first + ":" + (ws && tu && simple && same ? "ok " : "FAIL ");
  }
  const RatMatrix expect{{1, Rational(1, 2), Rational(1, 4)},
                         {Rational(1, 2), 1, Rational(1, 2)},
                         {Rational(1, 4), Rational(1, 2), 1}};
  const bool form = outs[1].second.form.matrix() == expect;
  return {pass && form, detail + "2-sum form " + (form ? "matches" : "differs")};
}

IntVector random_nonzero(std::mt19937_64& rng, std::size_t n) {
  IntVector v(n);
  do {
    for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
  } while (oracle::is_zero(v));
  return v;
}

// Minimum of a claim value over unit vectors and random nonzero vectors.
Rational claim_min(std::size_t dim, const std::function<Rational(const IntVector&)>& f, std::mt19937_64& rng,
                   std::size_t samples) {
  std::vector<IntVector> xs;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    xs.push_back(e);
  }
  for (std::size_t s = 0; s < samples; ++s) xs.push_back(random_nonzero(rng, dim));
  Rational best = f(xs.front());
  for (const auto& x : xs) best = std::min(best, f(x));
  return best;
}

Outcome claims() {
  std::mt19937_64 rng(default_seed());
  const std::size_t n = 1000;
  const Sum2Parts l2 = sum2_left_parts(pair(2, "left").form), r2 = sum2_right_parts(pair(2, "right").form);
  const Sum3Parts l3 = sum3_left_parts(pair(3, "left").form), r3 = sum3_right_parts(pair(3, "right").form);
  const std::vector<std::pair<std::string, Rational>> mins{
      {"2-sum left", claim_min(l2.q.dim(), [&](const IntVector& x) { return sum2_claim_value(l2, x); }, rng, n)},
      {"2-sum right", claim_min(r2.q.dim(), [&](const IntVector& x) { return sum2_claim_value(r2, x); }, rng, n)},
      {"3-sum left", claim_min(l3.q.dim(), [&](const IntVector& x) { return sum3_claim_value(l3, x); }, rng, n)},
      {"3-sum right", claim_min(r3.q.dim(), [&](const IntVector& x) { return sum3_claim_value(r3, x); }, rng, n)}};
  bool pass = true, tight = false;
  std::string detail;
  for (const auto& [name, m] : mins) {
    pass = pass && m >= Rational(3, 4);
    tight = tight || m == Rational(3, 4);
    detail += name + " min " + format_rational(m) + (m >= Rational(3, 4) ? "; " : " < 3/4; ");
  }
  return {pass && tight, detail + "tight case " + yes(tight)};
}

Outcome zonotopes() {
  bool pass = true;
  std::string detail;
  for (const char* f : {"AK3.txt", "I2.txt", "AK4.txt"}) {
    const bool ok = minkowski_sum_check(read_int_matrix(dir + f));
    pass = pass && ok;
    detail += std::string(f) + ":" + (ok ? "ok " : "FAIL ");
  }
  return {pass, detail};
}

Outcome enumeration() {
  std::mt19937_64 rng(default_seed());
  std::size_t done = 0, agree = 0;
  while (done < 200) {
    const std::size_t g = 1 + rng() % 4;
    RatMatrix m;
    long radius = 0;
    if (!oracle::random_pd_form(rng, g, g == 4 ? 3 : 5, m, radius)) continue;
    const auto expect = oracle::box_minimal_vectors(m, radius);
    const auto got = minimal_vectors(QuadForm(m));
    agree += got.minimum == expect.minimum && got.vectors == expect.vectors;
    ++done;
  }
  return {agree == done, std::to_string(agree) + "/" + std::to_string(done) + " forms agree"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "R10 certificate", 5, r10},
      {2, "perfect cone dimension 15", 1, perfect_dimension},
      {3, "principal cone identity g=2..5", 30, principal},
      {4, "g=2 taxonomy", 5, taxonomy},
      {5, "secondary cone check", 60, secondary},
      {6, "Seymour sum preservation", 30, sums},
      {7, "claim bounds >= 3/4", 10, claims},
      {8, "zonotope property", 10, zonotopes},
      {9, "enumeration oracle equivalence", 60, enumeration},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << " -- " << o.detail
              << " [" << std::fixed << std::setprecision(2) << secs << " s" << (in_time ? "" : ", over budget") << "]\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
