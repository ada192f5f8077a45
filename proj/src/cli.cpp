#include "conelab/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "conelab/cone.hpp"
#include "conelab/delone.hpp"
#include "conelab/io.hpp"
#include "conelab/matroid.hpp"
#include "conelab/quadform.hpp"
#include "conelab/tumatrix.hpp"
#include "conelab/verify.hpp"

namespace conelab {

const std::vector<CommandInfo>& dispatch_table() {
  static const std::vector<CommandInfo> table = {
      {"matrix det", {"determinant"}, {"matrix", "det", "@/Q5.txt"}},
      {"matrix rank", {"rank"}, {"matrix", "rank", "@/A10.txt"}},
      {"matrix hnf", {"hermite_normal_form"}, {"matrix", "hnf", "@/AK4.txt"}},
      {"matrix solve", {"solve_exact"}, {"matrix", "solve", "@/Q0_2.txt", "@/segment.txt"}},
      {"matrix ldlt", {"ldlt_decompose"}, {"matrix", "ldlt", "@/Q5.txt"}},
      {"matrix inverse", {"inverse", "unimodular_inverse"}, {"matrix", "inverse", "@/Q0_2.txt"}},
      {"tu check", {"is_totally_unimodular", "tu_violation", "make_tu"}, {"tu", "check", "@/A10.txt"}},
      {"tu unimodular", {"is_unimodular"}, {"tu", "unimodular", "@/A10.txt"}},
      {"tu equivalent", {"equivalent_unimodular"}, {"tu", "equivalent", "@/AK3.txt", "@/AK3.txt"}},
      {"matroid info",
       {"vector_matroid", "circuits", "is_simple", "is_simple_matrix", "satisfies_exchange_axiom"},
       {"matroid", "info", "@/AK4.txt"}},
      {"matroid isomorphic", {"matroid_isomorphic"}, {"matroid", "isomorphic", "@/AK3.txt", "@/AK3.txt"}},
      {"matroid graph", {"graphic_matroid", "is_connected"}, {"matroid", "graph", "@/K4.graph"}},
      {"graph graphic", {"graphic_representation", "read_graph"}, {"graph", "graphic", "@/K4.graph"}},
      {"graph cographic", {"cographic_representation"}, {"graph", "cographic", "@/theta.graph"}},
      {"sum 1", {"seymour_sum1", "assemble_sum1"}, {"sum", "1", "@/AK3.txt", "@/AK3.txt"}},
      {"sum 2",
       {"seymour_sum2", "assemble_sum2", "split_sum2"},
       {"sum", "2", "@/sum2_left_matrix.txt", "@/sum2_right_matrix.txt"}},
      {"sum 3",
       {"seymour_sum3", "assemble_sum3", "split_sum3"},
       {"sum", "3", "@/sum3_left_matrix.txt", "@/sum3_right_matrix.txt"}},
      {"fixture", {"r10_matrix", "q5", "q0_principal", "h_functional_matrix", "r10_form", "complete_graph"},
       {"fixture", "q0", "--g", "3"}},
      {"qf info",
       {"is_positive_definite", "is_positive_semidefinite", "is_perfect"},
       {"qf", "info", "@/Q5.txt"}},
      {"qf normal-form", {"rational_rank_normal_form"}, {"qf", "normal-form", "@/taxonomy_D3.txt"}},
      {"qf enumerate", {"enumerate_ellipsoid", "short_vectors"}, {"qf", "enumerate", "@/Q0_2.txt", "--bound", "3"}},
      {"qf minvec", {"minimal_vectors"}, {"qf", "minvec", "@/Q5.txt"}},
      {"qf perfect-cone", {"perfect_cone_of", "span_dimension", "cone_dimension"}, {"qf", "perfect-cone", "@/Q5.txt"}},
      {"qf well-suited", {"is_well_suited"}, {"qf", "well-suited", "@/Q10.txt", "@/A10.txt"}},
      {"qf h-functional", {"h_functional", "q5_vector_family"}, {"qf", "h-functional", "--family", "f"}},
      {"qf wsum 1", {"well_suited_sum1"}, {"qf", "wsum", "1", "@/Q0_2.txt", "@/AK3.txt", "@/Q0_2.txt", "@/AK3.txt"}},
      {"qf wsum 2",
       {"well_suited_sum2", "sum2_form", "sum2_left_parts", "sum2_right_parts", "sum2_claim_value"},
       {"qf", "wsum", "2", "@/sum2_left_form.txt", "@/sum2_left_matrix.txt", "@/sum2_right_form.txt",
        "@/sum2_right_matrix.txt"}},
      {"qf wsum 3",
       {"well_suited_sum3", "sum3_form", "sum3_left_parts", "sum3_right_parts", "sum3_coupling", "sum3_claim_value"},
       {"qf", "wsum", "3", "@/sum3_left_form.txt", "@/sum3_left_matrix.txt", "@/sum3_right_form.txt",
        "@/sum3_right_matrix.txt"}},
      {"cone sigma", {"sigma_of_matrix", "make_cone"}, {"cone", "sigma", "@/AK3.txt"}},
      {"cone delete", {"face_by_deletion"}, {"cone", "delete", "@/AK3.txt", "2"}},
      {"cone member", {"membership"}, {"cone", "member", "@/taxonomy_D1.txt", "@/AK3.txt"}},
      {"cone principal", {"principal_cone_contains"}, {"cone", "principal", "@/taxonomy_D1.txt"}},
      {"cone conjugate", {"gl_conjugate"}, {"cone", "conjugate", "@/I2.txt", "@/I2.txt"}},
      {"cone face",
       {"is_face", "check_face", "match_generators", "find_supporting_functional"},
       {"cone", "face", "@/A10.txt", "--form", "@/Q5.txt"}},
      {"cone certify", {"evaluate_functional", "certifies", "pair_functional"},
       {"cone", "certify", "@/H.txt", "@/A10.txt", "--form", "@/Q5.txt"}},
      {"cone extremal", {"is_extremal_generator", "all_generators_extremal"}, {"cone", "extremal", "@/AK4.txt"}},
      {"cone equivalent", {"matroidal_cones_equivalent"}, {"cone", "equivalent", "@/AK3.txt", "@/AK3.txt"}},
      {"delone", {"delone_subdivision", "normalize_cell"}, {"delone", "@/taxonomy_D1.txt"}},
      {"dicing", {"dicing_subdivision"}, {"dicing", "@/AK3.txt"}},
      {"voronoi", {"voronoi_polytope", "relevant_vectors"}, {"voronoi", "@/taxonomy_D1.txt"}},
      {"zonotope", {"minkowski_sum_check", "zonotope_vertices"}, {"zonotope", "@/AK3.txt"}},
      {"secondary", {"secondary_cone_check"}, {"secondary", "@/AK3.txt", "--samples", "3"}},
      {"subdivision compare", {"subdivisions_equal"}, {"subdivision", "compare", "@/taxonomy_D1.txt", "@/AK3.txt"}},
      {"verify r10", {"verify_r10", "load_r10_inputs"}, {"verify", "r10"}},
      {"verify principal", {"verify_principal"}, {"verify", "principal", "--g", "2"}},
      {"verify taxonomy-g2", {"verify_taxonomy_g2"}, {"verify", "taxonomy-g2"}},
      {"verify seymour", {"verify_seymour_pipeline"}, {"verify", "seymour", "--samples", "50"}},
  };
  return table;
}

namespace {

struct Options {
  std::string format = "text";
  std::string fixtures;
  std::string seed;
  bool timing = false;
  long window = 0;
  std::size_t samples = 0;
  bool serial = false;
};

class Session {
 public:
  Session(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

  bool json() const { return opt_.format == "json"; }
  Exec exec() const { return opt_.serial ? Exec::Serial : Exec::Parallel; }
  std::uint64_t seed() const {
    if (opt_.seed.empty()) return default_seed();
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(opt_.seed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != opt_.seed.size() || opt_.seed[0] == '-') throw InputError("--seed must be a non-negative integer");
    return v;
  }
  std::string fixtures() const { return opt_.fixtures.empty() ? default_fixture_dir() : opt_.fixtures; }
  long window() const { return opt_.window; }
  std::size_t samples(std::size_t fallback) const { return opt_.samples ? opt_.samples : fallback; }
  bool timing() const { return opt_.timing; }

  // Prints j as JSON or runs the text printer.
  void emit(const Json& j, const std::function<void(std::ostream&)>& text) {
    if (json()) {
      out_ << j.dump(2) << "\n";
    } else {
      text(out_);
    }
  }

 private:
  std::ostream& out_;
  const Options& opt_;
};

std::string yes(bool b) { return b ? "true" : "false"; }

QuadForm load_form(const std::string& p) { return QuadForm(read_matrix(p)); }

std::vector<IntVector> columns_of(const IntMatrix& m) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

IntMatrix generator_matrix(const RayCone& c) {
  IntMatrix m(c.g, c.generators.size());
  for (std::size_t j = 0; j < c.generators.size(); ++j)
    for (std::size_t i = 0; i < c.g; ++i) m(i, j) = c.generators[j][i];
  return m;
}

// Columns of the file are the generators; simple unimodular matrices give
// matroidal cones.
RayCone load_cone(const std::string& p) {
  const IntMatrix m = read_int_matrix(p);
  if (m.cols() == 0 || (is_simple_matrix(m) && is_unimodular(m))) return sigma_of_matrix(m);
  return make_cone(m.rows(), columns_of(m), Provenance::Other);
}

void print_cone(std::ostream& o, const RayCone& c) {
  o << "# g=" << c.g << " generators=" << c.generators.size() << " simplicial=" << yes(c.simplicial)
    << " provenance=" << provenance_name(c.provenance) << "\n";
  write_matrix(o, generator_matrix(c));
}

void print_subdivision(std::ostream& o, const PeriodicSubdivision& s) {
  o << "g=" << s.g << " window=" << s.window << " cells=" << s.cells.size() << "\n";
  for (const auto& c : s.cells) {
    o << " ";
    for (const auto& x : c) o << " " << format_vector(x);
    o << "\n";
  }
}

Json witness_json(const SubmatrixWitness& w) {
  return Json{{"rows", w.rows}, {"cols", w.cols}, {"det", to_json(w.det)}};
}

using Action = std::function<int(Session&)>;

struct Builder {
  std::map<const CLI::App*, Action> actions;

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, Action a) {
    CLI::App* c = parent->add_subcommand(name, desc);
    actions[c] = std::move(a);
    return c;
  }
};

CLI::Option* file_arg(CLI::App* c, const std::string& name, std::string& target, const std::string& desc) {
  return c->add_option(name, target, desc)->required()->check(CLI::ExistingFile);
}

void add_matrix_commands(CLI::App& app, Builder& b) {
  auto* m = app.add_subcommand("matrix", "exact linear algebra on a matrix file");
  m->require_subcommand(1);
  static std::string a, rhs;
  file_arg(b.leaf(m, "det", "determinant", [](Session& s) {
    const RatMatrix x = read_matrix(a);
    if (!x.is_square()) throw DimensionError("determinant needs a square matrix");
    const Rational d = determinant(x);
    s.emit(Json{{"det", to_json(d)}}, [&](std::ostream& o) { o << "det: " << format_rational(d) << "\n"; });
    return 0;
  }), "matrix", a, "matrix file");
  file_arg(b.leaf(m, "rank", "rank", [](Session& s) {
    const std::size_t r = rank(read_matrix(a));
    s.emit(Json{{"rank", r}}, [&](std::ostream& o) { o << "rank: " << r << "\n"; });
    return 0;
  }), "matrix", a, "matrix file");
  file_arg(b.leaf(m, "hnf", "row Hermite normal form U A = H", [](Session& s) {
    const HermiteForm h = hermite_normal_form(read_int_matrix(a));
    s.emit(Json{{"h", to_json(h.h)}, {"u", to_json(h.u)}, {"rank", h.rank}}, [&](std::ostream& o) {
      o << "# H (rank " << h.rank << ")\n";
      write_matrix(o, h.h);
      o << "# U\n";
      write_matrix(o, h.u);
    });
    return 0;
  }), "matrix", a, "matrix file");
  auto* solve = b.leaf(m, "solve", "solve A x = b exactly; b is a column matrix", [](Session& s) {
    const RatMatrix x = read_matrix(a), y = read_matrix(rhs);
    if (y.cols() != 1) throw DimensionError("right-hand side must have one column");
    const auto sol = solve_exact(x, y.column(0));
    Json j{{"solvable", sol.has_value()}};
    if (sol) {
      j["x"] = to_json(sol->x);
      Json k = Json::array();
      for (const auto& v : sol->kernel) k.push_back(to_json(v));
      j["kernel"] = k;
    }
    s.emit(j, [&](std::ostream& o) {
      if (!sol) {
        o << "solvable: false\n";
        return;
      }
      o << "x: " << format_vector(sol->x) << "\n";
      for (const auto& v : sol->kernel) o << "kernel: " << format_vector(v) << "\n";
    });
    return sol ? 0 : 1;
  });
  file_arg(solve, "matrix", a, "matrix file");
  file_arg(solve, "rhs", rhs, "right-hand side file");
  file_arg(b.leaf(m, "ldlt", "exact L D L^t of a positive definite matrix", [](Session& s) {
    const auto f = ldlt_decompose(read_matrix(a));
    if (!f) {
      s.emit(Json{{"positive_definite", false}}, [](std::ostream& o) { o << "positive definite: false\n"; });
      return 1;
    }
    s.emit(Json{{"positive_definite", true}, {"l", to_json(f->l)}, {"d", to_json(f->d)}}, [&](std::ostream& o) {
      o << "# L\n";
      write_matrix(o, f->l);
      o << "# D: " << format_vector(f->d) << "\n";
    });
    return 0;
  }), "matrix", a, "matrix file");
  file_arg(b.leaf(m, "inverse", "exact inverse", [](Session& s) {
    const RatMatrix x = read_matrix(a);
    const RatMatrix inv = inverse(x);
    Json j{{"inverse", to_json(inv)}};
    if (const auto z = to_integer(x); z && (determinant(*z) == 1 || determinant(*z) == -1))
      j["unimodular_inverse"] = to_json(unimodular_inverse(*z));
    s.emit(j, [&](std::ostream& o) { write_matrix(o, inv); });
    return 0;
  }), "matrix", a, "matrix file");
}

void add_tu_commands(CLI::App& app, Builder& b) {
  auto* t = app.add_subcommand("tu", "total unimodularity");
  t->require_subcommand(1);
  static std::string a, c;
  file_arg(b.leaf(t, "check", "exhaustive square-submatrix scan", [](Session& s) {
    const IntMatrix m = read_int_matrix(a);
    const bool tu = is_totally_unimodular(m, s.exec());
    Json j{{"totally_unimodular", tu}};
    std::optional<SubmatrixWitness> w;
    if (!tu) w = tu_violation(m);
    if (w) j["witness"] = witness_json(*w);
    s.emit(j, [&](std::ostream& o) {
      o << "totally unimodular: " << yes(tu) << "\n";
      if (w) {
        o << "witness rows:";
        for (auto r : w->rows) o << " " << r;
        o << " cols:";
        for (auto q : w->cols) o << " " << q;
        o << " det: " << w->det << "\n";
      }
    });
    return tu ? 0 : 1;
  }), "matrix", a, "matrix file");
  file_arg(b.leaf(t, "unimodular", "find h in GL(Z) with h A totally unimodular", [](Session& s) {
    const auto h = is_unimodular(read_int_matrix(a));
    Json j{{"unimodular", h.has_value()}};
    if (h) j["h"] = to_json(*h);
    s.emit(j, [&](std::ostream& o) {
      o << "unimodular: " << yes(h.has_value()) << "\n";
      if (h) write_matrix(o, *h);
    });
    return h ? 0 : 1;
  }), "matrix", a, "matrix file");
  auto* eq = b.leaf(t, "equivalent", "A = h B Y for h in GL(Z) and a signed permutation Y", [](Session& s) {
    const bool e = equivalent_unimodular(read_int_matrix(a), read_int_matrix(c));
    s.emit(Json{{"equivalent", e}}, [&](std::ostream& o) { o << "equivalent: " << yes(e) << "\n"; });
    return e ? 0 : 1;
  });
  file_arg(eq, "a", a, "first matrix");
  file_arg(eq, "b", c, "second matrix");
}

Json matroid_json(const Matroid& m) {
  Json j{{"elements", m.size()}, {"rank", m.rank()}, {"bases", m.bases().size()},
         {"simple", is_simple(m)}, {"exchange_axiom", m.satisfies_exchange_axiom()}};
  if (m.size() <= 14) {
    Json cs = Json::array();
    for (ElementSet c : circuits(m)) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (c >> i & 1u) idx.push_back(i);
      cs.push_back(idx);
    }
    j["circuits"] = cs;
  }
  return j;
}

void print_matroid(std::ostream& o, const Json& j) {
  o << "elements: " << j["elements"].get<std::size_t>() << "\nrank: " << j["rank"].get<std::size_t>()
    << "\nbases: " << j["bases"].get<std::size_t>() << "\nsimple: " << yes(j["simple"].get<bool>()) << "\n";
  if (j.contains("circuits")) {
    o << "circuits: " << j["circuits"].size() << "\n";
    for (const auto& c : j["circuits"]) {
      o << " ";
      for (const auto& i : c) o << " " << i.get<std::size_t>();
      o << "\n";
    }
  }
}

void add_matroid_commands(CLI::App& app, Builder& b) {
  auto* m = app.add_subcommand("matroid", "vector and graphic matroids");
  m->require_subcommand(1);
  static std::string a, c;
  file_arg(b.leaf(m, "info", "rank, bases, circuits of the vector matroid", [](Session& s) {
    const IntMatrix x = read_int_matrix(a);
    Json j = matroid_json(vector_matroid(x));
    j["simple_matrix"] = is_simple_matrix(x);
    s.emit(j, [&](std::ostream& o) { print_matroid(o, j); });
    return 0;
  }), "matrix", a, "matrix file");
  auto* iso = b.leaf(m, "isomorphic", "isomorphism of vector matroids", [](Session& s) {
    const bool e = matroid_isomorphic(vector_matroid(read_int_matrix(a)), vector_matroid(read_int_matrix(c)));
    s.emit(Json{{"isomorphic", e}}, [&](std::ostream& o) { o << "isomorphic: " << yes(e) << "\n"; });
    return e ? 0 : 1;
  });
  file_arg(iso, "a", a, "first matrix");
  file_arg(iso, "b", c, "second matrix");
  file_arg(b.leaf(m, "graph", "graphic matroid of a graph file", [](Session& s) {
    const Graph g = read_graph(a);
    Json j = matroid_json(graphic_matroid(g));
    j["connected"] = is_connected(g);
    s.emit(j, [&](std::ostream& o) {
      print_matroid(o, j);
      o << "connected: " << yes(j["connected"].get<bool>()) << "\n";
    });
    return 0;
  }), "graph", a, "graph file");
}

void add_graph_commands(CLI::App& app, Builder& b) {
  auto* g = app.add_subcommand("graph", "matrix representations of graphic and cographic matroids");
  g->require_subcommand(1);
  static std::string a;
  for (const std::string kind : {"graphic", "cographic"}) {
    file_arg(b.leaf(g, kind, kind + " representation", [kind](Session& s) {
      const Graph gr = read_graph(a);
      const IntMatrix m = kind == "graphic" ? graphic_representation(gr) : cographic_representation(gr);
      s.emit(Json{{"matrix", to_json(m)}}, [&](std::ostream& o) { write_matrix(o, m); });
      return 0;
    }), "graph", a, "graph file");
  }
}

void add_sum_commands(CLI::App& app, Builder& b) {
  auto* sm = app.add_subcommand("sum", "1-, 2- and 3-sums of simple totally unimodular matrices");
  sm->require_subcommand(1);
  static std::string l, r;
  for (int k = 1; k <= 3; ++k) {
    auto* c = b.leaf(sm, std::to_string(k), std::to_string(k) + "-sum", [k](Session& s) {
      const IntMatrix a1 = read_int_matrix(l), a2 = read_int_matrix(r);
      const TUMatrix t = k == 1 ? seymour_sum1(a1, a2) : k == 2 ? seymour_sum2({a1, a2}) : seymour_sum3({a1, a2});
      s.emit(Json{{"matrix", to_json(t.inner)}, {"totally_unimodular", t.verified}, {"simple", is_simple_matrix(t.inner)}},
             [&](std::ostream& o) { write_matrix(o, t.inner); });
      return 0;
    });
    file_arg(c, "left", l, "left matrix");
    file_arg(c, "right", r, "right matrix");
  }
}

void add_fixture_command(CLI::App& app, Builder& b) {
  static std::string which;
  static std::size_t g = 2;
  auto* f = b.leaf(&app, "fixture", "print a built-in matrix: r10, q5, q0, h, q10, kn", [](Session& s) {
    RatMatrix m;
    if (which == "r10") m = to_rational(r10_matrix());
    else if (which == "q5") m = q5().matrix();
    else if (which == "q0") m = q0_principal(g).matrix();
    else if (which == "h") m = h_functional_matrix();
    else if (which == "q10") m = r10_form().matrix();
    else if (which == "kn") m = to_rational(graphic_representation(complete_graph(g + 1)));
    else throw InputError("unknown fixture '" + which + "'");
    s.emit(Json{{"matrix", to_json(m)}}, [&](std::ostream& o) { write_matrix(o, m); });
    return 0;
  });
  f->add_option("name", which, "fixture name")->required()->check(CLI::IsMember({"r10", "q5", "q0", "h", "q10", "kn"}));
  f->add_option("--g", g, "dimension for q0 and kn")->check(CLI::Range(1, 12));
}

void add_qf_commands(CLI::App& app, Builder& b) {
  auto* q = app.add_subcommand("qf", "quadratic forms");
  q->require_subcommand(1);
  static std::string a, c, bound = "1", family;
  file_arg(b.leaf(q, "info", "definiteness and perfection", [](Session& s) {
    const QuadForm f = load_form(a);
    const bool pd = is_positive_definite(f);
    Json j{{"dim", f.dim()}, {"positive_definite", pd}, {"positive_semidefinite", is_positive_semidefinite(f)},
           {"det", to_json(determinant(f.matrix()))}};
    if (pd) j["perfect"] = is_perfect(f);
    s.emit(j, [&](std::ostream& o) {
      o << "dim: " << f.dim() << "\npositive definite: " << yes(pd)
        << "\npositive semidefinite: " << yes(j["positive_semidefinite"].get<bool>())
        << "\ndet: " << j["det"].get<std::string>() << "\n";
      if (pd) o << "perfect: " << yes(j["perfect"].get<bool>()) << "\n";
    });
    return 0;
  }), "form", a, "form file");
  file_arg(b.leaf(q, "normal-form", "h Q h^t = diag(Q', 0)", [](Session& s) {
    const auto nf = rational_rank_normal_form(load_form(a));
    s.emit(Json{{"h", to_json(nf->h)}, {"reduced", to_json(nf->reduced.matrix())}}, [&](std::ostream& o) {
      o << "# h\n";
      write_matrix(o, nf->h);
      o << "# reduced\n";
      write_matrix(o, nf->reduced.matrix());
    });
    return 0;
  }), "form", a, "form file");
  auto* en = b.leaf(q, "enumerate", "nonzero x with Q(x) <= bound, one per sign pair", [](Session& s) {
    const QuadForm f = load_form(a);
    const Rational bd = parse_rational(bound);
    const auto vs = short_vectors(f, bd, s.exec());
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(Json{{"vector", to_json(v)}, {"value", to_json(f(v))}});
    s.emit(Json{{"bound", to_json(bd)}, {"vectors", arr}}, [&](std::ostream& o) {
      o << "vectors: " << vs.size() << "\n";
      for (const auto& v : vs) o << format_vector(v) << " " << format_rational(f(v)) << "\n";
    });
    return 0;
  });
  file_arg(en, "form", a, "form file");
  en->add_option("--bound", bound, "rational bound");
  file_arg(b.leaf(q, "minvec", "minimum and minimal vectors", [](Session& s) {
    const auto mv = minimal_vectors(load_form(a), s.exec());
    Json vs = Json::array();
    for (const auto& v : mv.vectors) vs.push_back(to_json(v));
    s.emit(Json{{"mu", to_json(mv.minimum)}, {"vectors", vs}}, [&](std::ostream& o) {
      o << "mu: " << format_rational(mv.minimum) << "\nvectors: " << mv.vectors.size() << "\n";
      for (const auto& v : mv.vectors) o << format_vector(v) << "\n";
    });
    return 0;
  }), "form", a, "form file");
  file_arg(b.leaf(q, "perfect-cone", "cone spanned by the minimal vectors", [](Session& s) {
    const QuadForm f = load_form(a);
    const RayCone cone = perfect_cone_of(f);
    const std::size_t d = cone_dimension(cone);
    Json j = to_json(cone);
    j["dimension"] = d;
    j["perfect"] = d == f.dim() * (f.dim() + 1) / 2;
    s.emit(j, [&](std::ostream& o) {
      o << "# dimension " << d << "\n";
      print_cone(o, cone);
    });
    return 0;
  }), "form", a, "form file");
  auto* ws = b.leaf(q, "well-suited", "minimum 1 attained exactly on the columns", [](Session& s) {
    const bool w = is_well_suited(load_form(a), read_int_matrix(c));
    s.emit(Json{{"well_suited", w}}, [&](std::ostream& o) { o << "well-suited: " << yes(w) << "\n"; });
    return w ? 0 : 1;
  });
  file_arg(ws, "form", a, "form file");
  file_arg(ws, "matrix", c, "matrix file");
  auto* hf = b.leaf(q, "h-functional", "the R10 functional on a 5x5 array, a vector, or a family", [](Session& s) {
    if (!family.empty()) {
      Json vals = Json::array();
      std::string text;
      for (const auto& v : q5_vector_family(family[0])) {
        const Rational h = h_functional(v);
        vals.push_back(to_json(h));
        text += format_vector(v) + " " + format_rational(h) + "\n";
      }
      s.emit(Json{{"family", family}, {"values", vals}}, [&](std::ostream& o) { o << text; });
      return 0;
    }
    if (a.empty()) throw InputError("h-functional needs a file or --family");
    const RatMatrix m = read_matrix(a);
    Rational h;
    if (m.rows() == 5 && m.cols() == 5) {
      h = h_functional(m);
    } else if (m.cols() == 1 || m.rows() == 1) {
      const auto z = to_integer(m);
      if (!z) throw InputError("vector must be integral");
      h = h_functional(z->cols() == 1 ? z->column(0) : z->row(0));
    } else {
      throw DimensionError("expected a 5x5 array or a vector of length 5");
    }
    s.emit(Json{{"value", to_json(h)}}, [&](std::ostream& o) { o << "H: " << format_rational(h) << "\n"; });
    return 0;
  });
  hf->add_option("input", a, "5x5 array or vector file")->check(CLI::ExistingFile);
  hf->add_option("--family", family, "vector family")->check(CLI::IsMember({"e", "f", "g", "h"}));

  auto* wsum = q->add_subcommand("wsum", "well-suited sums");
  wsum->require_subcommand(1);
  static std::string lf, lm, rf, rm;
  for (int k = 1; k <= 3; ++k) {
    auto* w = b.leaf(wsum, std::to_string(k), std::to_string(k) + "-sum of well-suited pairs", [k](Session& s) {
      const WellSuitedPair p1{load_form(lf), read_int_matrix(lm)}, p2{load_form(rf), read_int_matrix(rm)};
      const WellSuitedPair out = k == 1 ? well_suited_sum1(p1, p2) : k == 2 ? well_suited_sum2(p1, p2) : well_suited_sum3(p1, p2);
      s.emit(Json{{"form", to_json(out.form.matrix())}, {"matrix", to_json(out.matrix)}, {"well_suited", true}},
             [&](std::ostream& o) {
               o << "# form\n";
               write_matrix(o, out.form.matrix());
               o << "# matrix\n";
               write_matrix(o, out.matrix);
             });
      return 0;
    });
    file_arg(w, "left-form", lf, "left form");
    file_arg(w, "left-matrix", lm, "left matrix");
    file_arg(w, "right-form", rf, "right form");
    file_arg(w, "right-matrix", rm, "right matrix");
  }
}

void add_cone_commands(CLI::App& app, Builder& b) {
  auto* c = app.add_subcommand("cone", "cones spanned by rank-one forms; cone files list generators as columns");
  c->require_subcommand(1);
  static std::string a, d, e, form;
  static std::vector<std::size_t> idx;
  // The ambient cone is either a generator file or the perfect cone of --form.
  auto ambient = [](const std::string& p) {
    if (!form.empty()) return perfect_cone_of(load_form(form));
    if (p.empty()) throw InputError("give a cone file or --form");
    return load_cone(p);
  };
  file_arg(b.leaf(c, "sigma", "sigma(A) of a simple unimodular matrix", [](Session& s) {
    const RayCone cone = sigma_of_matrix(read_int_matrix(a));
    s.emit(to_json(cone), [&](std::ostream& o) { print_cone(o, cone); });
    return 0;
  }), "matrix", a, "matrix file");
  auto* del = b.leaf(c, "delete", "sigma(A minus the listed columns)", [](Session& s) {
    const RayCone f = face_by_deletion(sigma_of_matrix(read_int_matrix(a)), idx);
    s.emit(to_json(f), [&](std::ostream& o) { print_cone(o, f); });
    return 0;
  });
  file_arg(del, "matrix", a, "matrix file");
  del->add_option("indices", idx, "column indices, 0-based");
  auto* mem = b.leaf(c, "member", "nonnegative coefficients of Q over the generators", [](Session& s) {
    const auto lambda = membership(load_form(a), load_cone(d));
    Json j{{"member", lambda.has_value()}};
    if (lambda) j["lambda"] = to_json(*lambda);
    s.emit(j, [&](std::ostream& o) {
      o << "member: " << yes(lambda.has_value()) << "\n";
      if (lambda) o << "lambda: " << format_vector(*lambda) << "\n";
    });
    return lambda ? 0 : 1;
  });
  file_arg(mem, "form", a, "form file");
  file_arg(mem, "cone", d, "cone file");
  file_arg(b.leaf(c, "principal", "principal cone inequalities", [](Session& s) {
    const bool in = principal_cone_contains(load_form(a));
    s.emit(Json{{"principal", in}}, [&](std::ostream& o) { o << "principal: " << yes(in) << "\n"; });
    return in ? 0 : 1;
  }), "form", a, "form file");
  auto* conj = b.leaf(c, "conjugate", "h . cone . h^t", [](Session& s) {
    const RayCone out = gl_conjugate(read_int_matrix(a), load_cone(d));
    s.emit(to_json(out), [&](std::ostream& o) { print_cone(o, out); });
    return 0;
  });
  file_arg(conj, "transform", a, "matrix in GL(Z)");
  file_arg(conj, "cone", d, "cone file");
  auto* face = b.leaf(c, "face", "LP certificate that sub is a face", [ambient](Session& s) {
    const RayCone sub = load_cone(a);
    const RayCone big = ambient(d);
    const FaceCheck fc = check_face(sub, big);
    Json j{{"face", fc.face}};
    if (fc.certificate) j["certificate"] = to_json(*fc.certificate);
    if (!fc.diagnostic.empty()) j["diagnostic"] = fc.diagnostic;
    s.emit(j, [&](std::ostream& o) {
      o << "face: " << yes(fc.face) << "\n";
      if (!fc.diagnostic.empty()) o << "diagnostic: " << fc.diagnostic << "\n";
      if (fc.certificate) {
        o << "# functional\n";
        write_matrix(o, fc.certificate->functional);
        o << "# values " << format_vector(fc.certificate->values) << "\n";
      }
    });
    return fc.face ? 0 : 1;
  });
  file_arg(face, "sub", a, "sub-cone file");
  face->add_option("cone", d, "ambient cone file")->check(CLI::ExistingFile);
  face->add_option("--form", form, "use the perfect cone of this form as ambient cone")->check(CLI::ExistingFile);
  auto* cert = b.leaf(c, "certify", "check a supplied functional against sub and cone", [ambient](Session& s) {
    const RatMatrix h = read_matrix(e);
    const RayCone sub = load_cone(a);
    const RayCone big = ambient(d);
    const auto m = match_generators(sub, big);
    const FaceCertificate fc = evaluate_functional(h, big);
    const bool ok = m && certifies(fc, *m, big);
    s.emit(Json{{"certifies", ok}, {"certificate", to_json(fc)}}, [&](std::ostream& o) {
      o << "certifies: " << yes(ok) << "\nvalues: " << format_vector(fc.values) << "\n";
    });
    return ok ? 0 : 1;
  });
  file_arg(cert, "functional", e, "symmetric functional file");
  file_arg(cert, "sub", a, "sub-cone file");
  cert->add_option("cone", d, "ambient cone file")->check(CLI::ExistingFile);
  cert->add_option("--form", form, "use the perfect cone of this form as ambient cone")->check(CLI::ExistingFile);
  file_arg(b.leaf(c, "extremal", "every generator spans an extremal ray", [](Session& s) {
    const RayCone cone = load_cone(a);
    std::vector<bool> ext;
    for (std::size_t i = 0; i < cone.generators.size(); ++i) ext.push_back(is_extremal_generator(cone, i));
    const bool all = all_generators_extremal(cone);
    s.emit(Json{{"extremal", ext}, {"all", all}}, [&](std::ostream& o) { o << "all extremal: " << yes(all) << "\n"; });
    return all ? 0 : 1;
  }), "cone", a, "cone file");
  auto* eq = b.leaf(c, "equivalent", "matroidal cones up to GL(Z)", [](Session& s) {
    const bool eqv = matroidal_cones_equivalent(sigma_of_matrix(read_int_matrix(a)), sigma_of_matrix(read_int_matrix(d)));
    s.emit(Json{{"equivalent", eqv}}, [&](std::ostream& o) { o << "equivalent: " << yes(eqv) << "\n"; });
    return eqv ? 0 : 1;
  });
  file_arg(eq, "a", a, "first matrix");
  file_arg(eq, "b", d, "second matrix");
}

void add_delone_commands(CLI::App& app, Builder& b) {
  static std::string a, c;
  file_arg(b.leaf(&app, "delone", "Delone subdivision of a form", [](Session& s) {
    const auto sub = delone_subdivision(load_form(a), s.window());
    s.emit(to_json(sub), [&](std::ostream& o) { print_subdivision(o, sub); });
    return 0;
  }), "form", a, "form file");
  file_arg(b.leaf(&app, "dicing", "lattice dicing of a unimodular matrix", [](Session& s) {
    const auto sub = dicing_subdivision(read_int_matrix(a), s.window());
    s.emit(to_json(sub), [&](std::ostream& o) { print_subdivision(o, sub); });
    return 0;
  }), "matrix", a, "matrix file");
  file_arg(b.leaf(&app, "voronoi", "Dirichlet-Voronoi polytope", [](Session& s) {
    const auto p = voronoi_polytope(load_form(a), s.window());
    s.emit(to_json(p), [&](std::ostream& o) {
      o << "dimension: " << p.dimension << "\nfacets: " << p.halfspaces.size() << "\nvertices: " << p.vertices.size()
        << "\n";
      for (const auto& v : p.vertices) o << format_vector(v) << "\n";
    });
    return 0;
  }), "form", a, "form file");
  file_arg(b.leaf(&app, "zonotope", "Q.Vor(Q) against the zonotope of the columns", [](Session& s) {
    const IntMatrix m = read_int_matrix(a);
    const bool ok = minkowski_sum_check(m);
    const auto vs = zonotope_vertices(m);
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    s.emit(Json{{"minkowski", ok}, {"vertices", arr}}, [&](std::ostream& o) {
      o << "minkowski sum: " << yes(ok) << "\nvertices: " << vs.size() << "\n";
    });
    return ok ? 0 : 1;
  }), "matrix", a, "matrix file");
  file_arg(b.leaf(&app, "secondary", "Delone subdivisions of random interior forms against the dicing", [](Session& s) {
    const std::uint64_t seed = s.seed();
    const std::size_t n = s.samples(10);
    const auto res = secondary_cone_check(read_int_matrix(a), n, seed, s.window(), s.exec());
    Json lam = Json::array();
    for (const auto& l : res.lambdas) lam.push_back(to_json(l));
    s.emit(Json{{"pass", res.pass}, {"samples", n}, {"seed", seed}, {"lambdas", lam}, {"sample_pass", res.sample_pass}},
           [&](std::ostream& o) {
             std::size_t ok = 0;
             for (bool p : res.sample_pass) ok += p;
             o << "secondary cone check: " << yes(res.pass) << " (" << ok << "/" << n << ", seed " << seed << ")\n";
           });
    return res.pass ? 0 : 1;
  }), "matrix", a, "matrix file");
  auto* sub = app.add_subcommand("subdivision", "compare subdivisions");
  sub->require_subcommand(1);
  auto* cmp = b.leaf(sub, "compare", "Del(form) against the dicing of matrix", [](Session& s) {
    const bool eq = subdivisions_equal(delone_subdivision(load_form(a), s.window()),
                                       dicing_subdivision(read_int_matrix(c), s.window()));
    s.emit(Json{{"equal", eq}}, [&](std::ostream& o) { o << "equal: " << yes(eq) << "\n"; });
    return eq ? 0 : 1;
  });
  file_arg(cmp, "form", a, "form file");
  file_arg(cmp, "matrix", c, "matrix file");
}

void add_verify_commands(CLI::App& app, Builder& b) {
  auto* v = app.add_subcommand("verify", "named verification scenarios");
  v->require_subcommand(1);
  static std::vector<std::size_t> gs;
  auto emit_reports = [](Session& s, const std::vector<Report>& rs) {
    bool pass = true;
    Json arr = Json::array();
    for (const auto& r : rs) {
      pass = pass && r.pass;
      arr.push_back(to_json(r, s.timing()));
    }
    s.emit(rs.size() == 1 ? arr[0] : arr, [&](std::ostream& o) {
      for (const auto& r : rs) o << to_text(r, s.timing());
    });
    return pass ? 0 : 1;
  };
  b.leaf(v, "r10", "R10 face certificate", [emit_reports](Session& s) {
    return emit_reports(s, {verify_r10(s.fixtures())});
  });
  auto* p = b.leaf(v, "principal", "principal cone identity", [emit_reports](Session& s) {
    std::vector<Report> rs;
    const std::vector<std::size_t> dims = gs.empty() ? std::vector<std::size_t>{2, 3, 4, 5} : gs;
    for (std::size_t g : dims) rs.push_back(verify_principal(g, s.seed(), s.samples(100)));
    return emit_reports(s, rs);
  });
  p->add_option("--g", gs, "dimension(s), default 2..5")->check(CLI::Range(2, 5));
  b.leaf(v, "taxonomy-g2", "g = 2 perfect and secondary cones", [emit_reports](Session& s) {
    return emit_reports(s, {verify_taxonomy_g2(s.fixtures())});
  });
  b.leaf(v, "seymour", "well-suited sums and their bounds", [emit_reports](Session& s) {
    return emit_reports(s, {verify_seymour_pipeline(s.fixtures(), s.seed(), s.samples(1000))});
  });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"conelab: exact checks on cones of quadratic forms and regular matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fixtures", opt.fixtures, "fixture directory")->check(CLI::ExistingDirectory);
  app.add_option("--seed", opt.seed, "random seed (default: CONELAB_SEED or 12345)");
  app.add_flag("--timing", opt.timing, "include wall time in reports");
  app.add_option("--window", opt.window, "window radius R (default 3 for g <= 3, 2 for g = 4)")->check(CLI::PositiveNumber);
  app.add_option("--samples", opt.samples, "sample count")->check(CLI::PositiveNumber);
  app.add_flag("--serial", opt.serial, "use the serial reference kernels");

  Builder b;
  add_matrix_commands(app, b);
  add_tu_commands(app, b);
  add_matroid_commands(app, b);
  add_graph_commands(app, b);
  add_sum_commands(app, b);
  add_fixture_command(app, b);
  add_qf_commands(app, b);
  add_cone_commands(app, b);
  add_delone_commands(app, b);
  add_verify_commands(app, b);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  // The deepest parsed subcommand that carries an action.
  const CLI::App* node = &app;
  while (true) {
    const auto subs = node->get_subcommands();
    if (subs.empty()) break;
    node = subs.front();
  }
  const auto it = b.actions.find(node);
  if (it == b.actions.end()) {
    err << "error: incomplete command\n";
    return 2;
  }
  Session session(out, opt);
  try {
    return it->second(session);
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"conelab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace conelab
