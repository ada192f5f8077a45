#include "conelab/matroid.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>
#include <tuple>

namespace conelab {

namespace {

std::size_t popcount(ElementSet s) { return static_cast<std::size_t>(std::popcount(s)); }

std::vector<ElementSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<ElementSet> out;
  if (k > n) return out;
  if (k == 0) return {0};
  ElementSet s = (ElementSet(1) << k) - 1;
  const std::uint64_t limit = std::uint64_t(1) << n;
  while (s < limit) {
    out.push_back(s);
    ElementSet c = s & (~s + 1);
    std::uint64_t r = std::uint64_t(s) + c;
    if (r >= limit) break;
    s = static_cast<ElementSet>((((r ^ s) >> 2) / c) | r);
  }
  return out;
}

std::vector<std::size_t> members(ElementSet s) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; s; ++i, s >>= 1)
    if (s & 1) idx.push_back(i);
  return idx;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Matroid::Matroid(std::size_t n, std::vector<ElementSet> bases, std::vector<std::string> labels)
    : n_(n), bases_(std::move(bases)), labels_(std::move(labels)) {
  if (n_ > kMaxElements) throw DimensionError("matroid ground set too large");
  if (bases_.empty()) throw InputError("a matroid needs at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = popcount(bases_.front());
  for (ElementSet b : bases_) {
    if (popcount(b) != rank_) throw InputError("bases of different cardinality");
    if (n_ < 32 && (b >> n_) != 0) throw InputError("basis element outside the ground set");
  }
  if (labels_.empty())
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i + 1));
  if (labels_.size() != n_) throw InputError("label count does not match ground set");

  const std::size_t total = std::size_t(1) << n_;
  independent_.assign(total, 0);
  for (ElementSet b : bases_) independent_[b] = 1;
  for (std::size_t s = total; s-- > 0;) {
    if (independent_[s] || popcount(static_cast<ElementSet>(s)) >= rank_) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      if (s & (std::size_t(1) << i)) continue;
      if (independent_[s | (std::size_t(1) << i)]) {
        independent_[s] = 1;
        break;
      }
    }
  }
}

bool Matroid::is_basis(ElementSet s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

std::size_t Matroid::rank_of(ElementSet s) const {
  ElementSet acc = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const ElementSet bit = ElementSet(1) << i;
    if ((s & bit) && is_independent(acc | bit)) acc |= bit;
  }
  return popcount(acc);
}

bool Matroid::satisfies_exchange_axiom() const {
  for (ElementSet b1 : bases_)
    for (ElementSet b2 : bases_) {
      for (std::size_t x : members(b1 & ~b2)) {
        bool found = false;
        for (std::size_t y : members(b2 & ~b1)) {
          if (is_basis((b1 & ~(ElementSet(1) << x)) | (ElementSet(1) << y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  return true;
}

Matroid vector_matroid(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (n > Matroid::kMaxElements) throw DimensionError("vector_matroid: too many columns");
  const std::size_t r = rank(a);
  std::vector<ElementSet> bases;
  for (ElementSet s : subsets_of_size(n, r)) {
    if (r == 0 || rank(a.columns(members(s))) == r) bases.push_back(s);
  }
  return Matroid(n, std::move(bases));
}

std::vector<ElementSet> circuits(const Matroid& m) {
  if (m.size() > 14) throw DimensionError("circuits: ground set larger than 14");
  std::vector<ElementSet> out;
  const std::size_t total = std::size_t(1) << m.size();
  for (std::size_t s = 1; s < total; ++s) {
    const ElementSet set = static_cast<ElementSet>(s);
    if (m.is_independent(set)) continue;
    bool minimal = true;
    for (std::size_t i : members(set)) {
      if (!m.is_independent(set & ~(ElementSet(1) << i))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(set);
  }
  return out;
}

bool is_simple(const Matroid& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.is_independent(ElementSet(1) << i)) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!m.is_independent((ElementSet(1) << i) | (ElementSet(1) << j))) return false;
  }
  return true;
}

bool is_simple_matrix(const IntMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < a.rows(); ++i) zero = zero && sgn(a(i, j)) == 0;
    if (zero) return false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t k = j + 1; k < a.cols(); ++k) {
      bool proportional = true;
      for (std::size_t p = 0; p < a.rows() && proportional; ++p)
        for (std::size_t q = p + 1; q < a.rows() && proportional; ++q)
          proportional = a(p, j) * a(q, k) == a(q, j) * a(p, k);
      if (proportional) return false;
    }
  return true;
}

bool matroid_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() > 12 || b.size() > 12) throw DimensionError("matroid_isomorphic: ground set larger than 12");
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return false;
  const std::size_t n = a.size();
  const auto ca = circuits(a);
  const auto cb = circuits(b);
  if (ca.size() != cb.size()) return false;

  // Per-element signature: bases through it, then circuit counts by size.
  auto signature = [n](const Matroid& m, const std::vector<ElementSet>& cs) {
    std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(n + 2, 0));
    for (ElementSet bs : m.bases())
      for (std::size_t e : members(bs)) ++sig[e][0];
    for (ElementSet c : cs)
      for (std::size_t e : members(c)) ++sig[e][popcount(c) + 1];
    return sig;
  };
  const auto sa = signature(a, ca);
  const auto sb = signature(b, cb);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }

  std::vector<std::uint8_t> circuit_b(std::size_t(1) << n, 0);
  for (ElementSet c : cb) circuit_b[c] = 1;
  // Circuits of a grouped by their largest element.
  std::vector<std::vector<ElementSet>> closing(n);
  for (ElementSet c : ca) closing[std::bit_width(c) - 1].push_back(c);

  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  auto map_set = [&](ElementSet s) {
    ElementSet t = 0;
    for (std::size_t e : members(s)) t |= ElementSet(1) << image[e];
    return t;
  };
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || sa[k] != sb[cand]) continue;
      image[k] = cand;
      bool ok = true;
      for (ElementSet c : closing[k])
        if (!circuit_b[map_set(c)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[cand] = true;
      if (extend(k + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return extend(0);
}

Graph parse_graph(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError(source + ":" + std::to_string(line_no) + ": " + msg);
  };
  static const std::regex pair_re(R"(^\s*([0-9]+)\s+([0-9]+)\s*$)");
  auto next = [&](std::smatch& m) {
    while (std::getline(in, line)) {
      ++line_no;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!std::regex_match(line, m, pair_re)) fail("expected two non-negative integers");
      return true;
    }
    return false;
  };
  std::smatch m;
  if (!next(m)) fail("missing 'V E' header");
  Graph g;
  g.vertices = std::stoul(m[1]);
  const std::size_t e = std::stoul(m[2]);
  for (std::size_t k = 0; k < e; ++k) {
    if (!next(m)) fail("expected " + std::to_string(e) + " edges");
    const std::size_t u = std::stoul(m[1]), v = std::stoul(m[2]);
    if (u >= g.vertices || v >= g.vertices) fail("edge endpoint out of range");
    g.edges.emplace_back(u, v);
  }
  if (next(m)) fail("more edges than declared");
  return g;
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in, path);
}

bool is_connected(const Graph& g) {
  if (g.vertices == 0) return true;
  UnionFind uf(g.vertices);
  std::size_t comps = g.vertices;
  for (auto [u, v] : g.edges)
    if (uf.unite(u, v)) --comps;
  return comps == 1;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  g.vertices = n;
  if (n < 2) return g;
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Matroid graphic_matroid(const Graph& g) {
  const std::size_t n = g.edges.size();
  if (n > Matroid::kMaxElements) throw DimensionError("graphic_matroid: too many edges");
  UnionFind all(g.vertices);
  std::size_t r = 0;
  for (auto [u, v] : g.edges)
    if (all.unite(u, v)) ++r;
  std::vector<ElementSet> bases;
  for (ElementSet s : subsets_of_size(n, r)) {
    UnionFind uf(g.vertices);
    bool forest = true;
    for (std::size_t e : members(s))
      if (!uf.unite(g.edges[e].first, g.edges[e].second)) {
        forest = false;
        break;
      }
    if (forest) bases.push_back(s);
  }
  return Matroid(n, std::move(bases));
}

IntMatrix graphic_representation(const Graph& g) {
  if (g.vertices == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graphic_representation: graph is not connected");
  IntMatrix a(g.vertices - 1, g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    if (u + 1 < g.vertices) a(u, e) += 1;
    if (v + 1 < g.vertices) a(v, e) -= 1;
  }
  return a;
}

IntMatrix cographic_representation(const Graph& g) {
  if (g.vertices == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("cographic_representation: graph is not connected");
  const std::size_t m = g.edges.size();
  std::vector<std::vector<std::size_t>> incident(g.vertices);
  for (std::size_t e = 0; e < m; ++e) {
    incident[g.edges[e].first].push_back(e);
    if (g.edges[e].second != g.edges[e].first) incident[g.edges[e].second].push_back(e);
  }
  std::vector<bool> visited(g.vertices, false), classified(m, false);
  std::vector<std::size_t> parent_edge(g.vertices, SIZE_MAX), parent(g.vertices, SIZE_MAX);
  // Back edges as (edge, descendant, ancestor), in discovery order.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> back;

  std::function<void(std::size_t)> dfs = [&](std::size_t u) {
    visited[u] = true;
    for (std::size_t e : incident[u]) {
      if (classified[e]) continue;
      classified[e] = true;
      const std::size_t w = g.edges[e].first == u ? g.edges[e].second : g.edges[e].first;
      if (!visited[w]) {
        parent[w] = u;
        parent_edge[w] = e;
        dfs(w);
      } else {
        back.emplace_back(e, u, w);
      }
    }
  };
  dfs(0);
  std::sort(back.begin(), back.end());

  IntMatrix a(back.size(), m);
  for (std::size_t row = 0; row < back.size(); ++row) {
    auto [e, desc, anc] = back[row];
    a(row, e) = 1;
    for (std::size_t x = desc; x != anc; x = parent[x]) a(row, parent_edge[x]) = 1;
  }
  return a;
}

IntMatrix r10_matrix() {
  return IntMatrix{{1, 0, 0, 0, 0, -1, 1, 0, 0, 1},
                   {0, 1, 0, 0, 0, 1, -1, 1, 0, 0},
                   {0, 0, 1, 0, 0, 0, 1, -1, 1, 0},
                   {0, 0, 0, 1, 0, 0, 0, 1, -1, 1},
                   {0, 0, 0, 0, 1, 1, 0, 0, 1, -1}};
}

}  // namespace conelab
