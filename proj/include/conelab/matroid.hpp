#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "conelab/exact.hpp"

namespace conelab {

using ElementSet = std::uint32_t;

/// Matroid on {0..n-1} stored by its bases (bit sets, sorted ascending).
class Matroid {
 public:
  static constexpr std::size_t kMaxElements = 20;

  Matroid(std::size_t n, std::vector<ElementSet> bases, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_basis(ElementSet s) const;
  bool is_independent(ElementSet s) const { return independent_[s] != 0; }
  std::size_t rank_of(ElementSet s) const;

  // Checks axiom (ii) exhaustively over all pairs of bases.
  bool satisfies_exchange_axiom() const;

 private:
  std::size_t n_;
  std::size_t rank_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> independent_;
};

Matroid vector_matroid(const IntMatrix& a);

std::vector<ElementSet> circuits(const Matroid& m);
bool is_simple(const Matroid& m);
// Same predicate on the vector matroid, read directly off the columns: no
// zero column and no two proportional columns.
bool is_simple_matrix(const IntMatrix& a);

bool matroid_isomorphic(const Matroid& a, const Matroid& b);

/// Multigraph; loops are edges (u, u).
struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph(const std::string& path);
bool is_connected(const Graph& g);

/// K_n with edges (i, n-1) for i < n-1 first, then (i, j), i < j < n-1.
/// With the last vertex row deleted its representation has columns
/// e_i followed by e_i - e_j.
Graph complete_graph(std::size_t n);

// Bases are spanning trees; computed with union-find, independent of any
// matrix representation.
Matroid graphic_matroid(const Graph& g);

/// Signed incidence matrix (+1 at u, -1 at v for edge (u, v)) with the last
/// vertex row deleted.
IntMatrix graphic_representation(const Graph& g);

/// Fundamental cycles of a depth-first spanning tree from vertex 0, edges
/// oriented by discovery (tree edges parent to child, back edges descendant
/// to ancestor). One row per non-tree edge, in edge order.
IntMatrix cographic_representation(const Graph& g);

IntMatrix r10_matrix();

}  // namespace conelab
