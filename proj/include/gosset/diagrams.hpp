// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_DIAGRAMS_HPP
#define GOSSET_DIAGRAMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gosset/linalg.hpp"
#include "gosset/scalars.hpp"

namespace gosset {

/// Edge label m = p/q. Integer labels have q == 1; q > 1 encodes star
/// diagrams such as the 72-degree H4 variant (m = 5/3).
struct EdgeLabel {
  int p = 3;
  int q = 1;

  bool is_integer() const { return q == 1; }
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Nodes are 0-based internally; text formats and CLI output are 1-based.
struct Edge {
  int i = 0;  // i < j
  int j = 0;
  EdgeLabel m;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class CoxeterDiagram {
 public:
  /// Validates the edge list: indices in range, i != j, no duplicates,
  /// labels p/q with p >= 3, 1 <= q < p, gcd(p, q) == 1.
  CoxeterDiagram(int rank, std::vector<Edge> edges, std::string name = {});

  int rank() const { return rank_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  /// Label between nodes i and j; nullopt when absent (m = 2).
  std::optional<EdgeLabel> label(int i, int j) const;
  std::vector<int> neighbours(int i) const;
  bool connected() const;
  /// All labels in {3}: the simply-laced Weyl types whose roots are integral.
  bool crystallographic() const;

 private:
  int rank_;
  std::vector<Edge> edges_;
  std::string name_;
};

/// Parses `NAME` (A<n>, B<n>, D<n>, E6, E7, E8, F4, G2, H3, H4, H4', I2(m))
/// or `rank=N;edges=i-j:m,i-j:m,...` with 1-based nodes and m defaulting to 3.
/// Throws UnknownDiagram or MalformedSpec.
CoxeterDiagram build_diagram(std::string_view spec);

struct GramEntry {
  double value = 0.0;
  std::optional<GoldenScalar> exact;  // present when the label is 2, 3 or 5-based
};

/// Symmetric Gram matrix of norm-sqrt2 simple roots: 2 on the diagonal and
/// -2cos(pi/m_ij) off it.
class GramMatrix {
 public:
  explicit GramMatrix(const CoxeterDiagram& d);

  int rank() const { return rank_; }
  const GramEntry& entry(int i, int j) const { return cells_[i * rank_ + j]; }
  double operator()(int i, int j) const { return entry(i, j).value; }
  bool is_exact() const;
  Matrix to_matrix() const;

 private:
  int rank_;
  std::vector<GramEntry> cells_;
};

GramMatrix gram_matrix(const CoxeterDiagram& d);

/// Exact value of 2cos(pi*q/p) when it lies in Q(sqrt5).
std::optional<GoldenScalar> exact_two_cos(EdgeLabel m);

struct Bipartition {
  std::vector<int> color_a;  // contains node 0
  std::vector<int> color_b;
};

/// Two-colouring of the diagram graph, BFS from the lowest unvisited node,
/// which always lands in color_a. Throws NotBipartite.
Bipartition bipartition(const CoxeterDiagram& d);

/// Renders a label as "5" or "5/3".
std::string to_string(EdgeLabel m);

}  // namespace gosset

#endif  // GOSSET_DIAGRAMS_HPP
