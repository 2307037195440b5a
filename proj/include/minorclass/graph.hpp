// graph.hpp -- simple labelled graphs on vertices 0..n-1 with a packed
// upper-triangle edge bitset.  Pair (i, j), i < j, lives at bit j(j-1)/2 + i,
// the same order the graph6 format uses.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace minorclass {

class LabelledGraph {
 public:
  explicit LabelledGraph(int n = 0);

  // Graph on n vertices whose edge bitset is the low bits of mask (n small
  // enough that n(n-1)/2 <= 64); used by the exhaustive enumerator.
  static LabelledGraph from_mask(int n, std::uint64_t mask);
  static LabelledGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int edge_count() const;
  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;

  // Component id per vertex, ids 0..(#components-1) in order of smallest
  // member.
  std::vector<int> component_ids() const;
  int component_count() const;
  bool is_connected() const;

  // Subgraph induced by the listed vertices, relabelled 0..k-1 in list order.
  LabelledGraph induced(const std::vector<int>& vertices) const;

  // Vertices that survive repeatedly deleting degree <= 1 vertices (the
  // 2-core); empty for forests.
  std::vector<int> two_core() const;

  // Relabel by a permutation: vertex v becomes perm[v].
  LabelledGraph relabelled(const std::vector<int>& perm) const;

  bool operator==(const LabelledGraph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

 private:
  static int pair_index(int i, int j);
  int n_;
  std::vector<std::uint64_t> bits_;
};

bool is_acyclic(const LabelledGraph& g);

// Each component is a path (isolated vertices count as paths).
bool all_components_paths(const LabelledGraph& g);

// Tree test plus: deleting the leaves leaves a path.
bool is_caterpillar_tree(const LabelledGraph& component);

}  // namespace minorclass
