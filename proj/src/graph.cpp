#include "minorclass/graph.hpp"

#include <stdexcept>

namespace minorclass {

LabelledGraph::LabelledGraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
}

int LabelledGraph::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

LabelledGraph LabelledGraph::from_mask(int n, std::uint64_t mask) {
  if (n * (n - 1) / 2 > 64) throw std::invalid_argument("mask form needs n <= 11");
  LabelledGraph g(n);
  if (!g.bits_.empty()) g.bits_[0] = mask;
  return g;
}

LabelledGraph LabelledGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  LabelledGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

bool LabelledGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("vertex out of range");
  int idx = pair_index(i, j);
  return (bits_[static_cast<size_t>(idx) / 64] >> (idx % 64)) & 1u;
}

void LabelledGraph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("no loops");
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("vertex out of range");
  int idx = pair_index(i, j);
  bits_[static_cast<size_t>(idx) / 64] |= std::uint64_t{1} << (idx % 64);
}

int LabelledGraph::edge_count() const {
  int c = 0;
  for (auto w : bits_) c += __builtin_popcountll(w);
  return c;
}

std::vector<std::pair<int, int>> LabelledGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (has_edge(i, j)) e.emplace_back(i, j);
  return e;
}

std::vector<int> LabelledGraph::degrees() const {
  std::vector<int> d(static_cast<size_t>(n_), 0);
  for (auto [a, b] : edges()) {
    ++d[static_cast<size_t>(a)];
    ++d[static_cast<size_t>(b)];
  }
  return d;
}

std::vector<int> LabelledGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_edge(u, v)) out.push_back(u);
  return out;
}

std::vector<int> LabelledGraph::component_ids() const {
  std::vector<int> id(static_cast<size_t>(n_), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (id[static_cast<size_t>(s)] != -1) continue;
    id[static_cast<size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n_; ++u) {
        if (id[static_cast<size_t>(u)] == -1 && has_edge(u, v)) {
          id[static_cast<size_t>(u)] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return id;
}

int LabelledGraph::component_count() const {
  auto id = component_ids();
  int m = 0;
  for (int x : id) m = x > m ? x : m;
  return n_ == 0 ? 0 : m + 1;
}

bool LabelledGraph::is_connected() const { return component_count() <= 1; }

LabelledGraph LabelledGraph::induced(const std::vector<int>& vertices) const {
  LabelledGraph g(static_cast<int>(vertices.size()));
  for (size_t a = 0; a < vertices.size(); ++a)
    for (size_t b = a + 1; b < vertices.size(); ++b)
      if (has_edge(vertices[a], vertices[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

std::vector<int> LabelledGraph::two_core() const {
  std::vector<int> deg = degrees();
  std::vector<char> dead(static_cast<size_t>(n_), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n_; ++v) {
      if (dead[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] > 1) continue;
      dead[static_cast<size_t>(v)] = 1;
      changed = true;
      for (int u = 0; u < n_; ++u)
        if (!dead[static_cast<size_t>(u)] && has_edge(u, v)) --deg[static_cast<size_t>(u)];
    }
  }
  std::vector<int> core;
  for (int v = 0; v < n_; ++v)
    if (!dead[static_cast<size_t>(v)]) core.push_back(v);
  return core;
}

LabelledGraph LabelledGraph::relabelled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("bad permutation size");
  LabelledGraph g(n_);
  for (auto [a, b] : edges()) g.add_edge(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
  return g;
}

bool is_acyclic(const LabelledGraph& g) {
  return g.edge_count() + g.component_count() == g.n();
}

bool all_components_paths(const LabelledGraph& g) {
  if (!is_acyclic(g)) return false;
  for (int d : g.degrees())
    if (d > 2) return false;
  return true;
}

bool is_caterpillar_tree(const LabelledGraph& c) {
  if (!c.is_connected() || !is_acyclic(c)) return false;
  std::vector<int> deg = c.degrees();
  std::vector<int> spine;
  for (int v = 0; v < c.n(); ++v)
    if (deg[static_cast<size_t>(v)] >= 2) spine.push_back(v);
  if (spine.size() <= 1) return true;
  LabelledGraph s = c.induced(spine);
  if (!s.is_connected()) return false;
  for (int d : s.degrees())
    if (d > 2) return false;
  return true;
}

}  // namespace minorclass
