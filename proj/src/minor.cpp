#include "minorclass/minor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace minorclass {

namespace {

struct MinorSearch {
  int gn;
  std::vector<std::uint16_t> adj;        // adjacency mask per g-vertex
  std::vector<std::uint16_t> reach;      // union of adj over a vertex mask
  std::vector<char> connected;           // per vertex mask
  const LabelledGraph& h;
  std::vector<std::uint16_t> branch;     // chosen branch set per h-vertex
  std::vector<int> order;                // h-vertices, connectivity-first

  explicit MinorSearch(const LabelledGraph& g, const LabelledGraph& hh)
      : gn(g.n()), h(hh) {
    adj.assign(static_cast<size_t>(gn), 0);
    for (auto [a, b] : g.edges()) {
      adj[static_cast<size_t>(a)] |= static_cast<std::uint16_t>(1u << b);
      adj[static_cast<size_t>(b)] |= static_cast<std::uint16_t>(1u << a);
    }
    const size_t m = size_t{1} << gn;
    reach.assign(m, 0);
    connected.assign(m, 0);
    for (size_t s = 1; s < m; ++s) {
      int low = __builtin_ctzll(s);
      reach[s] = reach[s & (s - 1)] | adj[static_cast<size_t>(low)];
      // grow from the lowest bit inside s
      std::uint16_t comp = static_cast<std::uint16_t>(1u << low);
      for (;;) {
        std::uint16_t grow = 0;
        std::uint16_t probe = comp;
        while (probe) {
          int v = __builtin_ctz(probe);
          probe &= probe - 1;
          grow |= adj[static_cast<size_t>(v)];
        }
        std::uint16_t next = (comp | grow) & static_cast<std::uint16_t>(s);
        if (next == comp) break;
        comp = next;
      }
      connected[s] = comp == static_cast<std::uint16_t>(s);
    }
    // Place h-vertices so that each one after the first has an already
    // placed neighbour (h is connected in all the patterns we use; fall
    // back to index order otherwise).
    std::vector<char> placed(static_cast<size_t>(h.n()), 0);
    order.push_back(0);
    placed[0] = 1;
    while (static_cast<int>(order.size()) < h.n()) {
      bool found = false;
      for (int v = 0; v < h.n() && !found; ++v) {
        if (placed[static_cast<size_t>(v)]) continue;
        for (int u : order) {
          if (h.has_edge(u, v)) {
            order.push_back(v);
            placed[static_cast<size_t>(v)] = 1;
            found = true;
            break;
          }
        }
      }
      if (!found) {
        for (int v = 0; v < h.n(); ++v)
          if (!placed[static_cast<size_t>(v)]) {
            order.push_back(v);
            placed[static_cast<size_t>(v)] = 1;
            break;
          }
      }
    }
    branch.assign(static_cast<size_t>(h.n()), 0);
  }

  bool search(size_t depth, std::uint16_t used) {
    if (depth == order.size()) return true;
    int hv = order[depth];
    const std::uint16_t all = static_cast<std::uint16_t>((1u << gn) - 1);
    const std::uint16_t free = static_cast<std::uint16_t>(all & ~used);
    if (__builtin_popcount(free) < static_cast<int>(order.size() - depth))
      return false;
    // iterate nonempty submasks of free
    for (std::uint16_t s = free; s; s = static_cast<std::uint16_t>((s - 1) & free)) {
      if (!connected[s]) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        if (h.has_edge(order[d], hv) && !(reach[s] & branch[static_cast<size_t>(order[d])]))
          ok = false;
      }
      if (!ok) continue;
      branch[static_cast<size_t>(hv)] = s;
      if (search(depth + 1, static_cast<std::uint16_t>(used | s))) return true;
    }
    return false;
  }
};

}  // namespace

bool has_minor(const LabelledGraph& g, const LabelledGraph& h) {
  if (g.n() > 10) throw std::invalid_argument("minor search capped at 10 host vertices");
  if (h.n() > 7) throw std::invalid_argument("minor patterns capped at 7 vertices");
  if (h.n() == 0) return true;
  if (h.n() > g.n() || h.edge_count() > g.edge_count()) return false;
  MinorSearch ms(g, h);
  return ms.search(0, 0);
}

namespace patterns {

LabelledGraph triangle() { return LabelledGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

LabelledGraph diamond() {
  return LabelledGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

LabelledGraph bowtie() {
  return LabelledGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

LabelledGraph k4() {
  return LabelledGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

LabelledGraph spoon(int k) {
  if (k < 1) throw std::invalid_argument("spoon handle must have >= 1 edge");
  LabelledGraph g(3 + k);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  for (int i = 0; i < k; ++i) g.add_edge(i == 0 ? 0 : 2 + i, 3 + i);
  return g;
}

LabelledGraph star(int rays) {
  LabelledGraph g(rays + 1);
  for (int i = 1; i <= rays; ++i) g.add_edge(0, i);
  return g;
}

LabelledGraph path_graph(int n) {
  LabelledGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

LabelledGraph double_star() {
  return LabelledGraph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

LabelledGraph spider_three_legs2() {
  return LabelledGraph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

}  // namespace patterns

std::string tree_iso_key(const LabelledGraph& t) {
  // AHU encoding: sort child encodings recursively; root at the centre, or
  // take the smaller of the two rootings for bicentral trees.
  const int n = t.n();
  if (n == 1) return "()";
  std::vector<std::vector<int>> nb(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) nb[static_cast<size_t>(v)] = t.neighbors(v);
  // peel leaves to find centres
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = static_cast<int>(nb[static_cast<size_t>(v)].size());
  std::vector<int> layer;
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[static_cast<size_t>(v)] = 1;
      --remaining;
      for (int u : nb[static_cast<size_t>(v)])
        if (!removed[static_cast<size_t>(u)] && --deg[static_cast<size_t>(u)] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<int> centres;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<size_t>(v)]) centres.push_back(v);

  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int u : nb[static_cast<size_t>(v)])
      if (u != parent) kids.push_back(enc(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
  };
  std::string best = enc(centres[0], -1);
  if (centres.size() == 2) {
    std::string alt = enc(centres[1], -1);
    if (alt < best) best = alt;
  }
  return best;
}

std::vector<LabelledGraph> trees_on(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("tree list covers 1 <= n <= 8");
  if (n == 1) return {LabelledGraph(1)};
  std::set<std::string> seen;
  std::vector<LabelledGraph> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (__builtin_popcountll(mask) != n - 1) continue;
    LabelledGraph g = LabelledGraph::from_mask(n, mask);
    if (!g.is_connected()) continue;
    if (seen.insert(tree_iso_key(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace minorclass
