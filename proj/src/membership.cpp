// membership.cpp -- structural membership tests for the catalogue classes,
// plus the excluded-minor route used to cross-check them.

#include <algorithm>
#include <stdexcept>

#include "minorclass/classes.hpp"
#include "minorclass/minor.hpp"

namespace minorclass {

namespace {

std::vector<std::vector<int>> split_components(const LabelledGraph& g) {
  auto id = g.component_ids();
  int m = 0;
  for (int x : id) m = std::max(m, x);
  std::vector<std::vector<int>> comps(static_cast<size_t>(g.n() == 0 ? 0 : m + 1));
  for (int v = 0; v < g.n(); ++v) comps[static_cast<size_t>(id[static_cast<size_t>(v)])].push_back(v);
  return comps;
}

// Component with edge count == vertex count (one cycle): every vertex must
// be within distance k-1 of the cycle.
bool unicyclic_depth_ok(const LabelledGraph& comp, int k) {
  std::vector<int> core = comp.two_core();
  std::vector<int> dist(static_cast<size_t>(comp.n()), -1);
  std::vector<int> queue;
  for (int v : core) {
    dist[static_cast<size_t>(v)] = 0;
    queue.push_back(v);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int u : comp.neighbors(v)) {
      if (dist[static_cast<size_t>(u)] == -1) {
        dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }
  for (int d : dist)
    if (d < 0 || d > k - 1) return false;
  return true;
}

// Recognize the 2-core of a connected bowtie-free component: a cycle, K4,
// K4 with one edge subdivided, or a "two hubs" graph: vertices u, v plus
// degree-2 common neighbours, plus at most one all-degree-2 path between u
// and v, with counts depending on whether uv is an edge.
bool bowtie_free_core_ok(const LabelledGraph& core) {
  const int n = core.n();
  if (n == 0) return true;
  if (!core.is_connected()) return false;
  std::vector<int> deg = core.degrees();
  std::vector<int> branch;  // degree >= 3
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] >= 3) branch.push_back(v);

  if (branch.empty()) return true;  // plain cycle (min degree 2, connected)

  if (branch.size() == 4) {
    // K4, or K4 with exactly one subdivided edge
    int nonadj = 0, a = -1, b = -1;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j)
        if (!core.has_edge(branch[i], branch[j])) {
          ++nonadj;
          a = branch[i];
          b = branch[j];
        }
    for (int v : branch)
      if (deg[static_cast<size_t>(v)] != 3) nonadj = -1;
    if (nonadj == 0) return n == 4;
    if (nonadj == 1 && n > 4) {
      // remaining vertices: one path of degree-2 vertices from a to b
      std::vector<char> seen(static_cast<size_t>(n), 0);
      for (int v : branch) seen[static_cast<size_t>(v)] = 1;
      // walk from a through degree-2 vertices
      int prev = a, cur = -1;
      for (int u : core.neighbors(a))
        if (deg[static_cast<size_t>(u)] == 2) cur = u;
      if (cur == -1) return false;
      int steps = 0;
      while (cur != b) {
        if (deg[static_cast<size_t>(cur)] != 2 || seen[static_cast<size_t>(cur)]) return false;
        seen[static_cast<size_t>(cur)] = 1;
        ++steps;
        int nxt = -1;
        for (int u : core.neighbors(cur))
          if (u != prev) nxt = u;
        if (nxt == -1) return false;
        prev = cur;
        cur = nxt;
      }
      if (steps != n - 4) return false;  // everything accounted for
      return core.edge_count() == 5 + steps + 1;
    }
    return false;
  }

  // Two-hub families.  Try every vertex pair as (u, v).
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int commons = 0;
      std::vector<int> chain;
      bool ok = true;
      for (int w = 0; w < n && ok; ++w) {
        if (w == u || w == v) continue;
        if (deg[static_cast<size_t>(w)] != 2) { ok = false; break; }
        auto nb = core.neighbors(w);
        bool adj_u = std::find(nb.begin(), nb.end(), u) != nb.end();
        bool adj_v = std::find(nb.begin(), nb.end(), v) != nb.end();
        if (adj_u && adj_v) ++commons;
        else chain.push_back(w);
      }
      if (!ok) continue;
      // chain vertices must form a single u..v path
      int path_interior = static_cast<int>(chain.size());
      bool has_path = path_interior > 0;
      if (has_path) {
        int ends_u = 0, ends_v = 0, middles = 0;
        for (int w : chain) {
          auto nb = core.neighbors(w);
          int cu = std::find(nb.begin(), nb.end(), u) != nb.end();
          int cv = std::find(nb.begin(), nb.end(), v) != nb.end();
          if (cu + cv == 0) ++middles;
          else if (cu) ++ends_u;
          else ++ends_v;
        }
        if (!(ends_u == 1 && ends_v == 1 && middles == path_interior - 2) &&
            !(path_interior == 1 && false))
          continue;
        if (path_interior < 2) continue;  // length-1 chains already count as commons
        // connectivity of the chain as a path is implied by degrees + counts
        // only if the chain is connected; verify by walking from the u-end
        int start = -1;
        for (int w : chain) {
          auto nb = core.neighbors(w);
          if (std::find(nb.begin(), nb.end(), u) != nb.end()) start = w;
        }
        std::vector<char> used(static_cast<size_t>(n), 0);
        int prev = u, cur = start, steps = 0;
        while (cur != v && steps <= path_interior) {
          used[static_cast<size_t>(cur)] = 1;
          ++steps;
          int nxt = -1;
          for (int w : core.neighbors(cur))
            if (w != prev) nxt = w;
          if (nxt == -1) break;
          prev = cur;
          cur = nxt;
        }
        if (cur != v || steps != path_interior) continue;
      }
      bool hub_edge = core.has_edge(u, v);
      // edge budget: hub edge + 2 per common + path edges
      int expect = (hub_edge ? 1 : 0) + 2 * commons + (has_path ? path_interior + 1 : 0);
      if (core.edge_count() != expect) continue;
      if (hub_edge) {
        if (has_path ? commons >= 1 : commons >= 2) return true;
      } else {
        if (has_path ? commons >= 2 : commons >= 3) return true;
      }
    }
  }
  return false;
}

bool star_ray_component_ok(const LabelledGraph& comp, int k) {
  auto deg = comp.degrees();
  int branch = 0;
  for (int d : deg) {
    if (k > 0 && d > k) return false;
    if (d >= 3) ++branch;
  }
  return branch <= 1;
}

}  // namespace

bool membership(const ClassId& id, const LabelledGraph& g) {
  switch (id.tag) {
    case ClassTag::forests:
      return is_acyclic(g);
    case ClassTag::path_forests:
      return all_components_paths(g);
    case ClassTag::max_degree_two: {
      for (int d : g.degrees())
        if (d > 2) return false;
      return true;
    }
    case ClassTag::bounded_components: {
      for (auto& comp : split_components(g))
        if (static_cast<int>(comp.size()) > id.k) return false;
      return true;
    }
    case ClassTag::two_spoon_free:
      return membership_by_minors(id, g);
    default:
      break;
  }
  for (auto& verts : split_components(g)) {
    LabelledGraph comp = g.induced(verts);
    int excess = comp.edge_count() - comp.n();
    switch (id.tag) {
      case ClassTag::caterpillar_forests:
        if (!is_caterpillar_tree(comp)) return false;
        break;
      case ClassTag::star_ray:
        if (!is_acyclic(comp) || !star_ray_component_ok(comp, id.k)) return false;
        break;
      case ClassTag::diamond_bowtie_free:
        if (excess > 0) return false;
        break;
      case ClassTag::spoon_dbf:
        if (excess > 0) return false;
        if (excess == 0 && !unicyclic_depth_ok(comp, id.k)) return false;
        break;
      case ClassTag::bowtie_free: {
        std::vector<int> core = comp.two_core();
        if (!core.empty() && !bowtie_free_core_ok(comp.induced(core))) return false;
        break;
      }
      default:
        throw std::logic_error("unhandled class tag");
    }
  }
  return true;
}

bool membership_by_minors(const ClassId& id, const LabelledGraph& g) {
  for (const LabelledGraph& h : excluded_minors(id)) {
    if (h.n() > g.n()) continue;  // cannot be a minor of a smaller graph
    if (has_minor(g, h)) return false;
  }
  return true;
}

}  // namespace minorclass
