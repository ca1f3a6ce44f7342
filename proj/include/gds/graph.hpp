#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gds/error.hpp"
#include "gds/family.hpp"

namespace gds {

/// Graph on the ground set joining two elements iff some block contains both.
/// Every edge carries the indices of the blocks that contain both endpoints.
class AssociatedGraph {
 public:
  using Edge = std::pair<ElementId, ElementId>;  // first < second

  const std::vector<ElementId>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool has_vertex(ElementId g) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), g);
  }

  const std::vector<ElementId>& neighbors(ElementId g) const {
    static const std::vector<ElementId> none;
    auto it = adjacency_.find(g);
    return it == adjacency_.end() ? none : it->second;
  }

  bool adjacent(ElementId a, ElementId b) const { return labels_.count(key(a, b)) > 0; }

  /// Blocks containing both endpoints; empty when a and b are not adjacent.
  const std::vector<BlockIndex>& edge_labels(ElementId a, ElementId b) const {
    static const std::vector<BlockIndex> none;
    auto it = labels_.find(key(a, b));
    return it == labels_.end() ? none : it->second;
  }

  const std::map<Edge, std::vector<BlockIndex>>& labelled_edges() const { return labels_; }
  std::size_t edge_count() const { return labels_.size(); }

  static Edge key(ElementId a, ElementId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend AssociatedGraph build_graph(const SetFamily& family);
  friend AssociatedGraph induced_subgraph(const AssociatedGraph& graph,
                                          const std::vector<ElementId>& subset);

 private:
  std::vector<ElementId> vertices_;
  std::map<ElementId, std::vector<ElementId>> adjacency_;
  std::map<Edge, std::vector<BlockIndex>> labels_;
};

inline AssociatedGraph build_graph(const SetFamily& family) {
  AssociatedGraph g;
  g.vertices_ = family.ground();
  for (ElementId v : g.vertices_) g.adjacency_[v];
  for (const auto& b : family.blocks())
    for (std::size_t i = 0; i < b.members.size(); ++i)
      for (std::size_t j = i + 1; j < b.members.size(); ++j)
        g.labels_[AssociatedGraph::key(b.members[i], b.members[j])].push_back(b.index);
  for (const auto& [e, labels] : g.labels_) {
    g.adjacency_[e.first].push_back(e.second);
    g.adjacency_[e.second].push_back(e.first);
  }
  for (auto& [v, adj] : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

/// Subgraph on `subset` keeping every edge of the parent between its vertices.
inline AssociatedGraph induced_subgraph(const AssociatedGraph& graph,
                                        const std::vector<ElementId>& subset) {
  AssociatedGraph g;
  for (ElementId v : subset)
    if (graph.has_vertex(v)) g.vertices_.push_back(v);
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
  for (ElementId v : g.vertices_) {
    auto& adj = g.adjacency_[v];
    for (ElementId u : graph.neighbors(v))
      if (std::binary_search(g.vertices_.begin(), g.vertices_.end(), u)) {
        adj.push_back(u);
        if (v < u) g.labels_[{v, u}] = graph.edge_labels(v, u);
      }
  }
  return g;
}

/// Components ordered by smallest label; each component sorted.
inline std::vector<std::vector<ElementId>> connected_components(const AssociatedGraph& graph) {
  std::vector<std::vector<ElementId>> out;
  std::set<ElementId> seen;
  for (ElementId s : graph.vertices()) {
    if (seen.count(s)) continue;
    std::vector<ElementId> comp;
    std::deque<ElementId> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      ElementId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (ElementId u : graph.neighbors(v))
        if (seen.insert(u).second) queue.push_back(u);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Paths and cycles

/// A path (g_1, ..., g_m). For a cycle the closing edge (g_m, g_1) is implied
/// and g_1 is not repeated.
struct Path {
  std::vector<ElementId> vertices;
  bool is_cycle = false;

  std::size_t edge_count() const {
    if (vertices.empty()) return 0;
    return is_cycle ? vertices.size() : vertices.size() - 1;
  }

  std::vector<AssociatedGraph::Edge> edges() const {
    std::vector<AssociatedGraph::Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      out.push_back(AssociatedGraph::key(vertices[i], vertices[i + 1]));
    if (is_cycle && vertices.size() >= 3)
      out.push_back(AssociatedGraph::key(vertices.back(), vertices.front()));
    return out;
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  }
};

inline bool shares_block(const SetFamily& family, ElementId a, ElementId b) {
  const auto& ga = family.gamma(a);
  const auto& gb = family.gamma(b);
  std::size_t i = 0, j = 0;
  while (i < ga.size() && j < gb.size()) {
    if (ga[i] == gb[j]) return true;
    ga[i] < gb[j] ? ++i : ++j;
  }
  return false;
}

/// Distinct vertices with consecutive ones adjacent; cycles need at least three.
inline bool is_simple(const SetFamily& family, const Path& path) {
  const auto& v = path.vertices;
  if (v.empty()) return false;
  std::set<ElementId> distinct(v.begin(), v.end());
  if (distinct.size() != v.size()) return false;
  for (ElementId g : v)
    if (!family.contains(g)) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!shares_block(family, v[i], v[i + 1])) return false;
  if (path.is_cycle) return v.size() >= 3 && shares_block(family, v.back(), v.front());
  return true;
}

namespace detail {

/// Number of path vertices held by each block, with a primitivity guard.
class BlockCounter {
 public:
  explicit BlockCounter(const SetFamily& family) : family_(family), counts_(family.block_count() + 1, 0) {}

  /// Adds g; returns false (and leaves counts untouched) if a block would hold three vertices.
  bool push(ElementId g) {
    const auto& gamma = family_.gamma(g);
    for (BlockIndex k : gamma)
      if (counts_[k] >= 2) return false;
    for (BlockIndex k : gamma) ++counts_[k];
    return true;
  }
  void pop(ElementId g) {
    for (BlockIndex k : family_.gamma(g)) --counts_[k];
  }

 private:
  const SetFamily& family_;
  std::vector<int> counts_;
};

}  // namespace detail

/// True iff no block contains more than two vertices of the path.
inline bool is_primitive(const SetFamily& family, const Path& path) {
  if (!is_simple(family, path))
    throw NotSimple("path is not simple");
  detail::BlockCounter counter(family);
  for (ElementId g : path.vertices)
    if (!counter.push(g)) return false;
  return true;
}

/// Lexicographically first shortest path from g to h in `graph`, or nothing
/// when they lie in different components. Shortest paths are primitive.
inline std::optional<Path> shortest_primitive_path(const AssociatedGraph& graph,
                                                   const SetFamily& family, ElementId g,
                                                   ElementId h) {
  if (!graph.has_vertex(g) || !graph.has_vertex(h))
    throw UnknownElement("path endpoint is not a vertex of the graph");
  if (g == h) return Path{{g}, false};
  std::map<ElementId, std::size_t> dist;
  std::deque<ElementId> queue{h};
  dist[h] = 0;
  while (!queue.empty()) {
    ElementId v = queue.front();
    queue.pop_front();
    for (ElementId u : graph.neighbors(v))
      if (dist.emplace(u, dist[v] + 1).second) queue.push_back(u);
  }
  if (!dist.count(g)) return std::nullopt;
  Path p{{g}, false};
  ElementId cur = g;
  while (cur != h) {
    const std::size_t want = dist[cur] - 1;
    for (ElementId u : graph.neighbors(cur)) {
      auto it = dist.find(u);
      if (it != dist.end() && it->second == want) {
        cur = u;
        break;
      }
    }
    p.vertices.push_back(cur);
  }
  if (!is_primitive(family, p))
    throw InternalPropertyViolation("shortest path is not primitive");
  return p;
}

/// Every primitive path from g to h in `graph`, in lexicographic order.
inline std::vector<Path> enumerate_primitive_paths(const AssociatedGraph& graph,
                                                   const SetFamily& family, ElementId g,
                                                   ElementId h) {
  std::vector<Path> out;
  if (g == h) return out;
  detail::BlockCounter counter(family);
  std::vector<ElementId> stack{g};
  std::set<ElementId> on_path{g};
  counter.push(g);
  std::function<void(ElementId)> dfs = [&](ElementId v) {
    for (ElementId u : graph.neighbors(v)) {
      if (on_path.count(u) || !counter.push(u)) continue;
      stack.push_back(u);
      if (u == h) {
        out.push_back(Path{stack, false});
      } else {
        on_path.insert(u);
        dfs(u);
        on_path.erase(u);
      }
      stack.pop_back();
      counter.pop(u);
    }
  };
  dfs(g);
  return out;
}

/// True iff every pair of vertices of `component` is joined by exactly one
/// primitive path inside the component.
inline bool unique_primitive_paths(const AssociatedGraph& graph, const SetFamily& family,
                                   const std::vector<ElementId>& component) {
  const AssociatedGraph sub = induced_subgraph(graph, component);
  const auto& v = sub.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (enumerate_primitive_paths(sub, family, v[i], v[j]).size() != 1) return false;
  return true;
}

enum class Parity { Any, Odd, Even };

namespace detail {

/// Canonical cycles (smallest label first, second vertex smaller than the
/// last). With `primitive_only` the DFS is pruned on blocks holding three vertices.
inline std::vector<Path> cycles(const AssociatedGraph& graph, const SetFamily* family,
                                Parity parity, std::size_t limit) {
  std::vector<Path> out;
  std::vector<ElementId> stack;
  std::set<ElementId> on_path;
  std::optional<BlockCounter> counter;
  if (family) counter.emplace(*family);

  auto accept = [&](std::size_t n) {
    if (parity == Parity::Odd) return n % 2 == 1;
    if (parity == Parity::Even) return n % 2 == 0;
    return true;
  };

  std::function<void(ElementId, ElementId)> dfs = [&](ElementId start, ElementId v) {
    for (ElementId u : graph.neighbors(v)) {
      if (out.size() >= limit) return;
      if (u == start) {
        if (stack.size() >= 3 && stack[1] < stack.back() && accept(stack.size()))
          out.push_back(Path{stack, true});
        continue;
      }
      if (u < start || on_path.count(u)) continue;
      if (counter && !counter->push(u)) continue;
      stack.push_back(u);
      on_path.insert(u);
      dfs(start, u);
      on_path.erase(u);
      stack.pop_back();
      if (counter) counter->pop(u);
    }
  };

  for (ElementId s : graph.vertices()) {
    if (out.size() >= limit) break;
    if (counter && !counter->push(s)) continue;
    stack = {s};
    on_path = {s};
    dfs(s, s);
    if (counter) counter->pop(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All primitive cycles of `graph` (up to rotation and reflection) with the
/// requested vertex-count parity.
inline std::vector<Path> find_primitive_cycles(const AssociatedGraph& graph,
                                               const SetFamily& family, Parity parity = Parity::Any,
                                               std::size_t limit = static_cast<std::size_t>(-1)) {
  return detail::cycles(graph, &family, parity, limit);
}

/// All simple cycles of `graph`, canonical form, at most `limit` of them.
inline std::vector<Path> enumerate_simple_cycles(const AssociatedGraph& graph,
                                                 std::size_t limit = static_cast<std::size_t>(-1)) {
  return detail::cycles(graph, nullptr, Parity::Any, limit);
}

// ---------------------------------------------------------------------------
// Peeling a simple cycle into primitive pieces

struct CycleDecomposition {
  std::vector<Path> cycles;
  std::vector<AssociatedGraph::Edge> shared_edges;  // between cycles[i] and cycles[i + 1]
};

/// Piece property (1): primitive, or exactly three vertices all in one block.
inline bool is_primitive_or_block_triangle(const SetFamily& family, const Path& cycle) {
  if (is_primitive(family, cycle)) return true;
  if (cycle.vertices.size() != 3) return false;
  const auto& a = family.gamma(cycle.vertices[0]);
  for (BlockIndex k : a)
    if (family.block(k).contains(cycle.vertices[1]) && family.block(k).contains(cycle.vertices[2]))
      return true;
  return false;
}

/// Checks properties (1)-(4) of a cycle decomposition; returns the first
/// violation as text.
inline std::optional<std::string> check_cycle_decomposition(const SetFamily& family,
                                                            const Path& input,
                                                            const CycleDecomposition& d) {
  const auto& pieces = d.cycles;
  if (pieces.empty()) return "no pieces";
  std::set<ElementId> all;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].is_cycle || !is_simple(family, pieces[i]))
      return "piece " + std::to_string(i) + " is not a simple cycle";
    if (!is_primitive_or_block_triangle(family, pieces[i]))
      return "piece " + std::to_string(i) + " is neither primitive nor a block triangle";
    all.insert(pieces[i].vertices.begin(), pieces[i].vertices.end());
  }
  if (all != std::set<ElementId>(input.vertices.begin(), input.vertices.end()))
    return "vertex union differs from the input cycle";

  auto common_vertices = [](const Path& a, const Path& b) {
    std::set<ElementId> sa(a.vertices.begin(), a.vertices.end());
    std::size_t n = 0;
    for (ElementId g : b.vertices) n += sa.count(g);
    return n;
  };
  auto common_edges = [](const Path& a, const Path& b) {
    auto ea = a.edges();
    std::set<AssociatedGraph::Edge> sa(ea.begin(), ea.end());
    std::size_t n = 0;
    for (const auto& e : b.edges()) n += sa.count(e);
    return n;
  };
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (common_vertices(pieces[i], pieces[i + 1]) != 2 || common_edges(pieces[i], pieces[i + 1]) != 1)
      return "pieces " + std::to_string(i) + " and " + std::to_string(i + 1) +
             " do not share exactly two vertices and one edge";
  }
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 2; j < pieces.size(); ++j)
      if (common_vertices(pieces[i], pieces[j]) > 1)
        return "pieces " + std::to_string(i) + " and " + std::to_string(j) +
               " share more than one vertex";
  return std::nullopt;
}

namespace detail {

/// Exhaustive search for a chain of admissible cycles on the vertices of
/// `cycle` with properties (1)-(4). Used when no peeling works.
inline std::optional<CycleDecomposition> chain_search(const AssociatedGraph& graph, const SetFamily& family,
                                                      const Path& cycle, std::size_t limit) {
  const AssociatedGraph sub = induced_subgraph(graph, cycle.vertices);
  const auto all = detail::cycles(sub, nullptr, Parity::Any, limit);
  if (all.size() >= limit)
    throw InstanceTooLarge("more than " + std::to_string(limit) + " candidate pieces");
  std::vector<Path> pieces;
  std::vector<std::set<ElementId>> vsets;
  std::vector<std::set<AssociatedGraph::Edge>> esets;
  for (const auto& c : all) {
    if (!is_primitive_or_block_triangle(family, c)) continue;
    pieces.push_back(c);
    vsets.emplace_back(c.vertices.begin(), c.vertices.end());
    const auto e = c.edges();
    esets.emplace_back(e.begin(), e.end());
  }
  auto common = [](const auto& a, const auto& b) {
    std::size_t n = 0;
    for (const auto& x : a) n += b.count(x);
    return n;
  };
  const std::set<ElementId> target(cycle.vertices.begin(), cycle.vertices.end());
  std::vector<std::size_t> chain;
  std::map<ElementId, int> covered;
  std::function<bool()> dfs = [&]() -> bool {
    if (covered.size() == target.size()) return true;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (std::find(chain.begin(), chain.end(), i) != chain.end()) continue;
      if (!chain.empty()) {
        const std::size_t last = chain.back();
        if (common(vsets[i], vsets[last]) != 2 || common(esets[i], esets[last]) != 1) continue;
        bool far_ok = true;
        for (std::size_t t = 0; t + 1 < chain.size() && far_ok; ++t) far_ok = common(vsets[i], vsets[chain[t]]) <= 1;
        if (!far_ok) continue;
      }
      chain.push_back(i);
      for (ElementId g : vsets[i]) ++covered[g];
      if (dfs()) return true;
      for (ElementId g : vsets[i])
        if (--covered[g] == 0) covered.erase(g);
      chain.pop_back();
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  CycleDecomposition out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    out.cycles.push_back(pieces[chain[i]]);
    if (i == 0) continue;
    for (const auto& e : esets[chain[i]])
      if (esets[chain[i - 1]].count(e)) out.shared_edges.push_back(e);
  }
  return out;
}

/// Depth-first peeling. `cur` starts with the edge shared with the previous
/// piece. Each step keeps a prefix (g_1..g_j) and a suffix (g_l..g_m) joined
/// by a chord; the remainder (g_l, g_j, g_{j+1}, ..., g_{l-1}) starts with that
/// chord. Candidates go shortest first, ties to the smallest (j, l), and the
/// reversed orientation of the shared edge is tried after the given one.
inline bool peel(const AssociatedGraph& graph, const SetFamily& family, const std::vector<ElementId>& cur,
                 CycleDecomposition& out, std::set<std::vector<ElementId>>& dead) {
  if (dead.count(cur)) return false;
  const std::size_t m = cur.size();
  std::vector<ElementId> reversed{cur[1], cur[0]};
  for (std::size_t i = m; i-- > 2;) reversed.push_back(cur[i]);
  const std::vector<ElementId>* orientations[] = {&cur, &reversed};
  for (const auto* c : orientations) {
    const auto& v = *c;
    // 1-based (j, l); l == m + 1 denotes g_1.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cands;
    for (std::size_t j = 2; j <= m; ++j)
      for (std::size_t l = j + 2; l <= m + 1; ++l) {
        if (l == m + 1 && j == 2) continue;
        if (graph.adjacent(v[j - 1], l == m + 1 ? v[0] : v[l - 1])) cands.emplace_back(j + (m + 1 - l), j, l);
      }
    std::sort(cands.begin(), cands.end());
    for (const auto& [len, j, l] : cands) {
      std::vector<ElementId> piece(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j));
      for (std::size_t i = l; i <= m; ++i) piece.push_back(v[i - 1]);
      const Path p{piece, true};
      if (!is_primitive_or_block_triangle(family, p)) continue;
      const ElementId target = l == m + 1 ? v[0] : v[l - 1];
      std::vector<ElementId> rest{target};
      for (std::size_t i = j; i < l && i <= m; ++i) rest.push_back(v[i - 1]);
      out.cycles.push_back(p);
      out.shared_edges.push_back(AssociatedGraph::key(v[j - 1], target));
      if (peel(graph, family, rest, out, dead)) return true;
      out.cycles.pop_back();
      out.shared_edges.pop_back();
    }
  }
  if (is_primitive_or_block_triangle(family, Path{cur, true})) {
    out.cycles.push_back(Path{cur, true});
    return true;
  }
  dead.insert(cur);
  return false;
}

}  // namespace detail

/// Splits a simple cycle into primitive cycles (or block triangles) by
/// repeatedly peeling off a cycle through the current first edge.
///
/// The shortest admissible piece is preferred. When it holds three vertices of
/// one block without being a triangle, the next candidates are tried, then the
/// peeling is restarted from the other edges of the input. If every peeling
/// fails, all chains of admissible cycles on the same vertices are searched;
/// some cycles admit none, and CycleNotDecomposable is thrown for them.
inline CycleDecomposition decompose_cycle(const AssociatedGraph& graph, const SetFamily& family,
                                          const Path& cycle, std::size_t search_limit = 1 << 16) {
  if (!cycle.is_cycle || !is_simple(family, cycle))
    throw NotSimpleCycle("input is not a simple cycle");
  auto verified = [&](CycleDecomposition d) {
    if (auto violation = check_cycle_decomposition(family, cycle, d))
      throw InternalPropertyViolation("cycle decomposition: " + *violation);
    return d;
  };
  std::vector<ElementId> start = cycle.vertices;
  std::set<std::vector<ElementId>> dead;
  for (std::size_t r = 0; r < start.size(); ++r) {
    CycleDecomposition out;
    if (detail::peel(graph, family, start, out, dead)) return verified(std::move(out));
    std::rotate(start.begin(), start.begin() + 1, start.end());
  }
  if (auto chain = detail::chain_search(graph, family, cycle, search_limit)) return verified(std::move(*chain));
  throw CycleNotDecomposable("no chain of primitive cycles or block triangles covers the cycle");
}

// ---------------------------------------------------------------------------
// Splitting the blocks into two pairwise-disjoint sides

struct Bipartition {
  std::vector<BlockIndex> plus;
  std::vector<BlockIndex> minus;
};

/// Two-colours the blocks so that blocks on one side are pairwise disjoint.
/// Requires kappa <= 2 and no odd primitive cycle; returns nothing otherwise.
inline std::optional<Bipartition> bipartition(const SetFamily& family) {
  if (family.kappa_max() > 2) return std::nullopt;
  const AssociatedGraph graph = build_graph(family);
  if (!find_primitive_cycles(graph, family, Parity::Odd, 1).empty()) return std::nullopt;

  const std::size_t n = family.block_count();
  std::vector<std::vector<BlockIndex>> touching(n + 1);
  for (ElementId g : family.ground()) {
    const auto& gamma = family.gamma(g);
    if (gamma.size() == 2) {
      touching[gamma[0]].push_back(gamma[1]);
      touching[gamma[1]].push_back(gamma[0]);
    }
  }
  std::vector<int> side(n + 1, 0);
  for (BlockIndex s = 1; s <= n; ++s) {
    if (side[s]) continue;
    side[s] = 1;
    std::deque<BlockIndex> queue{s};
    while (!queue.empty()) {
      BlockIndex k = queue.front();
      queue.pop_front();
      for (BlockIndex t : touching[k]) {
        if (side[t] == 0) {
          side[t] = -side[k];
          queue.push_back(t);
        } else if (side[t] == side[k]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (BlockIndex k = 1; k <= n; ++k) (side[k] > 0 ? out.plus : out.minus).push_back(k);
  return out;
}

/// Cross-check of a bipartition against path parity: two blocks sit on the
/// same side iff every primitive path joining them has an odd number of edges.
///
/// A joining path runs from an element of one block to an element of the
/// other with no interior vertex in either; a shared element is a path with
/// no edges.
inline bool bipartition_parity_consistent(const SetFamily& family, const Bipartition& bip) {
  const AssociatedGraph graph = build_graph(family);
  std::map<BlockIndex, int> side;
  for (BlockIndex k : bip.plus) side[k] = 1;
  for (BlockIndex k : bip.minus) side[k] = -1;
  for (BlockIndex i = 1; i <= family.block_count(); ++i) {
    for (BlockIndex j = i + 1; j <= family.block_count(); ++j) {
      const Block& bi = family.block(i);
      const Block& bj = family.block(j);
      bool seen_odd = false, seen_even = false;
      std::vector<ElementId> outside;
      for (ElementId g : family.ground())
        if (!bi.contains(g) && !bj.contains(g)) outside.push_back(g);
      for (ElementId a : bi.members) {
        if (bj.contains(a)) {
          seen_even = true;
          continue;
        }
        for (ElementId b : bj.members) {
          if (bi.contains(b)) continue;
          std::vector<ElementId> verts = outside;
          verts.push_back(a);
          verts.push_back(b);
          const AssociatedGraph sub = induced_subgraph(graph, verts);
          for (const Path& p : enumerate_primitive_paths(sub, family, a, b))
            (p.edge_count() % 2 ? seen_odd : seen_even) = true;
        }
      }
      if (seen_odd && seen_even) return false;
      if (seen_odd && side[i] != side[j]) return false;
      if (seen_even && side[i] == side[j]) return false;
    }
  }
  return true;
}

/// One "g h : k1,k2" line per edge, sorted.
inline std::string edge_list_dump(const AssociatedGraph& graph) {
  std::ostringstream os;
  for (const auto& [e, labels] : graph.labelled_edges()) {
    os << e.first << ' ' << e.second << " : ";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace gds
