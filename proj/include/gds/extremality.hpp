#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gds/error.hpp"
#include "gds/family.hpp"
#include "gds/graph.hpp"
#include "gds/linalg.hpp"

namespace gds {

enum class WitnessConstruction {
  TwoColoring,
  TreePropagation,
  CycleAttachmentB,  // attachment vertex lies in one block only
  CycleAttachmentC,  // attachment roots a cycle-free region
  CycleAttachmentD,  // attachment leads to a second odd cycle
  NullDirection      // kernel of the block sums on the component
};

inline std::string to_string(WitnessConstruction c) {
  switch (c) {
    case WitnessConstruction::TwoColoring: return "TwoColoring";
    case WitnessConstruction::TreePropagation: return "TreePropagation";
    case WitnessConstruction::CycleAttachmentB: return "CycleAttachment(b)";
    case WitnessConstruction::CycleAttachmentC: return "CycleAttachment(c)";
    case WitnessConstruction::CycleAttachmentD: return "CycleAttachment(d)";
    case WitnessConstruction::NullDirection: return "NullDirection";
  }
  return "?";
}

/// Two members of S whose midpoint is w, certifying that w is not extreme.
struct Witness {
  WeightFunction w_plus;
  WeightFunction w_minus;
  Rational epsilon;
  WitnessConstruction construction = WitnessConstruction::TwoColoring;
  Rational slack;  // the admissible bound epsilon was derived from
};

enum class ComponentKind { IsolatedVertexOne, OddPrimitiveCycleHalf };

inline std::string to_string(ComponentKind k) {
  return k == ComponentKind::IsolatedVertexOne ? "IsolatedVertexOne" : "OddPrimitiveCycleHalf";
}

struct ExtremeComponent {
  std::vector<ElementId> vertices;
  ComponentKind kind;
};

struct ExtremalityVerdict {
  enum class Kind { Extreme, NotExtreme, Unsupported };
  Kind kind = Kind::Unsupported;
  std::vector<ExtremeComponent> components;  // Extreme
  std::optional<Witness> witness;            // NotExtreme
  std::vector<ElementId> failing_component;  // NotExtreme
  std::string reason;                        // Unsupported

  bool extreme() const { return kind == Kind::Extreme; }
};

inline std::string to_string(ExtremalityVerdict::Kind k) {
  switch (k) {
    case ExtremalityVerdict::Kind::Extreme: return "Extreme";
    case ExtremalityVerdict::Kind::NotExtreme: return "NotExtreme";
    case ExtremalityVerdict::Kind::Unsupported: return "Unsupported";
  }
  return "?";
}

/// min over g of min{w(g), 1 - w(g)}.
inline Rational slack_of(const WeightFunction& w, const std::vector<ElementId>& vertices) {
  std::optional<Rational> best;
  for (ElementId g : vertices) {
    const Rational v = w(g);
    const Rational s = std::min(v, Rational(1 - v));
    if (!best || s < *best) best = s;
  }
  return best.value_or(Rational(0));
}

/// Throws InternalPropertyViolation unless both halves lie in S, differ, and average to w.
inline void check_witness(const SetFamily& family, const WeightFunction& w, const Witness& wit) {
  if (!in_S(family, wit.w_plus) || !in_S(family, wit.w_minus))
    throw InternalPropertyViolation(to_string(wit.construction) + " witness leaves S");
  if (wit.w_plus == wit.w_minus)
    throw InternalPropertyViolation(to_string(wit.construction) + " witness halves coincide");
  if (Rational(1, 2) * (wit.w_plus + wit.w_minus) != w)
    throw InternalPropertyViolation(to_string(wit.construction) + " witness does not average to w");
}

namespace detail {

inline AssociatedGraph support_graph(const SetFamily& family, const WeightFunction& w) {
  return induced_subgraph(build_graph(family), w.support());
}

inline Witness witness_from_delta(const WeightFunction& w, const std::map<ElementId, Rational>& delta,
                                  const Rational& eps, WitnessConstruction c, const Rational& slack) {
  Witness wit;
  wit.w_plus = w;
  wit.w_minus = w;
  for (const auto& [g, d] : delta) {
    wit.w_plus.add(g, d);
    wit.w_minus.add(g, -d);
  }
  wit.epsilon = eps;
  wit.construction = c;
  wit.slack = slack;
  return wit;
}

inline bool subset_of_support(const WeightFunction& w, const std::vector<ElementId>& vertices) {
  return std::all_of(vertices.begin(), vertices.end(), [&](ElementId g) { return w(g) > 0; });
}

/// Relative perturbation factors rho with w_pm(v) = (1 +- rho(v)) w(v), rooted at
/// g0 with rho(g0) = eps and pushed through every block meeting `vertices`
/// other than `skip`. Each such block has a unique entry vertex closest to g0;
/// its other support members get rho(child) = -rho(entry) w(entry) / (1 - w(entry)).
inline std::map<ElementId, Rational> propagate_factors(const SetFamily& family,
                                                       const WeightFunction& w,
                                                       const std::vector<ElementId>& vertices,
                                                       ElementId g0, const Rational& eps,
                                                       std::optional<BlockIndex> skip) {
  const AssociatedGraph sub = induced_subgraph(build_graph(family), vertices);
  std::map<ElementId, std::size_t> dist{{g0, 0}};
  std::deque<ElementId> queue{g0};
  while (!queue.empty()) {
    ElementId v = queue.front();
    queue.pop_front();
    for (ElementId u : sub.neighbors(v))
      if (dist.emplace(u, dist[v] + 1).second) queue.push_back(u);
  }

  std::set<BlockIndex> blocks;
  for (ElementId v : vertices)
    for (BlockIndex k : family.gamma(v))
      if (k != skip) blocks.insert(k);

  struct Step {
    std::size_t layer;
    BlockIndex block;
    ElementId entry;
    std::vector<ElementId> children;
  };
  std::vector<Step> steps;
  const std::set<ElementId> in_region(vertices.begin(), vertices.end());
  for (BlockIndex k : blocks) {
    std::vector<ElementId> members;
    for (ElementId g : family.block(k).members)
      if (in_region.count(g) && w(g) > 0) members.push_back(g);
    if (members.size() < 2) continue;
    std::size_t layer = static_cast<std::size_t>(-1);
    for (ElementId g : members) layer = std::min(layer, dist.at(g));
    Step s{layer, k, 0, {}};
    std::size_t entries = 0;
    for (ElementId g : members) {
      if (dist.at(g) == layer) {
        s.entry = g;
        ++entries;
      } else {
        s.children.push_back(g);
      }
    }
    if (entries != 1)
      throw UnexpectedMultipleEntryVertex("block " + std::to_string(k) + " meets layer " +
                                          std::to_string(layer) + " in " +
                                          std::to_string(entries) + " vertices");
    steps.push_back(std::move(s));
  }
  std::stable_sort(steps.begin(), steps.end(),
                   [](const Step& a, const Step& b) { return a.layer < b.layer; });

  std::map<ElementId, Rational> rho{{g0, eps}};
  for (const Step& s : steps) {
    auto it = rho.find(s.entry);
    if (it == rho.end())
      throw InternalPropertyViolation("entry vertex reached before its factor was set");
    const Rational we = w(s.entry);
    const Rational child = -it->second * we / (1 - we);
    for (ElementId c : s.children)
      if (!rho.emplace(c, child).second)
        throw UnexpectedMultipleEntryVertex("vertex " + std::to_string(c) +
                                            " is entered from two blocks");
  }
  for (const auto& [g, r] : rho)
    if (abs(r) > 1)
      throw InternalPropertyViolation("perturbation of element " + std::to_string(g) +
                                      " exceeds its weight");
  return rho;
}

}  // namespace detail

/// Perturbs +-eps and -+eps on the two colour classes of `subgraph`, eps being
/// its full slack. The subgraph must lie in supp w, meet every block in zero
/// or two vertices and contain no odd primitive cycle.
inline Witness witness_two_coloring(const SetFamily& family, const WeightFunction& w,
                                    std::vector<ElementId> subgraph) {
  require_in_S(family, w);
  std::sort(subgraph.begin(), subgraph.end());
  subgraph.erase(std::unique(subgraph.begin(), subgraph.end()), subgraph.end());
  if (subgraph.empty()) throw ConditionsViolated("subgraph is empty");
  for (ElementId g : subgraph)
    if (!family.contains(g)) throw UnknownElement("element " + std::to_string(g) + " is unknown");
  if (!detail::subset_of_support(w, subgraph))
    throw ConditionsViolated("subgraph is not inside supp w");
  const std::set<ElementId> in_sub(subgraph.begin(), subgraph.end());
  for (const auto& b : family.blocks()) {
    std::size_t n = 0;
    for (ElementId g : b.members) n += in_sub.count(g);
    if (n != 0 && n != 2)
      throw ConditionsViolated("block " + std::to_string(b.index) + " meets the subgraph in " +
                               std::to_string(n) + " vertices");
  }
  const AssociatedGraph sub = induced_subgraph(build_graph(family), subgraph);
  if (!find_primitive_cycles(sub, family, Parity::Odd, 1).empty())
    throw ConditionsViolated("subgraph contains an odd primitive cycle");

  std::map<ElementId, int> colour;
  for (ElementId s : sub.vertices()) {
    if (colour.count(s)) continue;
    colour[s] = 1;
    std::deque<ElementId> queue{s};
    while (!queue.empty()) {
      ElementId v = queue.front();
      queue.pop_front();
      for (ElementId u : sub.neighbors(v)) {
        auto [it, fresh] = colour.emplace(u, -colour[v]);
        if (fresh)
          queue.push_back(u);
        else if (it->second == colour[v])
          throw ConditionsViolated("subgraph is not two-colourable");
      }
    }
  }
  const Rational eps = slack_of(w, subgraph);
  std::map<ElementId, Rational> delta;
  for (const auto& [g, c] : colour) delta[g] = c > 0 ? eps : Rational(-eps);
  Witness wit = detail::witness_from_delta(w, delta, eps, WitnessConstruction::TwoColoring, eps);
  check_witness(family, w, wit);
  return wit;
}

/// Multiplicative perturbation spreading from the smallest vertex of a
/// cycle-free support component with at least two vertices.
inline Witness witness_tree_propagation(const SetFamily& family, const WeightFunction& w,
                                        std::vector<ElementId> component) {
  require_in_S(family, w);
  std::sort(component.begin(), component.end());
  component.erase(std::unique(component.begin(), component.end()), component.end());
  if (component.size() < 2) throw ConditionsViolated("component has fewer than two vertices");
  if (family.kappa_max() > 2) throw ConditionsViolated("some element lies in more than two blocks");
  for (ElementId g : component)
    if (!family.contains(g)) throw UnknownElement("element " + std::to_string(g) + " is unknown");
  if (!detail::subset_of_support(w, component))
    throw ConditionsViolated("component is not inside supp w");
  const AssociatedGraph sub = induced_subgraph(build_graph(family), component);
  if (connected_components(sub).size() != 1) throw ConditionsViolated("component is not connected");
  const std::set<ElementId> in_comp(component.begin(), component.end());
  for (ElementId g : component)
    for (BlockIndex k : family.gamma(g))
      for (ElementId h : family.block(k).members)
        if (w(h) > 0 && !in_comp.count(h))
          throw ConditionsViolated("component is not a whole support component");
  if (auto pair = check_a1(family, component))
    throw ConditionsViolated("elements " + std::to_string(pair->first) + " and " +
                             std::to_string(pair->second) + " lie in the same blocks");
  if (!find_primitive_cycles(sub, family, Parity::Any, 1).empty())
    throw ConditionsViolated("component contains a primitive cycle");

  const ElementId g0 = component.front();
  const Rational w0 = w(g0);
  const Rational eps0 = std::min(Rational(1, 2), Rational((1 - w0) / (2 * w0)));
  const Rational eps = eps0 / 2;
  const auto rho = detail::propagate_factors(family, w, component, g0, eps, std::nullopt);
  std::map<ElementId, Rational> delta;
  for (const auto& [g, r] : rho) delta[g] = r * w(g);
  Witness wit = detail::witness_from_delta(w, delta, eps, WitnessConstruction::TreePropagation, eps0);
  check_witness(family, w, wit);
  return wit;
}

namespace detail {

/// Rotates/reflects an odd cycle so that its first two vertices lie in block k,
/// the smaller of the two first.
inline std::vector<ElementId> orient_cycle_at_block(const SetFamily& family,
                                                    const std::vector<ElementId>& cycle,
                                                    BlockIndex k) {
  const std::size_t l = cycle.size();
  for (std::size_t i = 0; i < l; ++i) {
    const ElementId a = cycle[i], b = cycle[(i + 1) % l];
    const Block& blk = family.block(k);
    if (!blk.contains(a) || !blk.contains(b)) continue;
    std::vector<ElementId> out;
    if (a < b) {
      for (std::size_t j = 0; j < l; ++j) out.push_back(cycle[(i + j) % l]);
    } else {
      for (std::size_t j = 0; j < l; ++j) out.push_back(cycle[(i + 1 + l - j) % l]);
    }
    return out;
  }
  throw ConditionsViolated("block " + std::to_string(k) + " holds no edge of the cycle");
}

/// A support element of the cycle blocks, other than g0, that the region
/// behind g0 touches through a block other than k1. The perturbations of the
/// cycle and of the region only stay independent when there is none.
inline std::optional<ElementId> region_leak(const SetFamily& family, const WeightFunction& w,
                                            const std::vector<ElementId>& region,
                                            const std::set<ElementId>& g_gamma, ElementId g0,
                                            BlockIndex k1) {
  for (ElementId v : region)
    for (BlockIndex k : family.gamma(v)) {
      if (k == k1) continue;
      for (ElementId u : family.block(k).members)
        if (u != g0 && w(u) > 0 && g_gamma.count(u)) return u;
    }
  return std::nullopt;
}

/// Cycle part of the attachment construction: +d at g0, -d/2 at g1 and
/// +-(-1)^(i-1) d/2 at g_i, i >= 2.
inline void add_cycle_part(std::map<ElementId, Rational>& delta, const std::vector<ElementId>& cyc,
                           ElementId g0, const Rational& d) {
  delta[g0] += d;
  delta[cyc[0]] -= d / 2;
  for (std::size_t i = 2; i <= cyc.size(); ++i)
    delta[cyc[i - 1]] += (i % 2 == 0 ? Rational(-1) : Rational(1)) * d / 2;
}

}  // namespace detail

/// Witness for a support component holding an odd primitive cycle plus an
/// attachment vertex g0 that shares a cycle block with two cycle vertices.
/// The shape of the region hanging off g0 selects sub-case (b), (c) or (d).
inline Witness witness_cycle_attachment(const SetFamily& family, const WeightFunction& w,
                                        const Path& cycle, ElementId attachment) {
  require_in_S(family, w);
  if (family.kappa_max() > 2) throw ConditionsViolated("some element lies in more than two blocks");
  if (!cycle.is_cycle || cycle.vertices.size() % 2 == 0 || !is_primitive(family, cycle))
    throw ConditionsViolated("cycle is not an odd primitive cycle");
  if (!detail::subset_of_support(w, cycle.vertices))
    throw ConditionsViolated("cycle is not inside supp w");
  const std::set<ElementId> on_cycle(cycle.vertices.begin(), cycle.vertices.end());
  if (!family.contains(attachment) || w(attachment) == 0 || on_cycle.count(attachment))
    throw ConditionsViolated("attachment is not a support vertex off the cycle");

  // Blocks carrying cycle edges, and the one among them holding g0.
  std::set<BlockIndex> cycle_blocks;
  for (const auto& e : cycle.edges()) {
    const auto& a = family.gamma(e.first);
    const auto& b = family.gamma(e.second);
    for (BlockIndex k : a)
      if (std::binary_search(b.begin(), b.end(), k)) cycle_blocks.insert(k);
  }
  std::optional<BlockIndex> k1;
  for (BlockIndex k : family.gamma(attachment))
    if (cycle_blocks.count(k)) {
      if (k1) throw EvenCyclePresent("attachment lies in two cycle blocks");
      k1 = k;
    }
  if (!k1) throw ConditionsViolated("attachment shares no block with the cycle");

  const AssociatedGraph support = detail::support_graph(family, w);
  const auto comps = connected_components(support);
  std::vector<ElementId> comp;
  for (const auto& c : comps)
    if (std::binary_search(c.begin(), c.end(), attachment)) comp = c;
  if (!on_cycle.empty() && !std::binary_search(comp.begin(), comp.end(), cycle.vertices.front()))
    throw ConditionsViolated("cycle and attachment lie in different components");
  const AssociatedGraph comp_graph = induced_subgraph(support, comp);
  if (!find_primitive_cycles(comp_graph, family, Parity::Even, 1).empty())
    throw EvenCyclePresent("support component contains an even primitive cycle");

  // Elements of the blocks along the cycle.
  std::set<ElementId> g_gamma;
  for (BlockIndex k : cycle_blocks)
    g_gamma.insert(family.block(k).members.begin(), family.block(k).members.end());

  // Region reached from g0 without entering the cycle blocks.
  std::vector<ElementId> region{attachment};
  {
    std::set<ElementId> seen{attachment};
    std::deque<ElementId> queue{attachment};
    while (!queue.empty()) {
      ElementId v = queue.front();
      queue.pop_front();
      for (ElementId u : comp_graph.neighbors(v)) {
        if (g_gamma.count(u) || !seen.insert(u).second) continue;
        region.push_back(u);
        queue.push_back(u);
      }
    }
    std::sort(region.begin(), region.end());
  }
  if (auto leak = detail::region_leak(family, w, region, g_gamma, attachment, *k1))
    throw ConditionsViolated("region beyond the attachment re-enters the cycle blocks at element " +
                             std::to_string(*leak));

  const std::vector<ElementId> cyc = detail::orient_cycle_at_block(family, cycle.vertices, *k1);
  std::vector<ElementId> cycle_and_g0 = cyc;
  cycle_and_g0.push_back(attachment);
  const Rational eps1 = slack_of(w, cycle_and_g0);
  std::map<ElementId, Rational> delta;

  if (region.size() == 1) {
    const Rational eps = eps1 / 2;
    detail::add_cycle_part(delta, cyc, attachment, eps);
    Witness wit = detail::witness_from_delta(w, delta, eps, WitnessConstruction::CycleAttachmentB, eps1);
    check_witness(family, w, wit);
    return wit;
  }

  const AssociatedGraph region_graph = induced_subgraph(support, region);
  const auto region_cycles = find_primitive_cycles(region_graph, family, Parity::Any);
  if (region_cycles.empty()) {
    const Rational w0 = w(attachment);
    const Rational eps0 = std::min(Rational(1, 2), Rational((1 - w0) / (2 * w0)));
    const Rational bound = std::min(eps0, eps1);
    const Rational eps = bound / 2;
    const auto rho = detail::propagate_factors(family, w, region, attachment, eps, k1);
    for (const auto& [g, r] : rho)
      if (g != attachment) delta[g] += r * w(g);
    // g0 moves by eps * w(g0) as in the propagation; the cycle absorbs it in halves.
    detail::add_cycle_part(delta, cyc, attachment, eps * w0);
    Witness wit = detail::witness_from_delta(w, delta, eps, WitnessConstruction::CycleAttachmentC, bound);
    check_witness(family, w, wit);
    return wit;
  }

  // Second odd cycle inside the region, joined to g0 by a shortest path.
  const Path* far = nullptr;
  for (const Path& c : region_cycles)
    if (c.vertices.size() % 2 == 1) {
      far = &c;
      break;
    }
  if (!far) throw EvenCyclePresent("region beyond the attachment holds an even primitive cycle");
  const std::set<ElementId> on_far(far->vertices.begin(), far->vertices.end());
  if (on_far.count(attachment))
    throw InternalPropertyViolation("attachment lies on the far cycle");

  std::map<ElementId, std::size_t> dist{{attachment, 0}};
  {
    std::deque<ElementId> queue{attachment};
    while (!queue.empty()) {
      ElementId v = queue.front();
      queue.pop_front();
      for (ElementId u : region_graph.neighbors(v))
        if (dist.emplace(u, dist[v] + 1).second) queue.push_back(u);
    }
  }
  ElementId target = far->vertices.front();
  for (ElementId g : far->vertices)
    if (dist.at(g) < dist.at(target) || (dist.at(g) == dist.at(target) && g < target)) target = g;
  const auto joining = shortest_primitive_path(region_graph, family, attachment, target);
  if (!joining) throw InternalPropertyViolation("far cycle unreachable from the attachment");
  // joining = (g0, g''_1, ..., g''_m, g'_1)
  const std::vector<ElementId>& jp = joining->vertices;
  const std::size_t m = jp.size() - 2;
  const ElementId last = jp[jp.size() - 2];  // g''_m, or g0 when m = 0

  // Orient the far cycle as (g'_1, g'_2, ..., g'_n) with g''_m, g'_1, g'_2 in one block.
  std::vector<ElementId> fc;
  {
    const auto& fv = far->vertices;
    const std::size_t n = fv.size();
    const std::size_t at = static_cast<std::size_t>(std::find(fv.begin(), fv.end(), target) - fv.begin());
    const ElementId next = fv[(at + 1) % n];
    bool forward = false;
    for (BlockIndex k : family.gamma(last))
      if (family.block(k).contains(target) && family.block(k).contains(next)) forward = true;
    for (std::size_t j = 0; j < n; ++j)
      fc.push_back(forward ? fv[(at + j) % n] : fv[(at + n - j) % n]);
  }

  std::vector<ElementId> all = cycle_and_g0;
  all.insert(all.end(), fc.begin(), fc.end());
  all.insert(all.end(), jp.begin() + 1, jp.end() - 1);
  const Rational eps2 = slack_of(w, all);
  const Rational eps = eps2 / 2;
  detail::add_cycle_part(delta, cyc, attachment, eps);
  for (std::size_t i = 1; i <= m; ++i) delta[jp[i]] += (i % 2 == 0 ? eps : Rational(-eps));
  const Rational half = eps / 2;
  delta[fc[0]] += ((m + 1) % 2 == 0 ? half : Rational(-half));
  for (std::size_t i = 2; i <= fc.size(); ++i)
    delta[fc[i - 1]] += ((m + i - 1) % 2 == 0 ? half : Rational(-half));
  Witness wit = detail::witness_from_delta(w, delta, eps, WitnessConstruction::CycleAttachmentD, eps2);
  check_witness(family, w, wit);
  return wit;
}

/// Moves w along a nonzero solution d of the homogeneous block-sum equations
/// restricted to a support component, with eps half the largest step keeping
/// w +- eps d inside [0, 1]. Used when no attachment region is sealed off
/// from its cycle, e.g. two odd cycles sharing a block.
inline Witness witness_null_direction(const SetFamily& family, const WeightFunction& w,
                                      std::vector<ElementId> component) {
  require_in_S(family, w);
  std::sort(component.begin(), component.end());
  component.erase(std::unique(component.begin(), component.end()), component.end());
  for (ElementId g : component)
    if (!family.contains(g)) throw UnknownElement("element " + std::to_string(g) + " is unknown");
  if (!detail::subset_of_support(w, component))
    throw ConditionsViolated("component is not inside supp w");
  const std::set<ElementId> in_comp(component.begin(), component.end());
  std::set<BlockIndex> touched;
  for (ElementId g : component)
    for (BlockIndex k : family.gamma(g)) touched.insert(k);
  linalg::Matrix rows;
  for (BlockIndex k : touched) {
    linalg::Vector row(component.size(), 0);
    for (ElementId h : family.block(k).members) {
      if (w(h) > 0 && !in_comp.count(h))
        throw ConditionsViolated("component is not a whole support component");
      const auto it = std::lower_bound(component.begin(), component.end(), h);
      if (it != component.end() && *it == h) row[static_cast<std::size_t>(it - component.begin())] = 1;
    }
    rows.push_back(std::move(row));
  }
  const auto kernel = linalg::nullspace(rows, component.size());
  if (kernel.empty()) throw ConditionsViolated("block sums pin w on the component");
  const linalg::Vector& d = kernel.front();
  std::optional<Rational> step;
  for (std::size_t i = 0; i < component.size(); ++i) {
    if (d[i] == 0) continue;
    const Rational x = w(component[i]);
    const Rational s = std::min(x, Rational(1 - x)) / abs(d[i]);
    if (!step || s < *step) step = s;
  }
  const Rational eps = *step / 2;
  std::map<ElementId, Rational> delta;
  for (std::size_t i = 0; i < component.size(); ++i)
    if (d[i] != 0) delta[component[i]] = eps * d[i];
  Witness wit = detail::witness_from_delta(w, delta, eps, WitnessConstruction::NullDirection, *step);
  check_witness(family, w, wit);
  return wit;
}

namespace detail {

/// The component as an ordered cycle when it is exactly one odd primitive cycle.
inline std::optional<Path> as_odd_primitive_cycle(const SetFamily& family, const AssociatedGraph& sub) {
  const auto& v = sub.vertices();
  if (v.size() < 3 || v.size() % 2 == 0) return std::nullopt;
  for (ElementId g : v)
    if (sub.neighbors(g).size() != 2) return std::nullopt;
  Path p{{v.front()}, true};
  ElementId prev = v.front(), cur = sub.neighbors(v.front()).front();
  while (cur != v.front()) {
    p.vertices.push_back(cur);
    const auto& nb = sub.neighbors(cur);
    const ElementId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (p.vertices.size() != v.size() || !is_primitive(family, p)) return std::nullopt;
  return p;
}

inline Witness witness_for_component(const SetFamily& family, const WeightFunction& w,
                                     const AssociatedGraph& support,
                                     const std::vector<ElementId>& comp) {
  if (auto pair = check_a1(family, comp))
    return witness_two_coloring(family, w, {pair->first, pair->second});
  const AssociatedGraph sub = induced_subgraph(support, comp);
  const auto even = find_primitive_cycles(sub, family, Parity::Even, 1);
  if (!even.empty()) return witness_two_coloring(family, w, even.front().vertices);
  const auto odd = find_primitive_cycles(sub, family, Parity::Odd);
  if (odd.empty()) return witness_tree_propagation(family, w, comp);

  // The first (cycle, attachment) pair, in canonical order, whose region is
  // sealed off from the cycle blocks. A region can leak back into them without
  // any even primitive cycle; when every pair leaks, fall back to the kernel.
  for (const Path& cycle : odd) {
    const std::set<ElementId> on_cycle(cycle.vertices.begin(), cycle.vertices.end());
    std::set<ElementId> attachments;
    for (const auto& e : cycle.edges())
      for (BlockIndex k : family.gamma(e.first)) {
        if (!family.block(k).contains(e.second)) continue;
        for (ElementId g : family.block(k).members)
          if (w(g) > 0 && !on_cycle.count(g)) attachments.insert(g);
      }
    for (ElementId g0 : attachments) {
      try {
        return witness_cycle_attachment(family, w, cycle, g0);
      } catch (const ConditionsViolated&) {
      }
    }
  }
  return witness_null_direction(family, w, comp);
}

}  // namespace detail

/// Decides whether w is an extreme point of S for a family with kappa <= 2:
/// every support component must be an isolated vertex with value one or an odd
/// primitive cycle with value one half. Otherwise returns a witness built for
/// the first offending component.
inline ExtremalityVerdict classify_extreme(const SetFamily& family, const WeightFunction& w) {
  require_in_S(family, w);
  ExtremalityVerdict v;
  if (family.kappa_max() > 2) {
    v.kind = ExtremalityVerdict::Kind::Unsupported;
    v.reason = "kappa > 2: some element lies in " + std::to_string(family.kappa_max()) + " blocks";
    return v;
  }
  for (const auto& b : family.blocks())
    if (std::none_of(b.members.begin(), b.members.end(), [&](ElementId g) { return w(g) > 0; }))
      throw InternalPropertyViolation("block " + std::to_string(b.index) + " misses supp w");

  const AssociatedGraph support = detail::support_graph(family, w);
  for (const auto& comp : connected_components(support)) {
    if (comp.size() == 1 && w(comp.front()) == 1) {
      v.components.push_back({comp, ComponentKind::IsolatedVertexOne});
      continue;
    }
    if (auto cyc = detail::as_odd_primitive_cycle(family, induced_subgraph(support, comp))) {
      if (std::all_of(comp.begin(), comp.end(), [&](ElementId g) { return w(g) == Rational(1, 2); })) {
        v.components.push_back({cyc->vertices, ComponentKind::OddPrimitiveCycleHalf});
        continue;
      }
    }
    v.kind = ExtremalityVerdict::Kind::NotExtreme;
    v.components.clear();
    v.failing_component = comp;
    v.witness = detail::witness_for_component(family, w, support, comp);
    return v;
  }
  v.kind = ExtremalityVerdict::Kind::Extreme;
  return v;
}

}  // namespace gds
