#pragma once

// Independent reference computations used by the tests. Everything here works
// straight from the member lists of the blocks and avoids the library's graph,
// oracle and witness code.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gds/family.hpp"
#include "gds/rational.hpp"

namespace oracle {

using gds::BlockIndex;
using gds::ElementId;
using gds::Rational;
using gds::SetFamily;
using gds::WeightFunction;

inline bool together(const SetFamily& f, ElementId a, ElementId b) {
  for (const auto& blk : f.blocks())
    if (std::binary_search(blk.members.begin(), blk.members.end(), a) &&
        std::binary_search(blk.members.begin(), blk.members.end(), b))
      return true;
  return false;
}

inline std::size_t most_in_one_block(const SetFamily& f, const std::vector<ElementId>& vs) {
  std::size_t best = 0;
  for (const auto& blk : f.blocks()) {
    std::size_t n = 0;
    for (ElementId g : vs) n += std::binary_search(blk.members.begin(), blk.members.end(), g) ? 1 : 0;
    best = std::max(best, n);
  }
  return best;
}

inline bool primitive(const SetFamily& f, const std::vector<ElementId>& vs) {
  return most_in_one_block(f, vs) <= 2;
}

/// Rotation/reflection normal form: smallest label first, then the smaller neighbour.
inline std::vector<ElementId> canonical_cycle(std::vector<ElementId> c) {
  const auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

/// Every cycle with distinct vertices (at least three), each listed once.
inline std::set<std::vector<ElementId>> all_cycles(const SetFamily& f) {
  std::set<std::vector<ElementId>> out;
  const auto& ground = f.ground();
  std::vector<ElementId> seq;
  std::set<ElementId> used;
  auto extend = [&](auto&& self) -> void {
    if (seq.size() >= 3 && together(f, seq.back(), seq.front())) out.insert(canonical_cycle(seq));
    for (ElementId g : ground) {
      if (used.count(g) || g < seq.front() || !together(f, seq.back(), g)) continue;
      seq.push_back(g);
      used.insert(g);
      self(self);
      used.erase(g);
      seq.pop_back();
    }
  };
  for (ElementId s : ground) {
    seq = {s};
    used = {s};
    extend(extend);
  }
  return out;
}

/// Every path from a to b with distinct vertices.
inline std::set<std::vector<ElementId>> all_paths(const SetFamily& f, ElementId a, ElementId b) {
  std::set<std::vector<ElementId>> out;
  std::vector<ElementId> seq{a};
  std::set<ElementId> used{a};
  auto extend = [&](auto&& self) -> void {
    if (seq.back() == b) {
      out.insert(seq);
      return;
    }
    for (ElementId g : f.ground()) {
      if (used.count(g) || !together(f, seq.back(), g)) continue;
      seq.push_back(g);
      used.insert(g);
      self(self);
      used.erase(g);
      seq.pop_back();
    }
  };
  extend(extend);
  return out;
}

inline std::set<std::pair<ElementId, ElementId>> cycle_edges(const std::vector<ElementId>& c) {
  std::set<std::pair<ElementId, ElementId>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    ElementId a = c[i], b = c[(i + 1) % c.size()];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

/// Properties (1)-(4) of a peeling of `input` into `pieces`; empty when all hold.
inline std::optional<std::string> peeling_violation(const SetFamily& f, const std::vector<ElementId>& input,
                                                   const std::vector<std::vector<ElementId>>& pieces) {
  std::set<ElementId> vertices;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.size() < 3) return "piece " + std::to_string(i) + " too short";
    if (std::set<ElementId>(p.begin(), p.end()).size() != p.size()) return "piece repeats a vertex";
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!together(f, p[j], p[(j + 1) % p.size()])) return "piece uses a non-edge";
    const bool triangle_in_block = p.size() == 3 && most_in_one_block(f, p) == 3;
    if (!primitive(f, p) && !triangle_in_block) return "property (1) fails";
    vertices.insert(p.begin(), p.end());
  }
  if (vertices != std::set<ElementId>(input.begin(), input.end())) return "property (2) fails";
  auto shared_vertices = [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
    std::size_t n = 0;
    for (ElementId g : a) n += std::count(b.begin(), b.end(), g);
    return n;
  };
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const auto ea = cycle_edges(pieces[i]), eb = cycle_edges(pieces[i + 1]);
    std::size_t shared_edges = 0;
    for (const auto& e : ea) shared_edges += eb.count(e);
    if (shared_vertices(pieces[i], pieces[i + 1]) != 2 || shared_edges != 1) return "property (3) fails";
  }
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 2; j < pieces.size(); ++j)
      if (shared_vertices(pieces[i], pieces[j]) > 1) return "property (4) fails";
  return std::nullopt;
}

/// Whether any chain of cycles on the vertices of `input` has properties (1)-(4).
inline bool some_peeling_exists(const SetFamily& f, const std::vector<ElementId>& input) {
  const std::set<ElementId> target(input.begin(), input.end());
  std::vector<std::vector<ElementId>> pieces;
  for (const auto& c : all_cycles(f)) {
    if (!std::all_of(c.begin(), c.end(), [&](ElementId g) { return target.count(g) > 0; })) continue;
    if (primitive(f, c) || (c.size() == 3 && most_in_one_block(f, c) == 3)) pieces.push_back(c);
  }
  std::vector<std::vector<ElementId>> chain;
  auto grow = [&](auto&& self) -> bool {
    std::set<ElementId> covered;
    for (const auto& p : chain) covered.insert(p.begin(), p.end());
    if (covered == target) return !peeling_violation(f, input, chain);
    for (const auto& p : pieces) {
      if (std::find(chain.begin(), chain.end(), p) != chain.end()) continue;
      chain.push_back(p);
      // Prune as soon as the partial chain breaks (3) or (4).
      bool fine = true;
      if (chain.size() >= 2) {
        const auto& a = chain[chain.size() - 2];
        std::size_t shared = 0;
        for (ElementId g : a) shared += std::count(p.begin(), p.end(), g);
        const auto ea = cycle_edges(a), eb = cycle_edges(p);
        std::size_t se = 0;
        for (const auto& e : ea) se += eb.count(e);
        fine = shared == 2 && se == 1;
        for (std::size_t t = 0; fine && t + 2 < chain.size(); ++t) {
          std::size_t s2 = 0;
          for (ElementId g : chain[t]) s2 += std::count(p.begin(), p.end(), g);
          fine = s2 <= 1;
        }
      }
      if (fine && self(self)) return true;
      chain.pop_back();
    }
    return false;
  };
  return grow(grow);
}

inline bool sums_to_one(const SetFamily& f, const WeightFunction& w) {
  for (const auto& [g, v] : w.values())
    if (v < 0 || !f.contains(g)) return false;
  for (const auto& blk : f.blocks()) {
    Rational s = 0;
    for (ElementId g : blk.members) s += w(g);
    if (s != 1) return false;
  }
  return true;
}

/// A pair (w+, w-) certifies that w is not extreme.
inline bool valid_witness(const SetFamily& f, const WeightFunction& w, const WeightFunction& plus,
                          const WeightFunction& minus) {
  if (!sums_to_one(f, plus) || !sums_to_one(f, minus) || plus == minus) return false;
  for (ElementId g : f.ground())
    if ((plus(g) + minus(g)) / 2 != w(g)) return false;
  return true;
}

/// Rank of a rational matrix by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

/// A point of S is extreme iff the block-incidence columns of its support are independent.
inline bool extreme(const SetFamily& f, const WeightFunction& w) {
  const auto support = w.support();
  std::vector<std::vector<Rational>> m;
  for (const auto& blk : f.blocks()) {
    std::vector<Rational> row;
    for (ElementId g : support)
      row.push_back(std::binary_search(blk.members.begin(), blk.members.end(), g) ? 1 : 0);
    m.push_back(row);
  }
  return rank(m) == support.size();
}

/// All points of S with values in {0, 1/2, 1}. When every element lies in at
/// most two blocks, the vertices of S are among them.
inline std::vector<WeightFunction> half_integral_points(const SetFamily& f) {
  std::vector<WeightFunction> out;
  const auto& ground = f.ground();
  std::vector<int> digits(ground.size(), 0);
  for (;;) {
    WeightFunction w;
    for (std::size_t i = 0; i < ground.size(); ++i) w.set(ground[i], Rational(digits[i], 2));
    if (sums_to_one(f, w)) out.push_back(w);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 2) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return out;
}

/// Vertices by brute force over half-integral points (valid when kappa <= 2).
inline std::set<WeightFunction> vertices_kappa_two(const SetFamily& f) {
  std::set<WeightFunction> out;
  for (const auto& w : half_integral_points(f))
    if (extreme(f, w)) out.insert(w);
  return out;
}

/// All 0/1 points of S.
inline std::set<WeightFunction> binary_points(const SetFamily& f) {
  std::set<WeightFunction> out;
  for (const auto& w : half_integral_points(f))
    if (w.is_binary()) out.insert(w);
  return out;
}

}  // namespace oracle
