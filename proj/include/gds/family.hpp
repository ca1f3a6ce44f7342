#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gds/error.hpp"
#include "gds/rational.hpp"

namespace gds {

/// Label of a ground element g.
using ElementId = std::uint64_t;
/// One-based index k of a block Omega_k.
using BlockIndex = std::size_t;

struct Block {
  BlockIndex index = 0;
  std::vector<ElementId> members;  // sorted, distinct

  bool contains(ElementId g) const {
    return std::binary_search(members.begin(), members.end(), g);
  }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Ground set plus indexed blocks with a precomputed membership index Gamma(g).
///
/// Instances are immutable once built; every element lies in at least one
/// block and no two blocks coincide.
class SetFamily {
 public:
  SetFamily() = default;

  const std::vector<ElementId>& ground() const { return ground_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t element_count() const { return ground_.size(); }

  const Block& block(BlockIndex k) const {
    if (k == 0 || k > blocks_.size())
      throw InvalidInput("no block with index " + std::to_string(k));
    return blocks_[k - 1];
  }

  bool contains(ElementId g) const {
    return std::binary_search(ground_.begin(), ground_.end(), g);
  }

  /// Position of g in ground(); throws UnknownElement.
  std::size_t position(ElementId g) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), g);
    if (it == ground_.end() || *it != g)
      throw UnknownElement("element " + std::to_string(g) + " is not in the ground set");
    return static_cast<std::size_t>(it - ground_.begin());
  }

  /// Gamma(g): indices of the blocks containing g, ascending.
  const std::vector<BlockIndex>& gamma(ElementId g) const { return membership_[position(g)]; }

  std::size_t multiplicity(ElementId g) const { return gamma(g).size(); }

  std::size_t kappa_max() const {
    std::size_t best = 0;
    for (const auto& m : membership_) best = std::max(best, m.size());
    return best;
  }

  friend SetFamily build_family(const std::vector<std::vector<ElementId>>& blocks);

 private:
  std::vector<ElementId> ground_;
  std::vector<Block> blocks_;
  std::vector<std::vector<BlockIndex>> membership_;  // parallel to ground_
};

/// Builds a family from member lists; block k is the k-th list (one-based).
inline SetFamily build_family(const std::vector<std::vector<ElementId>>& blocks) {
  SetFamily family;
  std::set<std::vector<ElementId>> seen;
  std::set<ElementId> ground;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<ElementId> members = blocks[i];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw EmptyBlock("block " + std::to_string(i + 1) + " is empty");
    if (!seen.insert(members).second)
      throw DuplicateBlock("block " + std::to_string(i + 1) + " duplicates an earlier block");
    ground.insert(members.begin(), members.end());
    family.blocks_.push_back(Block{i + 1, std::move(members)});
  }
  family.ground_.assign(ground.begin(), ground.end());
  family.membership_.assign(family.ground_.size(), {});
  for (const auto& b : family.blocks_)
    for (ElementId g : b.members) family.membership_[family.position(g)].push_back(b.index);
  return family;
}

/// Member lists of a family, in block order.
inline std::vector<std::vector<ElementId>> member_lists(const SetFamily& family) {
  std::vector<std::vector<ElementId>> out;
  out.reserve(family.block_count());
  for (const auto& b : family.blocks()) out.push_back(b.members);
  return out;
}

inline std::size_t multiplicity(const SetFamily& family, ElementId g) {
  return family.multiplicity(g);
}

inline std::size_t kappa_max(const SetFamily& family) { return family.kappa_max(); }

// ---------------------------------------------------------------------------
// Weight functions

/// Nonnegative (for members of S or S0) rational function on the ground set.
/// Absent labels are zero; zero values are never stored.
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(std::initializer_list<std::pair<const ElementId, Rational>> init) {
    for (const auto& [g, v] : init) set(g, v);
  }

  Rational operator()(ElementId g) const {
    auto it = values_.find(g);
    return it == values_.end() ? Rational(0) : it->second;
  }

  void set(ElementId g, const Rational& v) {
    if (v == 0)
      values_.erase(g);
    else
      values_[g] = v;
  }

  void add(ElementId g, const Rational& v) { set(g, (*this)(g) + v); }

  const std::map<ElementId, Rational>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  std::vector<ElementId> support() const {
    std::vector<ElementId> out;
    out.reserve(values_.size());
    for (const auto& [g, v] : values_) out.push_back(g);
    return out;
  }

  Rational total() const {
    Rational s = 0;
    for (const auto& [g, v] : values_) s += v;
    return s;
  }

  bool is_binary() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const auto& kv) { return kv.second == 1; });
  }

  WeightFunction& operator+=(const WeightFunction& o) {
    for (const auto& [g, v] : o.values_) add(g, v);
    return *this;
  }
  WeightFunction& operator-=(const WeightFunction& o) {
    for (const auto& [g, v] : o.values_) add(g, -v);
    return *this;
  }
  WeightFunction& operator*=(const Rational& c) {
    if (c == 0) {
      values_.clear();
      return *this;
    }
    for (auto& [g, v] : values_) v *= c;
    return *this;
  }

  friend WeightFunction operator+(WeightFunction a, const WeightFunction& b) { return a += b; }
  friend WeightFunction operator-(WeightFunction a, const WeightFunction& b) { return a -= b; }
  friend WeightFunction operator*(const Rational& c, WeightFunction a) { return a *= c; }
  friend bool operator==(const WeightFunction& a, const WeightFunction& b) {
    return a.values_ == b.values_;
  }
  friend bool operator<(const WeightFunction& a, const WeightFunction& b) {
    return a.values_ < b.values_;
  }

 private:
  std::map<ElementId, Rational> values_;
};

/// The function equal to value on every ground element.
inline WeightFunction constant_weight(const SetFamily& family, const Rational& value) {
  WeightFunction w;
  for (ElementId g : family.ground()) w.set(g, value);
  return w;
}

/// Restriction of w to the given labels.
inline WeightFunction restrict_to(const WeightFunction& w, const std::vector<ElementId>& labels) {
  WeightFunction out;
  for (ElementId g : labels) out.set(g, w(g));
  return out;
}

inline Rational block_sum(const Block& block, const WeightFunction& w) {
  Rational s = 0;
  for (ElementId g : block.members) s += w(g);
  return s;
}

inline void require_known_support(const SetFamily& family, const WeightFunction& w) {
  for (const auto& [g, v] : w.values())
    if (!family.contains(g))
      throw UnknownElement("weight given for element " + std::to_string(g) +
                           " outside the ground set");
}

// ---------------------------------------------------------------------------
// Membership in S, S0, P, P0

struct MembershipReport {
  std::map<BlockIndex, Rational> block_sums;
  bool in_S = false;
  bool in_S0 = false;
  bool in_P = false;
  bool in_P0 = false;
};

inline MembershipReport classify_membership(const SetFamily& family, const WeightFunction& w) {
  require_known_support(family, w);
  MembershipReport report;
  bool all_one = true;
  bool all_at_most_one = true;
  for (const auto& b : family.blocks()) {
    Rational s = block_sum(b, w);
    all_one = all_one && s == 1;
    all_at_most_one = all_at_most_one && s <= 1;
    report.block_sums.emplace(b.index, std::move(s));
  }
  const bool nonnegative = std::all_of(w.values().begin(), w.values().end(),
                                       [](const auto& kv) { return kv.second > 0; });
  if (!nonnegative) return report;
  report.in_S = all_one;
  report.in_S0 = all_at_most_one;
  report.in_P = report.in_S && w.is_binary();
  report.in_P0 = report.in_S0 && w.is_binary();
  return report;
}

inline bool in_S(const SetFamily& family, const WeightFunction& w) {
  return classify_membership(family, w).in_S;
}

/// Throws NotInS naming the first offending element or block.
inline void require_in_S(const SetFamily& family, const WeightFunction& w) {
  require_known_support(family, w);
  for (const auto& [g, v] : w.values())
    if (v < 0)
      throw NotInS("element " + std::to_string(g) + " has negative weight " + to_string(v));
  for (const auto& b : family.blocks()) {
    const Rational s = block_sum(b, w);
    if (s != 1) throw NotInS("block " + std::to_string(b.index) + " sums to " + to_string(s));
  }
}

// ---------------------------------------------------------------------------
// Counting identity and the emptiness criterion

struct CountingIdentity {
  Integer lhs;     // #Gamma
  Rational rhs;    // sum_g kappa(g) w(g)
  Rational bound;  // kappa(Omega) * sum_g w(g), always >= rhs
};

inline CountingIdentity counting_identity(const SetFamily& family, const WeightFunction& w) {
  require_in_S(family, w);
  CountingIdentity out{Integer(family.block_count()), 0, 0};
  for (const auto& [g, v] : w.values()) out.rhs += Rational(family.multiplicity(g)) * v;
  out.bound = Rational(family.kappa_max()) * w.total();
  return out;
}

enum class EmptinessVerdict { CertifiedEmpty, Inconclusive };

/// Certifies S(Gamma) empty when #Gamma > m * kappa(Omega) for a cover by m blocks.
inline EmptinessVerdict emptiness_test(const SetFamily& family, const std::set<BlockIndex>& cover) {
  std::set<ElementId> covered;
  for (BlockIndex k : cover) {
    const auto& b = family.block(k);
    covered.insert(b.members.begin(), b.members.end());
  }
  if (covered.size() != family.element_count())
    throw NotACover("the given blocks do not cover the ground set");
  const std::size_t m = cover.size();
  return family.block_count() > m * family.kappa_max() ? EmptinessVerdict::CertifiedEmpty
                                                       : EmptinessVerdict::Inconclusive;
}

// ---------------------------------------------------------------------------
// Normalization under the no-containment condition

struct NormalizationLog {
  std::vector<BlockIndex> removed_blocks;      // indices in the input family
  std::vector<ElementId> removed_elements;     // forced to zero, dropped from Omega
  std::vector<BlockIndex> emptied_blocks;      // input indices of blocks left without members
  bool infeasible = false;                     // true iff some block was emptied: S(Gamma) is empty
  std::vector<BlockIndex> surviving_blocks;    // input index of each output block, in order
};

struct Normalized {
  SetFamily family;
  NormalizationLog log;
};

/// Repeatedly removes a block that strictly contains another block, together
/// with the elements of the difference (they vanish on every w in S).
///
/// Removed elements are dropped from every block. If that empties a block,
/// S(Gamma) was empty; the emptied block is dropped and log.infeasible is set.
inline Normalized normalize(const SetFamily& family) {
  struct Live {
    BlockIndex original;
    std::vector<ElementId> members;
  };
  std::vector<Live> live;
  for (const auto& b : family.blocks()) live.push_back({b.index, b.members});

  NormalizationLog log;
  std::set<ElementId> removed;
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < live.size() && !changed; ++i) {
      for (std::size_t j = 0; j < live.size() && !changed; ++j) {
        if (i == j) continue;
        const auto& small = live[i].members;
        const auto& big = live[j].members;
        if (small.size() >= big.size()) continue;
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) continue;
        std::vector<ElementId> diff;
        std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                            std::back_inserter(diff));
        log.removed_blocks.push_back(live[j].original);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
        removed.insert(diff.begin(), diff.end());
        for (auto it = live.begin(); it != live.end();) {
          std::vector<ElementId> kept;
          std::set_difference(it->members.begin(), it->members.end(), diff.begin(), diff.end(),
                              std::back_inserter(kept));
          it->members = std::move(kept);
          if (it->members.empty()) {
            log.emptied_blocks.push_back(it->original);
            log.infeasible = true;
            it = live.erase(it);
          } else {
            ++it;
          }
        }
        changed = true;
      }
    }
    // Removing elements can make two surviving blocks equal; keep the first.
    for (std::size_t i = 0; i < live.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < live.size() && !changed; ++j)
        if (live[i].members == live[j].members) {
          log.removed_blocks.push_back(live[j].original);
          live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
    if (!changed) break;
  }
  log.removed_elements.assign(removed.begin(), removed.end());
  std::sort(log.removed_blocks.begin(), log.removed_blocks.end());
  std::vector<std::vector<ElementId>> lists;
  for (const auto& l : live) {
    lists.push_back(l.members);
    log.surviving_blocks.push_back(l.original);
  }
  return {build_family(lists), std::move(log)};
}

// ---------------------------------------------------------------------------
// Saturation: S(Gamma, Gamma_1) as S(Gamma') by one slack element per inequality block

struct Saturation {
  SetFamily family;                          // Gamma'
  std::map<BlockIndex, ElementId> slack_of;  // block index -> slack label g'_k

  /// w' with w'(g'_k) = 1 - sum over Omega_k of w.
  WeightFunction extend(const SetFamily& original, const WeightFunction& w) const {
    WeightFunction out = w;
    for (const auto& [k, slack] : slack_of) out.set(slack, 1 - block_sum(original.block(k), w));
    return out;
  }

  /// Drops the slack coordinates.
  WeightFunction truncate(const WeightFunction& w_prime) const {
    WeightFunction out = w_prime;
    for (const auto& [k, slack] : slack_of) out.set(slack, 0);
    return out;
  }
};

inline Saturation saturate(const SetFamily& family, const std::set<BlockIndex>& equality_indices) {
  for (BlockIndex k : equality_indices) (void)family.block(k);
  ElementId next = family.ground().empty() ? 0 : family.ground().back() + 1;
  Saturation out;
  auto lists = member_lists(family);
  for (const auto& b : family.blocks()) {
    if (equality_indices.count(b.index)) continue;
    lists[b.index - 1].push_back(next);
    out.slack_of.emplace(b.index, next);
    ++next;
  }
  out.family = build_family(lists);
  return out;
}

// ---------------------------------------------------------------------------
// Structural conditions

/// First pair g < h (lexicographic) in subset with Gamma(g) == Gamma(h), if any.
inline std::optional<std::pair<ElementId, ElementId>> check_a1(
    const SetFamily& family, const std::vector<ElementId>& subset) {
  std::vector<ElementId> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (family.gamma(sorted[i]) == family.gamma(sorted[j]))
        return std::make_pair(sorted[i], sorted[j]);
  return std::nullopt;
}

struct A2Report {
  std::size_t m = 0;
  bool a21 = false;                          // Omega is the union of the first m blocks
  std::vector<BlockIndex> a22_violations;    // k > m with Omega_k inside the union of the others
  bool ok = false;                           // a21 or no a22 violation
  bool horizon_limited = false;              // checked on a finite prefix only
  std::size_t horizon = 0;
};

inline A2Report check_a2(const SetFamily& family, std::size_t m) {
  A2Report r;
  r.m = m;
  std::set<ElementId> head;
  for (BlockIndex k = 1; k <= std::min(m, family.block_count()); ++k) {
    const auto& b = family.block(k);
    head.insert(b.members.begin(), b.members.end());
  }
  r.a21 = head.size() == family.element_count();
  for (BlockIndex k = m + 1; k <= family.block_count(); ++k) {
    const auto& b = family.block(k);
    const bool covered = std::all_of(b.members.begin(), b.members.end(), [&](ElementId g) {
      return family.multiplicity(g) >= 2;  // some other block contains g
    });
    if (covered) r.a22_violations.push_back(k);
  }
  r.ok = r.a21 || r.a22_violations.empty();
  return r;
}

}  // namespace gds
