#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gds/error.hpp"
#include "gds/family.hpp"
#include "gds/linalg.hpp"
#include "gds/oracle.hpp"

namespace gds {

// ---------------------------------------------------------------------------
// Generators: lazily described, possibly infinite families

/// A family given by rules rather than by storage. Every element lies in
/// finitely many blocks; blocks themselves may be infinite.
class FamilyGenerator {
 public:
  virtual ~FamilyGenerator() = default;

  virtual std::string name() const = 0;
  /// Number of blocks, or nothing for an infinite family.
  virtual std::optional<std::size_t> block_count() const = 0;
  /// Up to `limit` members of block k in increasing order.
  virtual std::vector<ElementId> block_members(BlockIndex k, std::size_t limit) const = 0;
  virtual bool block_is_finite(BlockIndex k) const = 0;
  /// Indices of the blocks containing g, ascending; empty for unknown labels.
  virtual std::vector<BlockIndex> gamma_of(ElementId g) const = 0;
  /// Index m beyond which no block lies in a finite union of other blocks,
  /// when the generator guarantees it.
  virtual std::optional<std::size_t> claimed_a22_from() const { return std::nullopt; }

  bool has_block(BlockIndex k) const {
    const auto n = block_count();
    return k >= 1 && (!n || k <= *n);
  }
};

/// Omega_k = {k, k + 1}.
class PathGenerator : public FamilyGenerator {
 public:
  std::string name() const override { return "path"; }
  std::optional<std::size_t> block_count() const override { return std::nullopt; }
  std::vector<ElementId> block_members(BlockIndex k, std::size_t limit) const override {
    std::vector<ElementId> out{k, k + 1};
    if (out.size() > limit) out.resize(limit);
    return out;
  }
  bool block_is_finite(BlockIndex) const override { return true; }
  std::vector<BlockIndex> gamma_of(ElementId g) const override {
    if (g == 0) return {};
    if (g == 1) return {1};
    return {g - 1, g};
  }
};

/// Pairwise disjoint blocks with #Omega_k = k: block k holds the labels
/// k(k-1)/2 + 1, ..., k(k+1)/2. Optionally cut off after `last` blocks.
class DisjointGrowingGenerator : public FamilyGenerator {
 public:
  explicit DisjointGrowingGenerator(std::optional<std::size_t> last = std::nullopt) : last_(last) {}

  std::string name() const override { return "disjoint-growing"; }
  std::optional<std::size_t> block_count() const override { return last_; }
  std::vector<ElementId> block_members(BlockIndex k, std::size_t limit) const override {
    std::vector<ElementId> out;
    if (!has_block(k)) return out;
    const ElementId first = k * (k - 1) / 2 + 1;
    for (ElementId g = first; g < first + k && out.size() < limit; ++g) out.push_back(g);
    return out;
  }
  bool block_is_finite(BlockIndex) const override { return true; }
  std::vector<BlockIndex> gamma_of(ElementId g) const override {
    if (g == 0) return {};
    BlockIndex k = 1;
    while (k * (k + 1) / 2 < g) ++k;
    if (!has_block(k)) return {};
    return {k};
  }
  std::optional<std::size_t> claimed_a22_from() const override { return 0; }

 private:
  std::optional<std::size_t> last_;
};

/// Rows and columns of an infinite matrix: block 2i - 1 is row i, block 2j is
/// column j. Cell (i, j) has label s(s + 1)/2 + j with s = i + j - 2.
class GridGenerator : public FamilyGenerator {
 public:
  static ElementId cell(std::uint64_t i, std::uint64_t j) {
    const std::uint64_t s = i + j - 2;
    return s * (s + 1) / 2 + j;
  }
  static std::pair<std::uint64_t, std::uint64_t> coordinates(ElementId g) {
    std::uint64_t s = 0;
    while ((s + 1) * (s + 2) / 2 < g) ++s;
    const std::uint64_t j = g - s * (s + 1) / 2;
    return {s + 2 - j, j};
  }

  std::string name() const override { return "grid"; }
  std::optional<std::size_t> block_count() const override { return std::nullopt; }
  std::vector<ElementId> block_members(BlockIndex k, std::size_t limit) const override {
    std::vector<ElementId> out;
    if (k == 0) return out;
    const std::uint64_t line = (k + 1) / 2;
    for (std::uint64_t t = 1; out.size() < limit; ++t)
      out.push_back(k % 2 == 1 ? cell(line, t) : cell(t, line));
    return out;
  }
  bool block_is_finite(BlockIndex) const override { return false; }
  std::vector<BlockIndex> gamma_of(ElementId g) const override {
    if (g == 0) return {};
    const auto [i, j] = coordinates(g);
    const BlockIndex row = 2 * i - 1, col = 2 * j;
    return row < col ? std::vector<BlockIndex>{row, col} : std::vector<BlockIndex>{col, row};
  }
  std::optional<std::size_t> claimed_a22_from() const override { return 0; }
};

/// A stored finite family seen through the generator interface.
class FiniteFamilyGenerator : public FamilyGenerator {
 public:
  explicit FiniteFamilyGenerator(SetFamily family) : family_(std::move(family)) {}

  std::string name() const override { return "finite"; }
  std::optional<std::size_t> block_count() const override { return family_.block_count(); }
  std::vector<ElementId> block_members(BlockIndex k, std::size_t limit) const override {
    if (!has_block(k)) return {};
    auto out = family_.block(k).members;
    if (out.size() > limit) out.resize(limit);
    return out;
  }
  bool block_is_finite(BlockIndex) const override { return true; }
  std::vector<BlockIndex> gamma_of(ElementId g) const override {
    if (!family_.contains(g)) return {};
    return family_.gamma(g);
  }
  const SetFamily& family() const { return family_; }

 private:
  SetFamily family_;
};

/// Built-in generator by name: "path", "disjoint-growing" or "grid".
inline std::unique_ptr<FamilyGenerator> make_generator(const std::string& name) {
  if (name == "path") return std::make_unique<PathGenerator>();
  if (name == "disjoint-growing") return std::make_unique<DisjointGrowingGenerator>();
  if (name == "grid") return std::make_unique<GridGenerator>();
  throw InvalidInput("unknown generator '" + name + "'");
}

/// Per-block sums of w, for every block meeting supp w.
inline std::map<BlockIndex, Rational> block_sums(const FamilyGenerator& gen, const WeightFunction& w) {
  std::map<BlockIndex, Rational> out;
  for (const auto& [g, v] : w.values()) {
    const auto gamma = gen.gamma_of(g);
    if (gamma.empty()) throw UnknownElement("element " + std::to_string(g) + " is in no block");
    for (BlockIndex k : gamma) out[k] += v;
  }
  return out;
}

/// Condition (a2) on the prefix of blocks up to `horizon`. A finite block
/// counts as covered when each member lies in another block of index at most
/// `horizon`; infinite blocks are never counted as covered.
inline A2Report check_a2(const FamilyGenerator& gen, std::size_t m, std::size_t horizon) {
  A2Report r;
  r.m = m;
  r.horizon = horizon;
  r.horizon_limited = !gen.block_count().has_value();
  const std::size_t last = gen.block_count() ? std::min(*gen.block_count(), horizon) : horizon;
  if (gen.block_count() && m >= *gen.block_count()) {
    r.a21 = true;
  }
  for (BlockIndex k = m + 1; k <= last; ++k) {
    if (!gen.block_is_finite(k)) continue;
    const auto members = gen.block_members(k, static_cast<std::size_t>(-1));
    const bool covered = std::all_of(members.begin(), members.end(), [&](ElementId g) {
      for (BlockIndex i : gen.gamma_of(g))
        if (i != k && i <= horizon) return true;
      return false;
    });
    if (covered) r.a22_violations.push_back(k);
  }
  r.ok = r.a21 || r.a22_violations.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Truncations

/// A function on G_n, the union of the first n blocks.
struct Truncation {
  std::size_t n = 0;
  WeightFunction w;
};

inline bool in_prefix(const FamilyGenerator& gen, ElementId g, std::size_t n) {
  const auto gamma = gen.gamma_of(g);
  return !gamma.empty() && gamma.front() <= n;
}

/// Throws InvalidTruncation unless w >= 0 lives on G_n, sums to one on every
/// block k <= n and to at most one on every other block.
inline void validate_truncation(const FamilyGenerator& gen, const Truncation& t) {
  if (t.n == 0) throw InvalidTruncation("n must be positive");
  if (gen.block_count() && t.n > *gen.block_count())
    throw InvalidTruncation("n exceeds the number of blocks");
  for (const auto& [g, v] : t.w.values()) {
    if (v < 0) throw InvalidTruncation("element " + std::to_string(g) + " has negative weight");
    if (!in_prefix(gen, g, t.n))
      throw InvalidTruncation("element " + std::to_string(g) + " lies outside G_" + std::to_string(t.n));
  }
  const auto sums = block_sums(gen, t.w);
  for (BlockIndex k = 1; k <= t.n; ++k) {
    auto it = sums.find(k);
    const Rational s = it == sums.end() ? Rational(0) : it->second;
    if (s != 1) throw InvalidTruncation("block " + std::to_string(k) + " sums to " + to_string(s));
  }
  for (const auto& [k, s] : sums)
    if (s > 1) throw InvalidTruncation("block " + std::to_string(k) + " sums to " + to_string(s));
}

/// delta_j = sum of w over Omega_j for j = n + 1, ..., horizon. Past the last
/// block meeting supp w the sequence is zero; this is asserted.
inline std::vector<Rational> tail_sums(const FamilyGenerator& gen, const Truncation& t,
                                       std::size_t horizon) {
  validate_truncation(gen, t);
  const auto sums = block_sums(gen, t.w);
  const BlockIndex last = sums.empty() ? 0 : sums.rbegin()->first;
  std::vector<Rational> out;
  for (BlockIndex j = t.n + 1; j <= horizon; ++j) {
    auto it = sums.find(j);
    out.push_back(it == sums.end() ? Rational(0) : it->second);
    if (j > last && out.back() != 0)
      throw InternalPropertyViolation("tail sum nonzero past the last touched block");
  }
  return out;
}

// ---------------------------------------------------------------------------
// The extension operator

struct ChosenElement {
  ElementId element;
  BlockIndex block;
  Rational value;
};

struct ExtensionResult {
  WeightFunction extended;
  std::vector<ChosenElement> chosen;        // g_1, g_2, ... in order
  std::set<BlockIndex> saturated;           // blocks whose sum is pinned to one
  WeightFunction chi_prime;
  WeightFunction chi_double_prime;
  std::size_t horizon = 0;
  bool complete = false;                    // every block up to the horizon was saturated
};

struct ExtensionOptions {
  std::size_t member_cap = std::size_t{1} << 14;  // largest prefix of an infinite block scanned
  bool throw_on_exhaustion = true;
};

namespace detail {

inline bool intersects(const std::vector<BlockIndex>& a, const std::vector<BlockIndex>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

}  // namespace detail

/// Extends a truncation to every block up to `horizon` by visiting unsaturated
/// blocks in index order and giving one fresh element the missing mass.
///
/// For block k with current sum d, the chosen element is the least label g in
/// Omega_k such that no block containing g is already saturated, every other
/// block of g has index above j0 = max{i != k : sum_i >= d} (sum_i > 0 when
/// d = 0), and no other block of g contains an earlier chosen element or was
/// saturated by the truncation itself.
inline ExtensionResult extend_tn(const FamilyGenerator& gen, const Truncation& t, std::size_t horizon,
                                 const ExtensionOptions& opt = {}) {
  validate_truncation(gen, t);
  if (horizon <= t.n) throw InvalidTruncation("horizon must exceed n");
  if (gen.block_count()) horizon = std::min(horizon, *gen.block_count());

  ExtensionResult r;
  r.extended = t.w;
  r.horizon = horizon;
  std::map<BlockIndex, Rational> delta = block_sums(gen, t.w);
  std::set<BlockIndex> blocked;  // blocks no later choice may touch outside its own block
  for (const auto& [k, s] : delta)
    if (s == 1) r.saturated.insert(k);
  for (BlockIndex k = 1; k <= t.n; ++k) r.saturated.insert(k);
  blocked = r.saturated;

  auto sum_of = [&](BlockIndex k) {
    auto it = delta.find(k);
    return it == delta.end() ? Rational(0) : it->second;
  };

  r.complete = true;
  for (BlockIndex k = 1; k <= horizon; ++k) {
    if (r.saturated.count(k)) continue;
    const Rational dk = sum_of(k);
    BlockIndex j0 = 0;
    for (const auto& [i, s] : delta)
      if (i != k && (dk > 0 ? s >= dk : s > 0)) j0 = std::max(j0, i);

    std::optional<ElementId> pick;
    std::vector<BlockIndex> pick_gamma;
    for (std::size_t limit = 16;; limit *= 2) {
      const auto members = gen.block_members(k, limit);
      for (ElementId g : members) {
        auto gamma = gen.gamma_of(g);
        if (!std::binary_search(gamma.begin(), gamma.end(), k))
          throw GeneratorInconsistent("element " + std::to_string(g) + " listed in block " +
                                      std::to_string(k) + " but not mapped back to it");
        const bool fresh = std::none_of(gamma.begin(), gamma.end(),
                                        [&](BlockIndex i) { return r.saturated.count(i) > 0; });
        if (!fresh) continue;
        const bool clear = std::all_of(gamma.begin(), gamma.end(), [&](BlockIndex i) {
          return i == k || (i > j0 && !blocked.count(i));
        });
        if (!clear) continue;
        pick = g;
        pick_gamma = std::move(gamma);
        break;
      }
      if (pick || members.size() < limit || limit >= opt.member_cap) break;
    }
    if (!pick) {
      if (dk == 1) {
        // Already full and nothing fresh left: the block needs no new element.
        r.saturated.insert(k);
        blocked.insert(k);
        continue;
      }
      if (opt.throw_on_exhaustion)
        throw HorizonExhausted("no eligible element in block " + std::to_string(k));
      r.complete = false;
      break;
    }
    const Rational value = 1 - dk;
    r.extended.set(*pick, value);
    for (BlockIndex i : pick_gamma) delta[i] += value;
    r.saturated.insert(k);
    blocked.insert(pick_gamma.begin(), pick_gamma.end());
    r.chosen.push_back({*pick, k, value});
  }

  // Alternating split: a chosen element touching no earlier one starts in chi',
  // otherwise it goes opposite to the earlier element it touches.
  std::vector<std::vector<BlockIndex>> gammas;
  std::vector<int> side;
  for (const auto& c : r.chosen) {
    gammas.push_back(gen.gamma_of(c.element));
    int s = 1;
    for (std::size_t i = 0; i + 1 < gammas.size(); ++i)
      if (detail::intersects(gammas.back(), gammas[i])) {
        s = -side[i];
        break;
      }
    side.push_back(s);
    (s > 0 ? r.chi_prime : r.chi_double_prime).set(c.element, 1);
  }
  return r;
}

namespace detail {

/// Full column rank of the tight-block incidence on supp w.
inline bool tight_rank_vertex(const FamilyGenerator& gen, const WeightFunction& w,
                              const std::set<BlockIndex>& tight) {
  const auto support = w.support();
  std::map<BlockIndex, std::size_t> row_of;
  for (ElementId g : support)
    for (BlockIndex k : gen.gamma_of(g))
      if (tight.count(k)) row_of.emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, idx] : row_of) idx = r++;
  linalg::Matrix a(row_of.size(), linalg::Vector(support.size(), 0));
  for (std::size_t j = 0; j < support.size(); ++j)
    for (BlockIndex k : gen.gamma_of(support[j]))
      if (auto it = row_of.find(k); it != row_of.end()) a[it->second][j] = 1;
  return linalg::rank(a) == support.size();
}

}  // namespace detail

/// True iff t.w is a vertex of the truncated polytope: blocks up to n are
/// equalities, the others are inequalities.
inline bool truncation_is_vertex(const FamilyGenerator& gen, const Truncation& t) {
  validate_truncation(gen, t);
  std::set<BlockIndex> tight;
  for (const auto& [k, s] : block_sums(gen, t.w))
    if (k <= t.n || s == 1) tight.insert(k);
  return detail::tight_rank_vertex(gen, t.w, tight);
}

struct ExtensionReport {
  std::vector<std::string> violations;
  bool shadow_checked = false;  // the truncation was a vertex, so the extension was tested too

  bool ok() const { return violations.empty(); }
};

/// Re-derives the step, sum, contact and domination properties of an
/// extension from scratch, plus the vertex shadow when t.w is a vertex.
inline ExtensionReport verify_extension(const ExtensionResult& r, const FamilyGenerator& gen,
                                        const Truncation& t) {
  ExtensionReport rep;
  auto fail = [&](std::string s) { rep.violations.push_back(std::move(s)); };

  // Each step changes exactly one new element, inside its block.
  std::set<ElementId> chosen;
  for (const auto& c : r.chosen) {
    if (!chosen.insert(c.element).second)
      fail("(c2) element " + std::to_string(c.element) + " chosen twice");
    const auto gamma = gen.gamma_of(c.element);
    if (!std::binary_search(gamma.begin(), gamma.end(), c.block))
      fail("(c2) element " + std::to_string(c.element) + " is not in block " + std::to_string(c.block));
    if (t.w(c.element) != 0)
      fail("(c2) element " + std::to_string(c.element) + " already carried weight");
    if (r.extended(c.element) != c.value)
      fail("(c2) element " + std::to_string(c.element) + " does not hold its recorded value");
  }
  const WeightFunction diff = r.extended - t.w;
  for (const auto& [g, v] : diff.values())
    if (!chosen.count(g)) fail("(c2) element " + std::to_string(g) + " changed without being chosen");

  // Block sums: one on saturated blocks, at most one everywhere.
  std::map<BlockIndex, Rational> sums;
  try {
    sums = block_sums(gen, r.extended);
  } catch (const Error& e) {
    fail(std::string("(c3) ") + e.what());
  }
  for (const auto& [k, s] : sums)
    if (s > 1) fail("(c3) block " + std::to_string(k) + " sums to " + to_string(s));
  for (BlockIndex k : r.saturated) {
    auto it = sums.find(k);
    const Rational s = it == sums.end() ? Rational(0) : it->second;
    if (s != 1) fail("(c3) saturated block " + std::to_string(k) + " sums to " + to_string(s));
  }
  if (r.complete)
    for (BlockIndex k = 1; k <= r.horizon; ++k)
      if (!r.saturated.count(k)) fail("(c1) block " + std::to_string(k) + " never saturated");

  // Each chosen element shares a block with at most one earlier one.
  std::vector<std::vector<BlockIndex>> gammas;
  for (const auto& c : r.chosen) gammas.push_back(gen.gamma_of(c.element));
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    std::size_t contacts = 0;
    for (std::size_t i = 0; i < j; ++i) contacts += detail::intersects(gammas[j], gammas[i]);
    if (contacts > 1)
      fail("(c4) element " + std::to_string(r.chosen[j].element) + " touches " +
           std::to_string(contacts) + " earlier elements");
  }

  // 0 <= extended - T0 w <= chi' + chi'', both indicators in P0.
  const WeightFunction cover = r.chi_prime + r.chi_double_prime;
  for (const auto& [g, v] : diff.values())
    if (v < 0 || v > cover(g)) fail("domination fails at element " + std::to_string(g));
  for (const auto& [g, v] : cover.values())
    if (v != 1) fail("chi' and chi'' overlap at element " + std::to_string(g));
  for (const WeightFunction* chi : {&r.chi_prime, &r.chi_double_prime}) {
    if (!chi->is_binary()) fail("indicator is not 0/1-valued");
    std::map<BlockIndex, Rational> s;
    try {
      s = block_sums(gen, *chi);
    } catch (const Error&) {
    }
    for (const auto& [k, v] : s)
      if (v > 1) fail("indicator meets block " + std::to_string(k) + " twice");
  }

  if (rep.violations.empty() && truncation_is_vertex(gen, t)) {
    rep.shadow_checked = true;
    std::set<BlockIndex> tight;
    for (const auto& [k, s] : sums)
      if (s == 1) tight.insert(k);
    if (!detail::tight_rank_vertex(gen, r.extended, tight))
      fail("extension of a vertex is not a vertex on its support blocks");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Approximation of a full solution by extended vertices

struct ApproximationReport {
  std::size_t n = 0;
  std::size_t horizon = 0;
  Decomposition truncated;                         // w_full restricted to G_n, in truncated vertices
  std::vector<ExtensionResult> extensions;         // one per term
  WeightFunction combined;                         // sum of coefficient * extension
  std::map<BlockIndex, Rational> block_discrepancy;      // k <= horizon: sum |w_full - combined|
  std::map<ElementId, Rational> element_discrepancy;     // on G_n, nonzero entries only

  Rational max_block_discrepancy(BlockIndex up_to) const {
    Rational best = 0;
    for (const auto& [k, d] : block_discrepancy)
      if (k <= up_to) best = std::max(best, d);
    return best;
  }
  Rational max_element_discrepancy() const {
    Rational best = 0;
    for (const auto& [g, d] : element_discrepancy) best = std::max(best, d);
    return best;
  }
};

/// Restricts w_full to G_n, writes the restriction as a convex combination of
/// vertices of the truncated polytope, extends each vertex, and measures how
/// far the recombined extension is from w_full on blocks up to the horizon.
inline ApproximationReport approximate_by_extremes(const FamilyGenerator& gen,
                                                   const WeightFunction& w_full, std::size_t n,
                                                   std::size_t horizon,
                                                   const ExtensionOptions& opt = {}) {
  const auto full_sums = block_sums(gen, w_full);
  for (BlockIndex k = 1; k <= horizon; ++k) {
    auto it = full_sums.find(k);
    const Rational s = it == full_sums.end() ? Rational(0) : it->second;
    if (s != 1) throw NotInS("block " + std::to_string(k) + " sums to " + to_string(s));
  }
  for (const auto& [g, v] : w_full.values())
    if (v < 0) throw NotInS("element " + std::to_string(g) + " has negative weight " + to_string(v));

  ApproximationReport rep;
  rep.n = n;
  rep.horizon = horizon;
  Truncation t{n, {}};
  for (const auto& [g, v] : w_full.values())
    if (in_prefix(gen, g, n)) t.w.set(g, v);
  validate_truncation(gen, t);

  // Finite face of the truncated polytope carrying t.w: its support, the
  // blocks it meets (equalities up to n, inequalities beyond), one slack per inequality.
  std::map<std::vector<ElementId>, bool> rows;  // members -> equality
  std::map<BlockIndex, std::vector<ElementId>> members;
  for (ElementId g : t.w.support())
    for (BlockIndex k : gen.gamma_of(g)) members[k].push_back(g);
  for (const auto& [k, m] : members) {
    auto [it, fresh] = rows.emplace(m, k <= n);
    if (!fresh) it->second = it->second || k <= n;
  }
  std::vector<std::vector<ElementId>> lists;
  std::set<BlockIndex> equality;
  for (const auto& [m, eq] : rows) {
    lists.push_back(m);
    if (eq) equality.insert(lists.size());
  }
  const SetFamily face = build_family(lists);
  const Saturation sat = saturate(face, equality);
  const WeightFunction w_sat = sat.extend(face, t.w);
  rep.truncated = decompose(sat.family, w_sat);
  for (auto& term : rep.truncated.terms) term.vertex = sat.truncate(term.vertex);

  for (const auto& term : rep.truncated.terms) {
    rep.extensions.push_back(extend_tn(gen, Truncation{n, term.vertex}, horizon, opt));
    rep.combined += term.coefficient * rep.extensions.back().extended;
  }

  const WeightFunction gap = w_full - rep.combined;
  for (BlockIndex k = 1; k <= horizon; ++k) rep.block_discrepancy[k] = 0;
  for (const auto& [g, v] : gap.values()) {
    for (BlockIndex k : gen.gamma_of(g))
      if (k <= horizon) rep.block_discrepancy[k] += abs(v);
    if (in_prefix(gen, g, n)) rep.element_discrepancy[g] = abs(v);
  }
  return rep;
}

/// A random 0/1 truncation: one element set to one in each of the first n
/// blocks not yet covered, never two in a block.
inline WeightFunction random_binary_truncation(const FamilyGenerator& gen, std::size_t n,
                                               std::mt19937_64& rng, std::size_t candidates = 0) {
  if (candidates == 0) candidates = 2 * n + 4;
  for (int attempt = 0; attempt < 64; ++attempt) {
    WeightFunction w;
    std::set<BlockIndex> full;
    bool ok = true;
    for (BlockIndex k = 1; k <= n && ok; ++k) {
      if (full.count(k)) continue;
      auto members = gen.block_members(k, candidates);
      for (std::size_t i = 0; i + 1 < members.size(); ++i)
        std::swap(members[i], members[i + uniform_below(rng, members.size() - i)]);
      ok = false;
      for (ElementId g : members) {
        const auto gamma = gen.gamma_of(g);
        if (std::any_of(gamma.begin(), gamma.end(), [&](BlockIndex i) { return full.count(i) > 0; }))
          continue;
        w.set(g, 1);
        full.insert(gamma.begin(), gamma.end());
        ok = true;
        break;
      }
    }
    if (ok) return w;
  }
  throw InternalPropertyViolation("no 0/1 truncation found for generator " + gen.name());
}

}  // namespace gds
