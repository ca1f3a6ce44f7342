#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gds/error.hpp"
#include "gds/extremality.hpp"
#include "gds/family.hpp"
#include "gds/linalg.hpp"

namespace gds {

struct VertexSet {
  std::vector<WeightFunction> vertices;  // sorted, distinct
  bool infeasible = false;               // S is empty
};

struct DecompositionTerm {
  Rational coefficient;
  WeightFunction vertex;
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;  // sorted by vertex

  WeightFunction combined() const {
    WeightFunction out;
    for (const auto& t : terms) out += t.coefficient * t.vertex;
    return out;
  }
};

struct OracleOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;  // candidate supports
  unsigned jobs = 1;
  std::size_t max_depth = 256;                    // face-walk recursion
};

namespace detail {

/// Block-by-element incidence matrix restricted to `columns`.
inline linalg::Matrix incidence(const SetFamily& family, const std::vector<ElementId>& columns) {
  linalg::Matrix a(family.block_count(), linalg::Vector(columns.size(), 0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (BlockIndex k : family.gamma(columns[j])) a[k - 1][j] = 1;
  return a;
}

inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(r + 0.5L);
}

}  // namespace detail

/// Every vertex of {w >= 0 : all block sums equal 1}, found by trying each
/// candidate support of size at most the constraint rank and keeping the
/// strictly positive unique solutions.
inline VertexSet enumerate_vertices(const SetFamily& family, const OracleOptions& opt = {}) {
  const auto& ground = family.ground();
  const std::size_t n = ground.size();
  const linalg::Matrix full = detail::incidence(family, ground);
  const std::size_t r = linalg::rank(full);

  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= r; ++k) {
    total += detail::binomial_capped(n, k, opt.budget);
    if (total > opt.budget)
      throw InstanceTooLarge("more than " + std::to_string(opt.budget) + " candidate supports");
  }

  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<std::vector<WeightFunction>> found(jobs);

  auto worker = [&](unsigned id) {
    std::uint64_t counter = 0;
    std::vector<std::size_t> chosen;
    std::vector<int> hits(family.block_count() + 1, 0);
    std::size_t uncovered = family.block_count();

    auto try_support = [&]() {
      if (counter++ % jobs != id) return;
      if (uncovered != 0) return;
      std::vector<ElementId> cols;
      for (std::size_t i : chosen) cols.push_back(ground[i]);
      const linalg::Matrix a = detail::incidence(family, cols);
      const auto x = linalg::solve_unique(a, linalg::Vector(family.block_count(), 1), cols.size());
      if (!x) return;
      WeightFunction w;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if ((*x)[j] <= 0) return;
        w.set(cols[j], (*x)[j]);
      }
      found[id].push_back(std::move(w));
    };

    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      try_support();
      if (chosen.size() == r) return;
      for (std::size_t i = start; i < n; ++i) {
        chosen.push_back(i);
        for (BlockIndex k : family.gamma(ground[i]))
          if (hits[k]++ == 0) --uncovered;
        rec(i + 1);
        for (BlockIndex k : family.gamma(ground[i]))
          if (--hits[k] == 0) ++uncovered;
        chosen.pop_back();
      }
    };
    rec(0);
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& t : threads) t.join();
  }

  VertexSet out;
  for (auto& part : found)
    for (auto& w : part) out.vertices.push_back(std::move(w));
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  out.infeasible = out.vertices.empty();
  return out;
}

/// True iff the block constraints restricted to supp w have full column rank.
inline bool is_vertex(const SetFamily& family, const WeightFunction& w) {
  require_in_S(family, w);
  const auto support = w.support();
  return linalg::rank(detail::incidence(family, support)) == support.size();
}

namespace detail {

/// A nonzero direction d with supp d inside supp w along which w can move
/// both ways inside S. Uses the witness constructions when kappa <= 2.
inline WeightFunction feasible_direction(const SetFamily& family, const WeightFunction& w) {
  if (family.kappa_max() <= 2) {
    const auto verdict = classify_extreme(family, w);
    if (verdict.witness) return verdict.witness->w_plus - w;
    throw InternalPropertyViolation("classifier and rank test disagree on a non-vertex");
  }
  const auto support = w.support();
  const auto basis = linalg::nullspace(incidence(family, support), support.size());
  if (basis.empty()) throw InternalPropertyViolation("non-vertex without a kernel direction");
  WeightFunction d;
  for (std::size_t j = 0; j < support.size(); ++j) d.set(support[j], basis.front()[j]);
  return d;
}

/// Largest t with w + t d >= 0.
inline Rational max_step(const WeightFunction& w, const WeightFunction& d) {
  std::optional<Rational> t;
  for (const auto& [g, dv] : d.values())
    if (dv < 0) {
      const Rational s = w(g) / -dv;
      if (!t || s < *t) t = s;
    }
  if (!t) throw InternalPropertyViolation("unbounded direction inside S");
  return *t;
}

/// Removes terms until the vertices are affinely independent.
inline void caratheodory_reduce(std::vector<DecompositionTerm>& terms) {
  for (;;) {
    if (terms.size() <= 1) return;
    std::set<ElementId> coords;
    for (const auto& t : terms)
      for (const auto& [g, v] : t.vertex.values()) coords.insert(g);
    // Columns are the terms; rows are coordinates plus the all-ones row.
    linalg::Matrix m;
    for (ElementId g : coords) {
      linalg::Vector row;
      for (const auto& t : terms) row.push_back(t.vertex(g));
      m.push_back(std::move(row));
    }
    m.push_back(linalg::Vector(terms.size(), 1));
    const auto kernel = linalg::nullspace(m, terms.size());
    if (kernel.empty()) return;
    const auto& mu = kernel.front();
    std::optional<Rational> theta;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (mu[i] > 0) {
        const Rational s = terms[i].coefficient / mu[i];
        if (!theta || s < *theta) theta = s;
      }
    std::vector<DecompositionTerm> next;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Rational c = terms[i].coefficient - *theta * mu[i];
      if (c == 0) continue;
      if (c < 0) throw InternalPropertyViolation("reduction produced a negative coefficient");
      next.push_back({std::move(c), terms[i].vertex});
    }
    terms = std::move(next);
  }
}

}  // namespace detail

/// Writes w as a convex combination of vertices by walking to both ends of a
/// feasible direction and recursing, then prunes to an affinely independent set.
inline Decomposition decompose(const SetFamily& family, const WeightFunction& w,
                               const OracleOptions& opt = {}) {
  require_in_S(family, w);
  std::map<WeightFunction, std::vector<DecompositionTerm>> memo;
  std::function<std::vector<DecompositionTerm>(const WeightFunction&, std::size_t)> walk =
      [&](const WeightFunction& p, std::size_t depth) -> std::vector<DecompositionTerm> {
    if (depth > opt.max_depth)
      throw DepthExceeded("face walk deeper than " + std::to_string(opt.max_depth));
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::vector<DecompositionTerm> out;
    if (is_vertex(family, p)) {
      out.push_back({1, p});
    } else {
      const WeightFunction d = detail::feasible_direction(family, p);
      const Rational t_plus = detail::max_step(p, d);
      const Rational t_minus = detail::max_step(p, Rational(-1) * d);
      const WeightFunction p1 = p + t_plus * d;
      const WeightFunction p2 = p - t_minus * d;
      const Rational sum = t_plus + t_minus;
      std::map<WeightFunction, Rational> merged;
      for (auto& t : walk(p1, depth + 1)) merged[t.vertex] += t_minus / sum * t.coefficient;
      for (auto& t : walk(p2, depth + 1)) merged[t.vertex] += t_plus / sum * t.coefficient;
      for (auto& [v, c] : merged) out.push_back({c, v});
    }
    memo.emplace(p, out);
    return out;
  };

  Decomposition d;
  d.terms = walk(w, 0);
  detail::caratheodory_reduce(d.terms);
  std::sort(d.terms.begin(), d.terms.end(),
            [](const DecompositionTerm& a, const DecompositionTerm& b) { return a.vertex < b.vertex; });

  Rational total = 0;
  for (const auto& t : d.terms) {
    if (t.coefficient <= 0) throw InternalPropertyViolation("non-positive coefficient");
    total += t.coefficient;
  }
  if (total != 1 || d.combined() != w)
    throw InternalPropertyViolation("decomposition does not reconstruct its input");
  return d;
}

struct CrossValidationReport {
  std::size_t vertex_count = 0;
  std::size_t vertices_confirmed = 0;
  std::size_t samples = 0;
  std::size_t samples_confirmed = 0;
  std::vector<std::string> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

/// Random strict convex combination of `count` distinct vertices, with
/// positive integer weights in [1, 16] normalized to sum one.
inline WeightFunction random_mixture(const std::vector<WeightFunction>& vertices, std::size_t count,
                                     std::mt19937_64& rng);

/// Checks the classifier against the oracle: every enumerated vertex must be
/// Extreme; random strict mixtures must be NotExtreme with a sound witness.
inline CrossValidationReport cross_validate(const SetFamily& family, std::size_t samples,
                                            std::uint64_t seed, const OracleOptions& opt = {}) {
  if (family.kappa_max() > 2)
    throw ConditionsViolated("cross-validation needs every element in at most two blocks");
  CrossValidationReport rep;
  const VertexSet vs = enumerate_vertices(family, opt);
  rep.vertex_count = vs.vertices.size();
  for (const auto& v : vs.vertices) {
    if (classify_extreme(family, v).extreme())
      ++rep.vertices_confirmed;
    else
      rep.discrepancies.push_back("vertex not classified Extreme");
  }
  if (vs.vertices.size() < 2) return rep;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t count = 2 + static_cast<std::size_t>(rng() % (vs.vertices.size() - 1));
    const WeightFunction p = random_mixture(vs.vertices, count, rng);
    ++rep.samples;
    try {
      const auto verdict = classify_extreme(family, p);
      if (verdict.kind != ExtremalityVerdict::Kind::NotExtreme || !verdict.witness) {
        rep.discrepancies.push_back("mixture classified " + to_string(verdict.kind));
        continue;
      }
      check_witness(family, p, *verdict.witness);
      if (is_vertex(family, p)) {
        rep.discrepancies.push_back("mixture passes the rank test");
        continue;
      }
      ++rep.samples_confirmed;
    } catch (const Error& e) {
      rep.discrepancies.push_back(e.name() + ": " + e.what());
    }
  }
  return rep;
}

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps results identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

inline WeightFunction random_mixture(const std::vector<WeightFunction>& vertices, std::size_t count,
                                     std::mt19937_64& rng) {
  count = std::min(count, vertices.size());
  std::vector<std::size_t> idx(vertices.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < count; ++i)
    std::swap(idx[i], idx[i + uniform_below(rng, idx.size() - i)]);
  std::vector<Rational> weights;
  Rational total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    weights.emplace_back(1 + uniform_below(rng, 16));
    total += weights.back();
  }
  WeightFunction out;
  for (std::size_t i = 0; i < count; ++i) out += (weights[i] / total) * vertices[idx[i]];
  return out;
}

/// max over blocks of the sum of |w|.
inline Rational sup_block_norm(const SetFamily& family, const WeightFunction& w) {
  Rational best = 0;
  for (const auto& b : family.blocks()) {
    Rational s = 0;
    for (ElementId g : b.members) s += abs(w(g));
    best = std::max(best, s);
  }
  return best;
}

/// max over blocks of the number of elements where w is nonzero.
inline std::size_t support_width(const SetFamily& family, const WeightFunction& w) {
  std::size_t best = 0;
  for (const auto& b : family.blocks()) {
    std::size_t n = 0;
    for (ElementId g : b.members) n += w(g) != 0;
    best = std::max(best, n);
  }
  return best;
}

}  // namespace gds
