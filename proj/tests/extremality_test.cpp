#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gds/gds.hpp"
#include "oracles.hpp"

using namespace gds;

namespace {

const Rational kHalf(1, 2);

WeightFunction weights(std::initializer_list<std::pair<const ElementId, Rational>> init) {
  return WeightFunction(init);
}

/// Largest |a(g) - b(g)| over the given labels.
Rational max_gap(const WeightFunction& a, const WeightFunction& b, const std::vector<ElementId>& labels) {
  Rational best = 0;
  for (ElementId g : labels) best = std::max(best, abs(a(g) - b(g)));
  return best;
}

/// Support components computed from the member lists alone.
std::vector<std::vector<ElementId>> support_components(const SetFamily& f, const WeightFunction& w) {
  const auto support = w.support();
  std::set<ElementId> left(support.begin(), support.end());
  std::vector<std::vector<ElementId>> out;
  while (!left.empty()) {
    std::vector<ElementId> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto it = left.begin(); it != left.end();)
        if (oracle::together(f, comp[i], *it)) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

bool inside(const std::vector<ElementId>& cycle, const std::set<ElementId>& set) {
  return std::all_of(cycle.begin(), cycle.end(), [&](ElementId g) { return set.count(g) > 0; });
}

/// Triangle {1,2,3} of pair blocks with 4 added to the block {1,2}; 4 lies in one block.
SetFamily case_b_family() { return build_family({{1, 2, 4}, {2, 3}, {3, 1}}); }

/// As above with the extra block {4,5}, so a tree hangs off the attachment.
SetFamily case_c_family() { return build_family({{1, 2, 4}, {2, 3}, {3, 1}, {4, 5}}); }

/// Two such triangles whose attachments 4 and 8 are joined by the block {4,8}.
SetFamily dumbbell_family() {
  return build_family({{1, 2, 4}, {2, 3}, {3, 1}, {5, 6, 8}, {6, 7}, {7, 5}, {4, 8}});
}

}  // namespace

TEST(ClassifyExtreme, TriangleAtHalfIsExtreme) {
  const SetFamily f = instances::cycle_family(3);
  const auto v = classify_extreme(f, constant_weight(f, kHalf));
  EXPECT_EQ(v.kind, ExtremalityVerdict::Kind::Extreme);
  ASSERT_EQ(v.components.size(), 1u);
  EXPECT_EQ(v.components[0].kind, ComponentKind::OddPrimitiveCycleHalf);
  EXPECT_EQ(v.components[0].vertices.size(), 3u);
}

TEST(ClassifyExtreme, UniformTwoByTwoIsNotExtreme) {
  const SetFamily f = instances::matrix_family(2, 2);
  const WeightFunction w = constant_weight(f, kHalf);
  const auto v = classify_extreme(f, w);
  ASSERT_EQ(v.kind, ExtremalityVerdict::Kind::NotExtreme);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->construction, WitnessConstruction::TwoColoring);
  EXPECT_TRUE(oracle::valid_witness(f, w, v.witness->w_plus, v.witness->w_minus));
  EXPECT_EQ(v.failing_component, (std::vector<ElementId>{1, 2, 3, 4}));
}

TEST(ClassifyExtreme, OddCycleAndIsolatedVertex) {
  const SetFamily f = instances::triangle_and_pair();
  const WeightFunction w = weights({{1, kHalf}, {2, kHalf}, {3, kHalf}, {4, 1}});
  const auto v = classify_extreme(f, w);
  ASSERT_EQ(v.kind, ExtremalityVerdict::Kind::Extreme);
  ASSERT_EQ(v.components.size(), 2u);
  EXPECT_EQ(v.components[0].kind, ComponentKind::OddPrimitiveCycleHalf);
  EXPECT_EQ(v.components[1].kind, ComponentKind::IsolatedVertexOne);
  EXPECT_EQ(v.components[1].vertices, (std::vector<ElementId>{4}));
}

TEST(ClassifyExtreme, KappaAboveTwoIsUnsupported) {
  const SetFamily f = instances::fan_family(3);
  const auto v = classify_extreme(f, weights({{0, 1}}));
  EXPECT_EQ(v.kind, ExtremalityVerdict::Kind::Unsupported);
  EXPECT_NE(v.reason.find("kappa"), std::string::npos);
}

TEST(ClassifyExtreme, RejectsPointsOutsideS) {
  const SetFamily f = instances::cycle_family(3);
  EXPECT_THROW(classify_extreme(f, constant_weight(f, 1)), NotInS);
  EXPECT_THROW(classify_extreme(f, weights({{1, kHalf}, {2, kHalf}, {3, kHalf}, {9, 1}})), UnknownElement);
}

TEST(ClassifyExtreme, SharedBlocksGiveTwoColoringOnThePair) {
  // 1 and 2 lie in exactly the same blocks.
  const SetFamily f = build_family({{1, 2, 3}, {1, 2, 4}});
  const WeightFunction w = weights({{1, Rational(1, 4)}, {2, Rational(1, 4)}, {3, kHalf}, {4, kHalf}});
  const auto v = classify_extreme(f, w);
  ASSERT_EQ(v.kind, ExtremalityVerdict::Kind::NotExtreme);
  EXPECT_EQ(v.witness->construction, WitnessConstruction::TwoColoring);
  EXPECT_EQ(v.witness->w_plus(3), kHalf);
  EXPECT_EQ(v.witness->w_plus(4), kHalf);
  EXPECT_EQ(v.witness->w_plus(1) + v.witness->w_plus(2), kHalf);
}

TEST(WitnessTwoColoring, TwoByTwoPermutations) {
  const SetFamily f = instances::matrix_family(2, 2);
  const Witness wit = witness_two_coloring(f, constant_weight(f, kHalf), {1, 2, 3, 4});
  EXPECT_EQ(wit.epsilon, kHalf);
  EXPECT_EQ(wit.w_plus, weights({{1, 1}, {2, 0}, {3, 0}, {4, 1}}));
  EXPECT_EQ(wit.w_minus, weights({{1, 0}, {2, 1}, {3, 1}, {4, 0}}));
}

TEST(WitnessTwoColoring, PairWithEqualBlockSets) {
  const SetFamily f = build_family({{1, 2}});
  const Witness wit = witness_two_coloring(f, weights({{1, kHalf}, {2, kHalf}}), {1, 2});
  EXPECT_EQ(wit.epsilon, kHalf);
  EXPECT_EQ(wit.w_plus, weights({{1, 1}, {2, 0}}));
  EXPECT_EQ(wit.w_minus, weights({{1, 0}, {2, 1}}));
}

TEST(WitnessTwoColoring, QuarterSlackMovesByExactlyAQuarter) {
  const SetFamily f = instances::matrix_family(2, 2);
  const Rational q(1, 4);
  const WeightFunction w = weights({{1, q}, {2, 1 - q}, {3, 1 - q}, {4, q}});
  const Witness wit = witness_two_coloring(f, w, {1, 2, 3, 4});
  EXPECT_EQ(wit.epsilon, q);
  for (ElementId g = 1; g <= 4; ++g) {
    EXPECT_EQ(abs(wit.w_plus(g) - w(g)), q);
    EXPECT_EQ(abs(wit.w_minus(g) - w(g)), q);
  }
}

TEST(WitnessTwoColoring, RejectsBadSubgraphs) {
  const SetFamily m2 = instances::matrix_family(2, 2);
  const WeightFunction half = constant_weight(m2, kHalf);
  EXPECT_THROW(witness_two_coloring(m2, half, {1, 2, 3}), ConditionsViolated);
  EXPECT_THROW(witness_two_coloring(m2, half, {}), ConditionsViolated);
  EXPECT_THROW(witness_two_coloring(m2, weights({{1, 1}, {4, 1}}), {1, 2, 3, 4}), ConditionsViolated);
  const SetFamily tri = instances::cycle_family(3);
  EXPECT_THROW(witness_two_coloring(tri, constant_weight(tri, kHalf), {1, 2, 3}), ConditionsViolated);
}

TEST(WitnessTreePropagation, PathOfTwoBlocks) {
  const SetFamily f = build_family({{1, 2}, {2, 3}});
  const Witness wit = witness_tree_propagation(f, constant_weight(f, kHalf), {1, 2, 3});
  EXPECT_EQ(wit.slack, kHalf);
  EXPECT_EQ(wit.epsilon, Rational(1, 4));
  EXPECT_EQ(wit.w_plus, weights({{1, Rational(5, 8)}, {2, Rational(3, 8)}, {3, Rational(5, 8)}}));
  EXPECT_EQ(wit.w_minus, weights({{1, Rational(3, 8)}, {2, Rational(5, 8)}, {3, Rational(3, 8)}}));
}

TEST(WitnessTreePropagation, SingleEdgeFailsTheSharedBlockCondition) {
  // Both ends of a lone pair block lie in the same blocks, so the propagation
  // refuses and the classifier moves mass along the pair instead.
  const SetFamily f = build_family({{1, 2}});
  const WeightFunction w = constant_weight(f, kHalf);
  EXPECT_THROW(witness_tree_propagation(f, w, {1, 2}), ConditionsViolated);
  const auto v = classify_extreme(f, w);
  ASSERT_EQ(v.kind, ExtremalityVerdict::Kind::NotExtreme);
  EXPECT_EQ(v.witness->construction, WitnessConstruction::TwoColoring);
}

TEST(WitnessTreePropagation, OneStepAcrossAnEdge) {
  // The edge {1,2} inside the path {1,2},{2,3}: one step from the root 1.
  const SetFamily f = build_family({{1, 2}, {2, 3}});
  const Witness wit = witness_tree_propagation(f, constant_weight(f, kHalf), {1, 2, 3});
  EXPECT_EQ(wit.w_plus(1), Rational(5, 8));
  EXPECT_EQ(wit.w_plus(2), Rational(3, 8));
  EXPECT_EQ(wit.w_minus(1), Rational(3, 8));
  EXPECT_EQ(wit.w_minus(2), Rational(5, 8));
}

TEST(WitnessTreePropagation, UnevenWeightsKeepSumsExact) {
  const SetFamily f = build_family({{1, 2}, {2, 3}});
  const WeightFunction w = weights({{1, Rational(1, 4)}, {2, Rational(3, 4)}, {3, Rational(1, 4)}});
  const Witness wit = witness_tree_propagation(f, w, {1, 2, 3});
  EXPECT_EQ(wit.slack, kHalf);
  EXPECT_TRUE(oracle::valid_witness(f, w, wit.w_plus, wit.w_minus));
  for (ElementId g = 1; g <= 3; ++g) {
    EXPECT_GE(wit.w_plus(g), 0);
    EXPECT_LE(wit.w_plus(g), 2 * w(g));
  }
}

TEST(WitnessTreePropagation, RejectsCyclesAndPartialComponents) {
  const SetFamily tri = instances::cycle_family(3);
  EXPECT_THROW(witness_tree_propagation(tri, constant_weight(tri, kHalf), {1, 2, 3}), ConditionsViolated);
  const SetFamily path = build_family({{1, 2}, {2, 3}});
  EXPECT_THROW(witness_tree_propagation(path, constant_weight(path, kHalf), {1, 2}), ConditionsViolated);
  EXPECT_THROW(witness_tree_propagation(path, constant_weight(path, kHalf), {1}), ConditionsViolated);
  const SetFamily pair = build_family({{1, 2}});
  EXPECT_THROW(witness_tree_propagation(pair, weights({{1, 1}}), {1, 2}), ConditionsViolated);
}

TEST(WitnessCycleAttachment, CaseB) {
  const SetFamily f = case_b_family();
  const WeightFunction w =
      weights({{1, Rational(2, 5)}, {2, Rational(2, 5)}, {3, Rational(3, 5)}, {4, Rational(1, 5)}});
  const Witness wit = witness_cycle_attachment(f, w, Path{{1, 2, 3}, true}, 4);
  EXPECT_EQ(wit.construction, WitnessConstruction::CycleAttachmentB);
  EXPECT_EQ(wit.slack, Rational(1, 5));
  EXPECT_EQ(wit.epsilon, Rational(1, 10));
  EXPECT_TRUE(oracle::valid_witness(f, w, wit.w_plus, wit.w_minus));
  EXPECT_TRUE(classify_membership(f, wit.w_plus).in_S);
  EXPECT_EQ(abs(wit.w_plus(4) - w(4)), wit.epsilon);
  EXPECT_EQ(max_gap(wit.w_plus, w, {1, 2, 3}), wit.epsilon / 2);
  for (ElementId g : {1, 2, 3}) EXPECT_EQ(abs(wit.w_plus(g) - w(g)), wit.epsilon / 2);

  const auto v = classify_extreme(f, w);
  ASSERT_EQ(v.kind, ExtremalityVerdict::Kind::NotExtreme);
  EXPECT_EQ(v.witness->construction, WitnessConstruction::CycleAttachmentB);
}

TEST(WitnessCycleAttachment, CaseC) {
  const SetFamily f = case_c_family();
  const Rational t(1, 3);
  const WeightFunction w = weights({{1, t}, {2, t}, {3, 2 * t}, {4, t}, {5, 2 * t}});
  const Witness wit = witness_cycle_attachment(f, w, Path{{1, 2, 3}, true}, 4);
  EXPECT_EQ(wit.construction, WitnessConstruction::CycleAttachmentC);
  EXPECT_TRUE(oracle::valid_witness(f, w, wit.w_plus, wit.w_minus));
  EXPECT_EQ(wit.epsilon, wit.slack / 2);
  EXPECT_NE(wit.w_plus(5), w(5));
  EXPECT_EQ(classify_extreme(f, w).witness->construction, WitnessConstruction::CycleAttachmentC);
}

TEST(WitnessCycleAttachment, CaseDDumbbell) {
  const SetFamily f = dumbbell_family();
  const Rational q(1, 4);
  const WeightFunction w = weights(
      {{1, q}, {2, q}, {3, 3 * q}, {4, kHalf}, {5, q}, {6, q}, {7, 3 * q}, {8, kHalf}});
  ASSERT_TRUE(oracle::sums_to_one(f, w));
  const Witness wit = witness_cycle_attachment(f, w, Path{{1, 2, 3}, true}, 4);
  EXPECT_EQ(wit.construction, WitnessConstruction::CycleAttachmentD);
  EXPECT_EQ(wit.epsilon, wit.slack / 2);
  EXPECT_TRUE(oracle::valid_witness(f, w, wit.w_plus, wit.w_minus));
  const auto v = classify_extreme(f, w);
  ASSERT_EQ(v.kind, ExtremalityVerdict::Kind::NotExtreme);
  EXPECT_EQ(v.witness->construction, WitnessConstruction::CycleAttachmentD);
  EXPECT_FALSE(oracle::extreme(f, w));
}

TEST(WitnessCycleAttachment, DumbbellOnlyMovesTheCyclesAndTheJoin) {
  // Element 9 sits in a far-triangle block with value 0 and must stay untouched.
  const SetFamily f = build_family({{1, 2, 4}, {2, 3}, {3, 1}, {5, 6, 8}, {6, 7, 9}, {7, 5}, {4, 8}});
  const Rational q(1, 4);
  const WeightFunction w = weights(
      {{1, q}, {2, q}, {3, 3 * q}, {4, kHalf}, {5, q}, {6, q}, {7, 3 * q}, {8, kHalf}});
  ASSERT_TRUE(oracle::sums_to_one(f, w));
  const Witness wit = witness_cycle_attachment(f, w, Path{{1, 2, 3}, true}, 4);
  EXPECT_TRUE(oracle::valid_witness(f, w, wit.w_plus, wit.w_minus));
  EXPECT_EQ(wit.w_plus(9), 0);
  EXPECT_EQ(wit.w_minus(9), 0);
}

TEST(WitnessCycleAttachment, LeakingRegionIsRefused) {
  // Path 3-5-7 leaves triangle (1,4,2) through {3,5,6} and re-enters block {1,2,3,7}.
  const SetFamily f = build_family({{1, 2, 3, 7}, {1, 4}, {5, 7}, {2, 4}, {3, 5, 6}});
  const WeightFunction w = weights({{1, Rational(1, 3)}, {2, Rational(1, 3)}, {3, Rational(1, 6)},
                                    {4, Rational(2, 3)}, {5, Rational(5, 6)}, {7, Rational(1, 6)}});
  ASSERT_TRUE(oracle::sums_to_one(f, w));
  const AssociatedGraph support = induced_subgraph(build_graph(f), w.support());
  EXPECT_TRUE(find_primitive_cycles(support, f, Parity::Even).empty());
  EXPECT_THROW(witness_cycle_attachment(f, w, Path{{1, 4, 2}, true}, 3), ConditionsViolated);
  EXPECT_THROW(witness_cycle_attachment(f, w, Path{{3, 5, 7}, true}, 1), ConditionsViolated);
}

TEST(WitnessNullDirection, TrianglesSharingABlock) {
  // Every (cycle, attachment) pair leaks, so the classifier uses the kernel.
  const SetFamily f = build_family({{1, 2, 3, 7}, {1, 4}, {5, 7}, {2, 4}, {3, 5, 6}});
  const WeightFunction w = weights({{1, Rational(1, 3)}, {2, Rational(1, 3)}, {3, Rational(1, 6)},
                                    {4, Rational(2, 3)}, {5, Rational(5, 6)}, {7, Rational(1, 6)}});
  const auto v = classify_extreme(f, w);
  ASSERT_EQ(v.kind, ExtremalityVerdict::Kind::NotExtreme);
  EXPECT_EQ(v.witness->construction, WitnessConstruction::NullDirection);
  EXPECT_TRUE(oracle::valid_witness(f, w, v.witness->w_plus, v.witness->w_minus));
  EXPECT_FALSE(oracle::extreme(f, w));

  // With element 6 in the support, 6 is a sealed attachment of (3,5,7).
  const WeightFunction u = weights({{1, Rational(7, 31)}, {2, Rational(7, 31)}, {3, Rational(4, 31)},
                                    {4, Rational(24, 31)}, {5, Rational(18, 31)}, {6, Rational(9, 31)},
                                    {7, Rational(13, 31)}});
  ASSERT_TRUE(oracle::sums_to_one(f, u));
  const auto vu = classify_extreme(f, u);
  ASSERT_EQ(vu.kind, ExtremalityVerdict::Kind::NotExtreme);
  EXPECT_EQ(vu.witness->construction, WitnessConstruction::CycleAttachmentB);
  EXPECT_TRUE(oracle::valid_witness(f, u, vu.witness->w_plus, vu.witness->w_minus));
}

TEST(WitnessNullDirection, RejectsPinnedComponents) {
  const SetFamily tri = instances::cycle_family(3);
  EXPECT_THROW(witness_null_direction(tri, constant_weight(tri, kHalf), {1, 2, 3}), ConditionsViolated);
  const SetFamily path = build_family({{1, 2}, {2, 3}});
  EXPECT_THROW(witness_null_direction(path, constant_weight(path, kHalf), {1, 2}), ConditionsViolated);
  const Witness wit = witness_null_direction(path, constant_weight(path, kHalf), {1, 2, 3});
  EXPECT_TRUE(oracle::valid_witness(path, constant_weight(path, kHalf), wit.w_plus, wit.w_minus));
}

TEST(WitnessCycleAttachment, RejectsBadInputs) {
  const SetFamily f = case_b_family();
  const WeightFunction w =
      weights({{1, Rational(2, 5)}, {2, Rational(2, 5)}, {3, Rational(3, 5)}, {4, Rational(1, 5)}});
  EXPECT_THROW(witness_cycle_attachment(f, w, Path{{1, 2, 3}, true}, 3), ConditionsViolated);
  EXPECT_THROW(witness_cycle_attachment(f, w, Path{{1, 2, 3}, false}, 4), ConditionsViolated);
  EXPECT_THROW(witness_cycle_attachment(f, w, Path{{1, 2, 4}, true}, 3), ConditionsViolated);
  const SetFamily fan = instances::fan_family(3);
  EXPECT_THROW(witness_cycle_attachment(fan, weights({{0, 1}}), Path{{0, 1, 2}, true}, 3),
               ConditionsViolated);
}

namespace {

struct Sample {
  SetFamily family;
  std::vector<WeightFunction> points;
};

/// Random families with kappa <= 2 and every point of S with values in {0, 1/2, 1},
/// plus random mixtures of the vertices.
std::vector<Sample> samples(std::size_t count, std::uint64_t first_seed) {
  std::vector<Sample> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) {
    const std::size_t elements = 3 + seed % 5;
    const std::size_t blocks = 2 + seed % 4;
    SetFamily f;
    try {
      f = gen_random_family(elements, blocks, 2, seed);
    } catch (const InvalidInput&) {
      continue;
    }
    auto points = oracle::half_integral_points(f);
    if (points.empty()) continue;
    const auto vertex_set = oracle::vertices_kappa_two(f);
    const std::vector<WeightFunction> vertices(vertex_set.begin(), vertex_set.end());
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 4 && vertices.size() > 1; ++i)
      points.push_back(random_mixture(vertices, 2 + uniform_below(rng, vertices.size() - 1), rng));
    out.push_back({f, points});
  }
  return out;
}

}  // namespace

TEST(ClassifyExtremeProperty, AgreesWithRankTestAndWitnessesAreValid) {
  std::size_t extreme = 0, not_extreme = 0;
  for (const auto& s : samples(150, 1)) {
    for (const auto& w : s.points) {
      const auto v = classify_extreme(s.family, w);
      ASSERT_NE(v.kind, ExtremalityVerdict::Kind::Unsupported);
      EXPECT_EQ(v.extreme(), oracle::extreme(s.family, w));
      EXPECT_EQ(v.extreme(), is_vertex(s.family, w));
      if (v.extreme()) {
        ++extreme;
        continue;
      }
      ++not_extreme;
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(oracle::valid_witness(s.family, w, v.witness->w_plus, v.witness->w_minus));
      EXPECT_GT(v.witness->epsilon, 0);
    }
  }
  EXPECT_GT(extreme, 100u);
  EXPECT_GT(not_extreme, 100u);
}

TEST(ClassifyExtremeProperty, ExtremeValuesAreHalfIntegral) {
  for (const auto& s : samples(100, 500))
    for (const auto& w : s.points) {
      if (!classify_extreme(s.family, w).extreme()) continue;
      for (const auto& [g, x] : w.values()) EXPECT_TRUE(x == 0 || x == kHalf || x == 1);
    }
}

TEST(ClassifyExtremeProperty, WithoutOddPrimitiveCyclesExtremeMeansBinary) {
  std::size_t families = 0;
  for (const auto& s : samples(200, 900)) {
    bool odd = false;
    for (const auto& c : oracle::all_cycles(s.family))
      odd = odd || (c.size() % 2 == 1 && oracle::primitive(s.family, c));
    if (odd) continue;
    ++families;
    std::set<WeightFunction> classified;
    for (const auto& w : oracle::half_integral_points(s.family))
      if (classify_extreme(s.family, w).extreme()) classified.insert(w);
    EXPECT_EQ(classified, oracle::binary_points(s.family));
  }
  EXPECT_GT(families, 20u);
}

TEST(ClassifyExtremeProperty, ExtremeSupportsHoldNoTwoColourableRegularSubgraph) {
  for (const auto& s : samples(80, 1300)) {
    const auto all = oracle::all_cycles(s.family);
    for (const auto& w : s.points) {
      if (!classify_extreme(s.family, w).extreme()) continue;
      const auto support = w.support();
      for (std::uint32_t mask = 1; mask < (1u << support.size()); ++mask) {
        std::set<ElementId> sub;
        for (std::size_t i = 0; i < support.size(); ++i)
          if (mask >> i & 1u) sub.insert(support[i]);
        bool regular = true;
        for (const auto& blk : s.family.blocks()) {
          std::size_t n = 0;
          for (ElementId g : blk.members) n += sub.count(g);
          regular = regular && (n == 0 || n == 2);
        }
        if (!regular) continue;
        bool odd_cycle = false;
        for (const auto& c : all)
          odd_cycle = odd_cycle || (c.size() % 2 == 1 && inside(c, sub) && oracle::primitive(s.family, c));
        EXPECT_TRUE(odd_cycle) << "extreme point has a two-colourable subgraph meeting blocks in 0 or 2";
      }
    }
  }
}

TEST(ClassifyExtremeProperty, ExtremeComponentsHaveDistinctBlockSetsAndCycles) {
  for (const auto& s : samples(120, 1700)) {
    const auto all = oracle::all_cycles(s.family);
    for (const auto& w : s.points) {
      if (!classify_extreme(s.family, w).extreme()) continue;
      for (const auto& comp : support_components(s.family, w)) {
        for (ElementId a : comp)
          for (ElementId b : comp) {
            if (a >= b) continue;
            bool same = true;
            for (const auto& blk : s.family.blocks())
              same = same && blk.contains(a) == blk.contains(b);
            EXPECT_FALSE(same) << a << " and " << b << " share all blocks";
          }
        if (comp.size() < 2) continue;
        const std::set<ElementId> in(comp.begin(), comp.end());
        bool cycle = false;
        for (const auto& c : all) cycle = cycle || (inside(c, in) && oracle::primitive(s.family, c));
        EXPECT_TRUE(cycle);
      }
    }
  }
}

TEST(ClassifyExtremeProperty, DeterministicOutput) {
  const SetFamily f = dumbbell_family();
  const Rational q(1, 4);
  const WeightFunction w = weights(
      {{1, q}, {2, q}, {3, 3 * q}, {4, kHalf}, {5, q}, {6, q}, {7, 3 * q}, {8, kHalf}});
  const auto a = classify_extreme(f, w);
  const auto b = classify_extreme(f, w);
  EXPECT_EQ(a.witness->w_plus, b.witness->w_plus);
  EXPECT_EQ(a.witness->w_minus, b.witness->w_minus);
}
