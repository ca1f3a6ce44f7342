#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gds/gds.hpp"
#include "gds/io.hpp"

namespace gds::cli {

struct Outcome {
  std::string out;  // the report document (stdout)
  std::string err;  // diagnostics (stderr)
  int code = 0;
};

namespace detail {

using io::Json;

inline std::vector<ElementId> parse_label_list(const std::string& text) {
  std::vector<ElementId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("'" + item + "' is not an element label");
    out.push_back(std::stoull(item));
  }
  return out;
}

inline const WeightFunction& require_weights(const io::Instance& inst) {
  if (!inst.weights) throw InvalidInput("instance has no \"weights\" field");
  require_known_support(inst.family, *inst.weights);
  return *inst.weights;
}

/// One expected-vs-computed line of a demo.
class DemoLog {
 public:
  void check(const std::string& what, const Json& expected, const Json& computed) {
    const bool match = expected == computed;
    ok_ = ok_ && match;
    checks_.push_back(Json{{"check", what}, {"expected", expected}, {"computed", computed}, {"match", match}});
  }
  bool ok() const { return ok_; }
  Json document(const std::string& name) const {
    return Json{{"demo", name}, {"checks", checks_}, {"ok", ok_}};
  }

 private:
  Json checks_ = Json::array();
  bool ok_ = true;
};

inline Json weight_json(const WeightFunction& w) { return io::to_json(w); }

inline void demo_matrix(DemoLog& log, const OracleOptions& opt) {
  // Rows and columns of a 3x3 matrix: the vertices are the 3! permutation matrices.
  const SetFamily f = instances::matrix_family(3, 3);
  const VertexSet vs = enumerate_vertices(f, opt);
  log.check("vertex count", 6, vs.vertices.size());
  std::size_t permutations = 0, extreme = 0;
  for (const auto& v : vs.vertices) {
    permutations += classify_membership(f, v).in_P ? 1 : 0;
    extreme += classify_extreme(f, v).extreme() ? 1 : 0;
  }
  log.check("vertices that are permutation patterns", 6, permutations);
  log.check("vertices classified Extreme", 6, extreme);
  const WeightFunction uniform = constant_weight(f, Rational(1, 3));
  log.check("uniform matrix classified", "NotExtreme", to_string(classify_extreme(f, uniform).kind));
  log.check("uniform matrix decomposition reconstructs", true, decompose(f, uniform, opt).combined() == uniform);
  const auto bip = bipartition(f);
  log.check("rows and columns on opposite sides", Json{{"plus", {1, 2, 3}}, {"minus", {4, 5, 6}}},
            bip ? Json{{"plus", bip->plus}, {"minus", bip->minus}} : Json(nullptr));
  const SetFamily rect = instances::matrix_family(2, 3);
  log.check("2x3 family certified empty", true,
            emptiness_test(rect, {1, 2}) == EmptinessVerdict::CertifiedEmpty);
}

inline void demo_odd_cycle(DemoLog& log, const OracleOptions& opt) {
  for (std::size_t n : {3, 5, 7}) {
    const SetFamily f = instances::cycle_family(n);
    const VertexSet vs = enumerate_vertices(f, opt);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    log.check(tag + "vertex count", 1, vs.vertices.size());
    const WeightFunction half = constant_weight(f, Rational(1, 2));
    log.check(tag + "the vertex", weight_json(half),
              vs.vertices.empty() ? Json(nullptr) : weight_json(vs.vertices.front()));
    log.check(tag + "classification of w = 1/2", "Extreme", to_string(classify_extreme(f, half).kind));
    const auto binary = std::count_if(vs.vertices.begin(), vs.vertices.end(),
                                      [](const WeightFunction& v) { return v.is_binary(); });
    log.check(tag + "0/1 points", 0, binary);
  }
}

inline void demo_fan(DemoLog& log) {
  const SetFamily f3 = instances::fan_family(3);
  const AssociatedGraph g3 = build_graph(f3);
  log.check("m=3: multiplicity of the hub", 3, multiplicity(f3, 0));
  const auto p = shortest_primitive_path(g3, f3, 1, 4);
  log.check("m=3: shortest primitive path 1 -> 4", Json::array({1, 0, 4}),
            p ? Json(p->vertices) : Json(nullptr));
  log.check("m=3: primitive cycles", 0, find_primitive_cycles(g3, f3).size());
  const SetFamily f2 = instances::fan_family(2);
  const AssociatedGraph g2 = build_graph(f2);
  Json paths = Json::array();
  for (const auto& q : enumerate_primitive_paths(g2, f2, 1, 3)) paths.push_back(q.vertices);
  log.check("m=2: primitive paths 1 -> 3", Json::array({Json::array({1, 0, 3}), Json::array({1, 2, 3})}), paths);
  const auto pair = check_a1(f2, {0, 2});
  log.check("m=2: elements 0 and 2 lie in the same blocks", Json::array({0, 2}),
            pair ? Json::array({pair->first, pair->second}) : Json(nullptr));
}

inline void demo_triangle_and_pair(DemoLog& log, const OracleOptions& opt) {
  const SetFamily f = instances::triangle_and_pair();
  const Rational h(1, 2);
  const WeightFunction a{{1, h}, {2, h}, {3, h}, {4, 1}};
  const WeightFunction b{{1, h}, {2, h}, {3, h}, {5, 1}};
  const VertexSet vs = enumerate_vertices(f, opt);
  Json listed = Json::array();
  for (const auto& v : vs.vertices) listed.push_back(weight_json(v));
  log.check("vertices", Json::array({weight_json(a), weight_json(b)}), listed);
  log.check("classification of the first vertex", "Extreme", to_string(classify_extreme(f, a).kind));
  const WeightFunction mid = h * a + h * b;
  Json coeffs = Json::array();
  for (const auto& t : decompose(f, mid, opt).terms) coeffs.push_back(to_string(t.coefficient));
  log.check("midpoint coefficients", Json::array({"1/2", "1/2"}), coeffs);
  const WeightFunction third = Rational(1, 3) * a + Rational(2, 3) * b;
  Json terms = Json::array();
  for (const auto& t : decompose(f, third, opt).terms)
    terms.push_back(Json{{"coefficient", to_string(t.coefficient)}, {"w(4)", to_string(t.vertex(4))}});
  log.check("w(4) = 1/3 decomposition",
            Json::array({Json{{"coefficient", "1/3"}, {"w(4)", "1"}}, Json{{"coefficient", "2/3"}, {"w(4)", "0"}}}),
            terms);
}

inline void demo_disjoint_growing(DemoLog& log, std::uint64_t seed) {
  constexpr std::size_t K = 6;
  const SetFamily f = instances::disjoint_growing_family(K);
  WeightFunction w0;
  for (BlockIndex k = 1; k <= K; ++k)
    for (ElementId g : f.block(k).members) w0.set(g, Rational(1, static_cast<long long>(k)));
  log.check("norm of w0", "1", to_string(sup_block_norm(f, w0)));
  log.check("support width of w0", K, support_width(f, w0));
  std::mt19937_64 rng(seed);
  std::size_t within_width = 0, far = 0;
  constexpr std::size_t trials = 50;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t count = 1 + uniform_below(rng, 10);
    std::vector<WeightFunction> points;
    for (std::size_t i = 0; i < count; ++i) {
      WeightFunction p;
      for (BlockIndex k = 1; k <= K; ++k) {
        const auto& m = f.block(k).members;
        p.set(m[uniform_below(rng, m.size())], 1);
      }
      points.push_back(p);
    }
    const WeightFunction w = random_mixture(points, count, rng);
    within_width += support_width(f, w) <= count ? 1 : 0;
    bool some_block_far = false;
    for (BlockIndex k = 1; k <= K; ++k) {
      Rational dist = 0;
      std::size_t nonzero = 0;
      for (ElementId g : f.block(k).members) {
        dist += abs(w0(g) - w(g));
        nonzero += w(g) != 0 ? 1 : 0;
      }
      const Rational kk(static_cast<long long>(k));
      some_block_far = some_block_far || (dist >= 2 * (kk - Rational(static_cast<long long>(nonzero))) / kk &&
                                          dist >= 2 * (kk - 1) / kk);
    }
    far += some_block_far ? 1 : 0;
  }
  log.check("mixtures with support width at most their term count", trials, within_width);
  log.check("mixtures far from w0 on some block", trials, far);
}

inline Json demo(const std::string& name, const OracleOptions& opt, std::uint64_t seed, bool& ok) {
  DemoLog log;
  if (name == "ex1.1") demo_matrix(log, opt);
  else if (name == "ex1.2") demo_odd_cycle(log, opt);
  else if (name == "ex2.5") demo_fan(log);
  else if (name == "rem2.10") demo_triangle_and_pair(log, opt);
  else if (name == "rem3.7") demo_disjoint_growing(log, seed);
  else throw InvalidInput("unknown demo '" + name + "'");
  ok = log.ok();
  return log.document(name);
}

inline Json cycle_census(const AssociatedGraph& graph, const SetFamily& family) {
  Json odd = Json::array(), even = Json::array();
  for (const auto& c : find_primitive_cycles(graph, family))
    (c.vertices.size() % 2 == 1 ? odd : even).push_back(c.vertices);
  return Json{{"odd", odd}, {"even", even}};
}

}  // namespace detail

/// Runs one command line (args[0] is the program name) and captures its output.
inline Outcome run(const std::vector<std::string>& args) {
  using detail::Json;
  CLI::App app{"exact tools for weight functions with unit block sums"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for vertex enumeration")->check(CLI::PositiveNumber);

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("instance", file, "instance file")->required(); };

  auto* check = app.add_subcommand("check", "membership, conditions (a1)/(a2) and the counting identity");
  add_file(check);
  std::size_t a2_m = 0;
  check->add_option("--m", a2_m, "index m for condition (a2)");

  auto* graph = app.add_subcommand("graph", "edge list and primitive-cycle census");
  add_file(graph);

  auto* classify = app.add_subcommand("classify", "extreme point test");
  add_file(classify);

  auto* witness = app.add_subcommand("witness", "non-extremality witness");
  add_file(witness);
  std::string two_coloring, tree, cycle;
  ElementId attachment = 0;
  witness->add_option("--two-coloring", two_coloring, "subgraph for the two-colouring construction");
  witness->add_option("--tree", tree, "component for the tree propagation construction");
  auto* cycle_opt = witness->add_option("--cycle", cycle, "odd primitive cycle for the attachment construction");
  witness->add_option("--attachment", attachment, "attachment vertex")->needs(cycle_opt);

  auto* vertices = app.add_subcommand("vertices", "all vertices of S");
  add_file(vertices);

  auto* decompose_cmd = app.add_subcommand("decompose", "convex combination of vertices");
  add_file(decompose_cmd);

  auto* extend = app.add_subcommand("extend", "extension of a truncated solution");
  std::string generator = "path", weights;
  std::size_t n = 1, horizon = 10;
  extend->add_option("--generator", generator, "path, disjoint-growing, grid or an instance file");
  extend->add_option("--n", n, "truncation index")->required();
  extend->add_option("--horizon", horizon, "last block index examined");
  extend->add_option("--weights", weights, "truncated weights, e.g. 1=1,3=1/2")->required();

  auto* validate = app.add_subcommand("validate", "cross-check the classifier against the vertex oracle");
  add_file(validate);
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  validate->add_option("--samples", samples, "random mixtures tested");
  validate->add_option("--seed", seed, "random seed");

  auto* demo = app.add_subcommand("demo", "bundled worked examples with expected values");
  std::string demo_name;
  demo->add_option("name", demo_name, "ex1.1, ex1.2, ex2.5, rem2.10 or rem3.7")->required();
  demo->add_option("--seed", seed, "random seed");

  auto* gen = app.add_subcommand("gen", "random instance");
  std::size_t elements = 6, blocks = 4, kappa = 2;
  gen->add_option("--elements", elements, "number of elements");
  gen->add_option("--blocks", blocks, "number of blocks");
  gen->add_option("--kappa-max", kappa, "largest multiplicity");
  gen->add_option("--seed", seed, "random seed");

  Outcome result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("InvalidInput: ") + e.what() + "\n";
    result.code = 1;
    return result;
  }

  OracleOptions opt;
  opt.jobs = jobs;
  Json doc;
  try {
    if (check->parsed()) {
      const auto inst = io::load_instance(file);
      const SetFamily& f = inst.family;
      doc["family"] = io::to_json(f);
      doc["kappa_max"] = f.kappa_max();
      if (inst.weights) {
        require_known_support(f, *inst.weights);
        const MembershipReport membership = classify_membership(f, *inst.weights);
        doc["membership"] = io::to_json(membership);
        doc["counting_identity"] =
            membership.in_S ? io::to_json(counting_identity(f, *inst.weights)) : Json(nullptr);
      }
      const auto a1 = check_a1(f, f.ground());
      doc["a1"] = a1 ? Json{{"ok", false}, {"pair", Json::array({a1->first, a1->second})}}
                     : Json{{"ok", true}};
      doc["a2"] = io::to_json(check_a2(f, a2_m));
    } else if (graph->parsed()) {
      const auto inst = io::load_instance(file);
      const AssociatedGraph g = build_graph(inst.family);
      result.out = edge_list_dump(g);
      doc["cycles"] = detail::cycle_census(g, inst.family);
      result.out += doc.dump(2) + "\n";
      return result;
    } else if (classify->parsed()) {
      const auto inst = io::load_instance(file);
      doc = io::to_json(classify_extreme(inst.family, detail::require_weights(inst)));
    } else if (witness->parsed()) {
      const auto inst = io::load_instance(file);
      const WeightFunction& w = detail::require_weights(inst);
      const int chosen = !two_coloring.empty() + !tree.empty() + !cycle.empty();
      if (chosen > 1) throw InvalidInput("choose at most one of --two-coloring, --tree, --cycle");
      if (!two_coloring.empty()) {
        doc = io::to_json(witness_two_coloring(inst.family, w, detail::parse_label_list(two_coloring)));
      } else if (!tree.empty()) {
        doc = io::to_json(witness_tree_propagation(inst.family, w, detail::parse_label_list(tree)));
      } else if (!cycle.empty()) {
        if (attachment == 0 && !inst.family.contains(0))
          throw InvalidInput("--cycle needs --attachment");
        doc = io::to_json(witness_cycle_attachment(inst.family, w,
                                                   Path{detail::parse_label_list(cycle), true}, attachment));
      } else {
        const auto v = classify_extreme(inst.family, w);
        if (v.kind == ExtremalityVerdict::Kind::Extreme)
          throw ConditionsViolated("w is an extreme point; no witness exists");
        if (v.kind == ExtremalityVerdict::Kind::Unsupported) throw ConditionsViolated(v.reason);
        doc = io::to_json(*v.witness);
      }
    } else if (vertices->parsed()) {
      doc = io::to_json(enumerate_vertices(io::load_instance(file).family, opt));
    } else if (decompose_cmd->parsed()) {
      const auto inst = io::load_instance(file);
      doc = io::to_json(decompose(inst.family, detail::require_weights(inst), opt));
    } else if (extend->parsed()) {
      std::unique_ptr<FamilyGenerator> g;
      if (generator == "path" || generator == "disjoint-growing" || generator == "grid")
        g = make_generator(generator);
      else
        g = std::make_unique<FiniteFamilyGenerator>(io::load_instance(generator).family);
      const Truncation t{n, io::parse_weight_list(weights)};
      const ExtensionResult r = extend_tn(*g, t, horizon);
      doc["generator"] = g->name();
      doc["n"] = n;
      doc["result"] = io::to_json(r);
      doc["verification"] = io::to_json(verify_extension(r, *g, t));
    } else if (validate->parsed()) {
      doc = io::to_json(cross_validate(io::load_instance(file).family, samples, seed, opt));
    } else if (demo->parsed()) {
      bool ok = true;
      doc = detail::demo(demo_name, opt, seed, ok);
      if (!ok) {
        result.out = doc.dump(2) + "\n";
        result.err = "InternalPropertyViolation: demo " + demo_name + " disagrees with its expected values\n";
        result.code = exit_code(ErrorKind::Internal);
        return result;
      }
    } else if (gen->parsed()) {
      const GeneratedInstance g = gen_random(elements, blocks, kappa, seed, opt);
      doc = io::instance_json(g.family, g.w);
      doc["feasible"] = g.feasible;
      doc["vertex_count"] = g.vertex_count;
    }
  } catch (const Error& e) {
    result.err = e.name() + ": " + e.what() + "\n";
    result.code = exit_code(e.kind());
    return result;
  }
  result.out = doc.dump(2) + "\n";
  return result;
}

}  // namespace gds::cli
