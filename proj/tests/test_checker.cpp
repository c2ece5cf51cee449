// Verdict semantics, the sentinel self-test, random instance generation, and
// one green end-to-end run of every checker entry point on a small graph.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "qg/check.hpp"
#include "qg/jsonio.hpp"
#include "qg/rand.hpp"
#include "qg/randgraph.hpp"
#include "qg/suite.hpp"

using namespace qg;

namespace {
Vertex vx(const std::string& id, VertexCondition c = VertexCondition::standard()) {
  return {id, c};
}
Edge ed(const std::string& id, const std::string& a, const std::string& b,
        double len) {
  return {id, a, b, len};
}

const SolveOptions kFast{24};

int count_status(const std::vector<Verdict>& vs, VerdictStatus st) {
  int n = 0;
  for (const auto& v : vs) n += v.status == st;
  return n;
}

void expect_all_pass(const std::vector<Verdict>& vs) {
  REQUIRE(!vs.empty());
  for (const auto& v : vs) {
    INFO(v.detail << " margin=" << v.margin << " budget=" << v.error_budget);
    CHECK(v.status != VerdictStatus::Fail);
  }
  CHECK(count_status(vs, VerdictStatus::Pass) >= 1);
}
}  // namespace

TEST_CASE("inequality verdicts honour the error budget", "[checker]") {
  CHECK(check_le(1.0, 2.0, 0.5, "x").status == VerdictStatus::Pass);
  CHECK(check_le(2.0, 1.0, 0.5, "x").status == VerdictStatus::Fail);
  CHECK(check_le(1.0, 1.3, 0.5, "x").status == VerdictStatus::Inconclusive);
  CHECK(check_le(1.3, 1.0, 0.5, "x").status == VerdictStatus::Inconclusive);
  CHECK(check_le(1.0, 1.5, 0.5, "x").status == VerdictStatus::Inconclusive);
  auto v = check_le(1.0, 3.0, 0.25, "detail text");
  CHECK(v.margin == 2.0);
  CHECK(v.error_budget == 0.25);
  CHECK(v.detail == "detail text");

  CHECK(check_eq(1.0, 1.0 + 1e-12, 1e-9, "x").status == VerdictStatus::Pass);
  CHECK(check_eq(1.0, 1.1, 1e-9, "x").status == VerdictStatus::Fail);

  CHECK(check_int_le(3, 3, "x").status == VerdictStatus::Pass);
  CHECK(check_int_le(4, 3, "x").status == VerdictStatus::Fail);
}

TEST_CASE("sentinel flag turns a true statement into a detected failure",
          "[checker]") {
  auto g = MetricGraph::build(
      {vx("a", VertexCondition::delta_prime(1.0)),
       vx("b", VertexCondition::delta_prime(2.0))},
      {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.5)});
  auto before = check_gluing_cases(g, "a", "b", 4, kFast);
  expect_all_pass(before);

  sentinel_flip_inequalities() = true;
  auto flipped = check_gluing_cases(g, "a", "b", 4, kFast);
  sentinel_flip_inequalities() = false;
  CHECK(count_status(flipped, VerdictStatus::Fail) >= 1);

  // equality and counting checks are also covered by the sentinel
  sentinel_flip_inequalities() = true;
  CHECK(check_eq(1.0, 1.0, 1e-9, "x").status == VerdictStatus::Fail);
  CHECK(check_int_le(1, 5, "x").status == VerdictStatus::Fail);
  sentinel_flip_inequalities() = false;
}

TEST_CASE("seeded rng is deterministic and label-separated", "[checker]") {
  Rng r1(42), r2(42);
  for (int i = 0; i < 100; ++i) REQUIRE(r1.next_u64() == r2.next_u64());
  CHECK(derive_seed(1, "alpha", 0) != derive_seed(1, "beta", 0));
  CHECK(derive_seed(1, "alpha", 0) != derive_seed(1, "alpha", 1));
  CHECK(derive_seed(1, "alpha", 7) == derive_seed(1, "alpha", 7));
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    double u = r.uniform(0.5, 2.0);
    REQUIRE(u >= 0.5);
    REQUIRE(u < 2.0);
    int n = r.int_in(2, 6);
    REQUIRE(n >= 2);
    REQUIRE(n <= 6);
  }
  CHECK_THROWS_AS(r.int_in(3, 2), Error);
}

TEST_CASE("random graphs are reproducible and respect their parameters",
          "[checker]") {
  RandomGraphParams p;
  SECTION("same seed gives a byte-identical graph") {
    auto a = random_graph(p, 1234);
    auto b = random_graph(p, 1234);
    CHECK(graph_to_json(a).dump() == graph_to_json(b).dump());
    auto c = random_graph(p, 1235);
    CHECK(graph_to_json(a).dump() != graph_to_json(c).dump());
  }
  SECTION("edge counts, lengths and connectivity") {
    for (uint64_t s = 0; s < 50; ++s) {
      auto g = random_graph(p, s);
      REQUIRE(g.edge_count() >= 2);
      REQUIRE(g.edge_count() <= 6);
      for (const auto& e : g.edges()) {
        REQUIRE(e.length >= 0.5);
        REQUIRE(e.length <= 2.0);
      }
      REQUIRE(g.is_connected());
    }
  }
  SECTION("delta-prime family with sign control") {
    p.family = ConditionKind::DeltaPrime;
    p.strength_sign = -1;
    for (uint64_t s = 0; s < 20; ++s) {
      auto g = random_graph(p, s);
      for (const auto& v : g.vertices()) {
        REQUIRE(v.condition.kind == ConditionKind::DeltaPrime);
        REQUIRE(v.condition.strength < 0.0);
        REQUIRE(std::abs(v.condition.strength) >= 0.2);
        REQUIRE(std::abs(v.condition.strength) <= 5.0);
      }
    }
    p.strength_sign = 0;
    p.anti_fraction = 0.5;
    bool saw_anti = false, saw_dp = false;
    for (uint64_t s = 0; s < 20; ++s) {
      auto g = random_graph(p, s);
      for (const auto& v : g.vertices()) {
        saw_anti = saw_anti || v.condition.kind == ConditionKind::AntiStandard;
        saw_dp = saw_dp || v.condition.kind == ConditionKind::DeltaPrime;
      }
    }
    CHECK(saw_anti);
    CHECK(saw_dp);
  }
  SECTION("trees have no loops and |V| = |E| + 1") {
    for (uint64_t s = 0; s < 30; ++s) {
      auto t = random_tree(p, s);
      REQUIRE(is_tree(t));
      REQUIRE(t.vertex_count() == t.edge_count() + 1);
    }
  }
  SECTION("impossible parameter combinations are rejected") {
    RandomGraphParams bad;
    bad.min_edges = 5;
    bad.max_edges = 3;
    CHECK_THROWS_AS(random_graph(bad, 1), Error);
    RandomGraphParams bad2;
    bad2.min_length = -1.0;
    CHECK_THROWS_AS(random_graph(bad2, 1), Error);
    RandomGraphParams bad3;
    bad3.min_abs_strength = 0.0;
    bad3.family = ConditionKind::DeltaPrime;
    CHECK_THROWS_AS(random_graph(bad3, 1), Error);
  }
}

TEST_CASE("strength interlacing chain on a two-edge path", "[checker]") {
  auto g = MetricGraph::build(
      {vx("a"), vx("m", VertexCondition::delta_prime(1.0)), vx("b")},
      {ed("e1", "a", "m", 0.8), ed("e2", "m", "b", 1.3)});
  SECTION("same-sign increase") {
    expect_all_pass(check_interlacing_strength(g, "m", 2.5, 6, kFast));
  }
  SECTION("sign crossing") {
    auto g2 = set_vertex_condition(g, "m", VertexCondition::delta_prime(-1.0));
    expect_all_pass(check_interlacing_strength(g2, "m", 1.5, 6, kFast));
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(check_interlacing_strength(g, "a", 1.0, 4, kFast), Error);
    CHECK_THROWS_AS(check_interlacing_strength(g, "m", 0.0, 4, kFast), Error);
  }
}

TEST_CASE("gluing checks cover all six sign cases", "[checker]") {
  auto make = [&](VertexCondition ca, VertexCondition cb) {
    return MetricGraph::build({vx("a", ca), vx("b", cb), vx("c")},
                              {ed("e1", "a", "c", 1.0), ed("e2", "c", "b", 0.7),
                               ed("e3", "a", "c", 1.4)});
  };
  using VC = VertexCondition;
  expect_all_pass(check_gluing_cases(make(VC::delta_prime(1.0), VC::delta_prime(2.0)),
                                     "a", "b", 5, kFast));
  expect_all_pass(check_gluing_cases(make(VC::delta_prime(-1.0), VC::delta_prime(-2.0)),
                                     "a", "b", 5, kFast));
  expect_all_pass(check_gluing_cases(make(VC::delta_prime(-1.0), VC::delta_prime(3.0)),
                                     "a", "b", 5, kFast));
  expect_all_pass(check_gluing_cases(make(VC::delta_prime(1.0), VC::delta_prime(-3.0)),
                                     "a", "b", 5, kFast));
  expect_all_pass(check_gluing_cases(make(VC::delta_prime(2.0), VC::delta_prime(-2.0)),
                                     "a", "b", 5, kFast));
  expect_all_pass(check_gluing_cases(make(VC::anti_standard(), VC::delta_prime(-2.0)),
                                     "a", "b", 5, kFast));
  CHECK_THROWS_AS(check_gluing_cases(make(VC::standard(), VC::delta_prime(1.0)),
                                     "a", "b", 4, kFast),
                  Error);
}

TEST_CASE("scaling checks", "[checker]") {
  auto g = MetricGraph::build(
      {vx("a", VertexCondition::delta_prime(1.5)),
       vx("b", VertexCondition::delta_prime(-0.7))},
      {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.6)});
  SECTION("whole-graph covariance is exact") {
    for (double t : {0.5, 2.0, 3.0})
      expect_all_pass(check_scaling(g, "", t, ScalingMode::Graph, 6, kFast));
  }
  SECTION("edge lengthening and shortening on a standard graph") {
    auto gs = MetricGraph::build({vx("a"), vx("b"), vx("c")},
                                 {ed("e1", "a", "b", 1.0), ed("e2", "b", "c", 1.0)});
    expect_all_pass(check_scaling(gs, "e1", 2.0, ScalingMode::Edge, 6, kFast));
    expect_all_pass(check_scaling(gs, "e1", 0.5, ScalingMode::Edge, 6, kFast));
  }
  SECTION("nonpositive factor is rejected") {
    CHECK_THROWS_AS(check_scaling(g, "e1", 0.0, ScalingMode::Graph, 4, kFast),
                    Error);
  }
}

TEST_CASE("pendant attachment with (r, k0) search", "[checker]") {
  auto g = MetricGraph::build(
      {vx("a", VertexCondition::delta_prime(1.0)), vx("b")},
      {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.3)});
  auto h = MetricGraph::build(
      {vx("w", VertexCondition::delta_prime(1.0)), vx("u")},
      {ed("f1", "w", "u", 0.9)});
  SECTION("both strengths positive (<= case)") {
    auto vs = check_pendant_cases(g, "a", h, "w", 10, kFast);
    expect_all_pass(vs);
  }
  SECTION("both strengths negative (>= case)") {
    auto g2 = set_vertex_condition(g, "a", VertexCondition::delta_prime(-1.0));
    auto h2 = set_vertex_condition(h, "w", VertexCondition::delta_prime(-1.0));
    auto vs = check_pendant_cases(g2, "a", h2, "w", 10, kFast);
    REQUIRE(!vs.empty());
    CHECK(count_status(vs, VerdictStatus::Fail) == 0);
  }
  SECTION("junction must be delta-prime family") {
    CHECK_THROWS_AS(check_pendant_cases(g, "b", h, "w", 4, kFast), Error);
  }
}

TEST_CASE("delta insertion, lengthening, and delta-prime insertion",
          "[checker]") {
  SECTION("inserting a path at a standard vertex") {
    auto g = MetricGraph::build({vx("a"), vx("v"), vx("b")},
                                {ed("e1", "a", "v", 1.0), ed("e2", "v", "b", 1.2)});
    auto h = MetricGraph::build({vx("w1"), vx("w2")}, {ed("f1", "w1", "w2", 0.8)});
    std::vector<InsertAssignment> asg = {{{"e1", 1}, "w1"}, {{"e2", 0}, "w2"}};
    std::vector<InsertStrength> str = {{"w1", 0.0}, {"w2", 0.0}};
    auto vs = check_delta_insertion(g, "v", h, asg, str, 8, kFast);
    expect_all_pass(vs);
  }
  SECTION("lengthening one edge of a delta graph") {
    auto g = MetricGraph::build(
        {vx("a", VertexCondition::delta(1.0)), vx("b", VertexCondition::delta(-0.5))},
        {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 0.9)});
    expect_all_pass(check_scaling(g, "e2", 1.7, ScalingMode::Edge, 7, kFast));
  }
  SECTION("delta-prime insertion of an all-anti graph") {
    auto g = MetricGraph::build(
        {vx("a"), vx("v", VertexCondition::delta_prime(-2.0)), vx("b")},
        {ed("e1", "a", "v", 1.0), ed("e2", "v", "b", 1.4)});
    auto h = MetricGraph::build(
        {vx("w1", VertexCondition::anti_standard()),
         vx("w2", VertexCondition::anti_standard())},
        {ed("f1", "w1", "w2", 0.6)});
    std::vector<InsertAssignment> asg = {{{"e1", 1}, "w1"}, {{"e2", 0}, "w2"}};
    auto vs = check_deltaprime_insertion(g, "v", h, asg, 8, kFast);
    REQUIRE(!vs.empty());
    CHECK(count_status(vs, VerdictStatus::Fail) == 0);
    CHECK(count_status(vs, VerdictStatus::Pass) >= 1);
  }
}

TEST_CASE("rank-one chains at a star centre", "[checker]") {
  auto g = MetricGraph::build(
      {vx("c"), vx("p1"), vx("p2"), vx("p3")},
      {ed("e1", "c", "p1", 1.0), ed("e2", "c", "p2", 1.3), ed("e3", "c", "p3", 0.8)});
  auto vs = check_rank_one_chains(g, "c", 1.5, 6, kFast);
  expect_all_pass(vs);
}

TEST_CASE("counting sandwich on anti graphs", "[checker]") {
  SECTION("tree (beta 0) also verifies the vertex-count shift") {
    auto g = MetricGraph::build(
        {vx("a", VertexCondition::anti_standard()),
         vx("b", VertexCondition::anti_standard()),
         vx("c", VertexCondition::anti_standard())},
        {ed("e1", "a", "b", 1.0), ed("e2", "b", "c", 1.4)});
    auto vs = check_counting_sandwich(g, 10, kFast);
    expect_all_pass(vs);
  }
  SECTION("two-flower (beta 2) uses only the wide shift") {
    auto g = MetricGraph::build({vx("a", VertexCondition::anti_standard())},
                                {ed("e1", "a", "a", 1.0), ed("e2", "a", "a", 1.7)});
    auto vs = check_counting_sandwich(g, 10, kFast);
    expect_all_pass(vs);
    for (const auto& v : vs)
      CHECK(v.detail.find("vertex shift") == std::string::npos);
  }
  SECTION("non-anti graph rejected") {
    auto g = MetricGraph::build({vx("a"), vx("b")}, {ed("e1", "a", "b", 1.0)});
    CHECK_THROWS_AS(check_counting_sandwich(g, 5, kFast), Error);
  }
}

TEST_CASE("delta gluing, flower chains, pendant edges", "[checker]") {
  SECTION("gluing the two ends of a standard path") {
    auto g = MetricGraph::build({vx("a"), vx("b"), vx("c")},
                                {ed("e1", "a", "b", 1.0), ed("e2", "b", "c", 1.5)});
    expect_all_pass(check_delta_gluing(g, "a", "c", 6, kFast));
  }
  SECTION("flower chain for a delta graph") {
    auto g = MetricGraph::build(
        {vx("a", VertexCondition::delta(0.5)), vx("b"), vx("c")},
        {ed("e1", "a", "b", 1.0), ed("e2", "b", "c", 1.2), ed("e3", "c", "a", 0.7)});
    expect_all_pass(check_flower_chain(g, 8, kFast));
  }
  SECTION("flower comparison for sign-uniform delta-prime graphs") {
    auto gp = MetricGraph::build(
        {vx("a", VertexCondition::delta_prime(1.0)),
         vx("b", VertexCondition::delta_prime(2.0))},
        {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.3)});
    expect_all_pass(check_flower_chain(gp, 6, kFast));
    auto gn = MetricGraph::build(
        {vx("a", VertexCondition::delta_prime(-1.0)),
         vx("b", VertexCondition::delta_prime(-2.0))},
        {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.3)});
    expect_all_pass(check_flower_chain(gn, 6, kFast));
    auto gm = MetricGraph::build(
        {vx("a", VertexCondition::delta_prime(-1.0)),
         vx("b", VertexCondition::delta_prime(2.0))},
        {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.3)});
    CHECK_THROWS_AS(check_flower_chain(gm, 6, kFast), Error);
  }
  SECTION("pendant edge on a delta-prime graph drops every eigenvalue") {
    auto g = MetricGraph::build(
        {vx("a", VertexCondition::delta_prime(1.0)),
         vx("b", VertexCondition::delta_prime(-0.8))},
        {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 0.9)});
    expect_all_pass(check_pendant_edge(g, "a", 0.75, 6, kFast));
  }
  SECTION("pendant edge on a standard graph (nonnegative part)") {
    auto g = MetricGraph::build({vx("a"), vx("b")},
                                {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.4)});
    auto vs = check_pendant_edge(g, "a", 0.6, 6, kFast);
    expect_all_pass(vs);
  }
}

TEST_CASE("tree and bipartite spectral relations", "[checker]") {
  auto star = MetricGraph::build(
      {vx("c"), vx("p1"), vx("p2"), vx("p3")},
      {ed("e1", "c", "p1", 1.0), ed("e2", "c", "p2", 0.6), ed("e3", "c", "p3", 1.9)});
  expect_all_pass(check_tree_relation(star, 8, kFast));
  CHECK_THROWS_AS(
      check_tree_relation(
          MetricGraph::build({vx("a")}, {ed("e1", "a", "a", 1.0)}), 4, kFast),
      Error);

  auto triangle = MetricGraph::build(
      {vx("a"), vx("b"), vx("c")},
      {ed("e1", "a", "b", 1.0), ed("e2", "b", "c", 1.2), ed("e3", "c", "a", 0.9)});
  SECTION("non-bipartite graphs are subdivided first") {
    expect_all_pass(check_bipartite_relation(triangle, 9, kFast));
  }
  SECTION("the raw values op refuses non-bipartite input") {
    CHECK_THROWS_AS(bipartite_relation_check_values(triangle, 6, kFast), Error);
    auto pairs = bipartite_relation_check_values(star, 6, kFast);
    REQUIRE(!pairs.empty());
    for (const auto& p : pairs)
      CHECK(std::abs(p.anti_value - p.standard_value) <=
            1e-5 * (1.0 + std::abs(p.anti_value)));
  }
}

TEST_CASE("pendant-count/diameter relation", "[checker]") {
  auto star = MetricGraph::build(
      {vx("c"), vx("p1"), vx("p2"), vx("p3")},
      {ed("e1", "c", "p1", 1.0), ed("e2", "c", "p2", 1.0), ed("e3", "c", "p3", 1.0)});
  CHECK(check_pendant_diameter(star).status == VerdictStatus::Pass);
  auto path = MetricGraph::build({vx("a"), vx("b")}, {ed("e1", "a", "b", 2.0)});
  auto v = check_pendant_diameter(path);
  CHECK(v.status == VerdictStatus::Pass);
  CHECK(std::abs(v.margin) <= 1e-12);  // equality case
}

TEST_CASE("bound rows check cleanly against a computed spectrum", "[checker]") {
  auto g = MetricGraph::build({vx("a"), vx("b"), vx("c")},
                              {ed("e1", "a", "b", 1.0), ed("e2", "b", "c", 1.3)});
  auto vs = check_bounds(g, 8, kFast);
  expect_all_pass(vs);
  auto filtered = check_bounds(g, 8, kFast, {"standard-upper"});
  REQUIRE(!filtered.empty());
  for (const auto& v : filtered)
    CHECK(v.detail.rfind("standard-upper", 0) == 0);
}

TEST_CASE("suite registry lists every theorem exactly once", "[suite]") {
  std::set<std::string> ids;
  for (const auto& t : theorem_registry()) {
    CHECK(ids.insert(t.id).second);
    CHECK(t.run != nullptr);
  }
  for (const char* required :
       {"strength-monotonicity", "gluing-sign-cases", "pendant-attachment",
        "rank-one-chains", "counting-sandwich", "edge-scaling", "graph-scaling",
        "delta-insertion", "lengthening", "deltaprime-insertion",
        "pendant-edge", "flower-chain", "tree-relation", "bipartite-relation",
        "pendant-diameter", "bounds-standard-upper",
        "bounds-dirichlet-standard-upper", "bounds-delta-bracket",
        "bounds-anti-window", "bounds-anti-shifted",
        "bounds-deltaprime-negative", "bounds-deltaprime-star",
        "bounds-deltaprime-lambda1", "bounds-tree"})
    CHECK(ids.count(required) == 1);
}

TEST_CASE("suite runs are deterministic and validate their config", "[suite]") {
  SuiteConfig cfg;
  cfg.seed = 7;
  cfg.instances = 3;
  cfg.k_max = 6;
  cfg.mesh = 16;
  cfg.selection = {"gluing-sign-cases", "graph-scaling", "pendant-diameter",
                   "bounds-standard-upper"};
  auto r1 = run_suite(cfg);
  auto r2 = run_suite(cfg);
  REQUIRE(r1.reports.size() == 4);
  CHECK(suite_report_json(r1).dump(2) == suite_report_json(r2).dump(2));
  CHECK(suite_report_csv(r1) == suite_report_csv(r2));
  CHECK(!r1.any_fail);
  CHECK(suite_exit_code(r1) == 0);
  for (const auto& rep : r1.reports) {
    CHECK(rep.instances == 3);
    CHECK(rep.fail == 0);
    CHECK(rep.pass >= 1);
    CHECK(rep.worst_instance >= 0);
  }

  SECTION("a different master seed changes the report") {
    SuiteConfig other = cfg;
    other.seed = 8;
    auto r3 = run_suite(other);
    CHECK(suite_report_json(r1)["reports"].dump() !=
          suite_report_json(r3)["reports"].dump());
  }
  SECTION("unknown selection and bad parameters are config errors") {
    SuiteConfig bad = cfg;
    bad.selection = {"no-such-theorem"};
    CHECK_THROWS_AS(run_suite(bad), Error);
    SuiteConfig bad2 = cfg;
    bad2.instances = 0;
    CHECK_THROWS_AS(run_suite(bad2), Error);
  }
  SECTION("the sentinel flag is caught by the suite") {
    sentinel_flip_inequalities() = true;
    SuiteConfig small = cfg;
    small.selection = {"gluing-sign-cases"};
    auto rs = run_suite(small);
    sentinel_flip_inequalities() = false;
    CHECK(rs.any_fail);
    CHECK(suite_exit_code(rs) == 1);
    CHECK(rs.reports.front().instances_with_fail >= 1);
  }
}

TEST_CASE("csv report has a fixed header and one line per theorem", "[suite]") {
  SuiteConfig cfg;
  cfg.instances = 2;
  cfg.k_max = 5;
  cfg.mesh = 16;
  cfg.selection = {"tree-relation", "pendant-diameter"};
  auto csv = suite_report_csv(run_suite(cfg));
  CHECK(csv.rfind("theorem_id,instances,pass,fail,inconclusive,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("tree-relation,2,") != std::string::npos);
}

TEST_CASE("retry reruns on a doubled mesh when inconclusive", "[checker]") {
  int calls = 0;
  int last_mesh = 0;
  auto fn = [&](const SolveOptions& o) {
    ++calls;
    last_mesh = o.elements_per_edge;
    Verdict v;
    v.status = calls == 1 ? VerdictStatus::Inconclusive : VerdictStatus::Pass;
    return std::vector<Verdict>{v};
  };
  auto out = run_with_retry(fn, SolveOptions{32});
  CHECK(calls == 2);
  CHECK(last_mesh == 64);
  CHECK(out.front().status == VerdictStatus::Pass);

  calls = 0;
  auto fn2 = [&](const SolveOptions& o) {
    ++calls;
    (void)o;
    return std::vector<Verdict>{{VerdictStatus::Pass, 1.0, 0.1, "ok"}};
  };
  auto out2 = run_with_retry(fn2, SolveOptions{32});
  CHECK(calls == 1);
  CHECK(out2.front().status == VerdictStatus::Pass);
}
