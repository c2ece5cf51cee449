// Variational solver: oracle agreement, Galerkin monotonicity, invariances,
// counting function, and quadratic-form evaluation.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qg/oracle.hpp"
#include "qg/solve.hpp"

using namespace qg;

namespace {
const double kPi = 3.14159265358979323846;

Vertex vx(const std::string& id, VertexCondition c = VertexCondition::standard()) {
  return {id, c};
}
Edge ed(const std::string& id, const std::string& a, const std::string& b,
        double len) {
  return {id, a, b, len};
}
MetricGraph interval(double len, VertexCondition l, VertexCondition r) {
  return MetricGraph::build({vx("a", l), vx("b", r)}, {ed("e", "a", "b", len)});
}

void check_against(const Spectrum& s, const std::vector<double>& exact) {
  for (size_t k = 0; k < exact.size(); ++k) {
    double tol = s.error_estimates[k] + 1e-10 * (1.0 + std::abs(exact[k]));
    INFO("k=" << k + 1 << " reported=" << s.eigenvalues[k]
              << " exact=" << exact[k] << " tol=" << tol);
    CHECK(std::abs(s.eigenvalues[k] - exact[k]) <= tol);
  }
}
}  // namespace

TEST_CASE("Dirichlet interval matches closed form", "[solver]") {
  auto g = interval(1.0, VertexCondition::dirichlet(), VertexCondition::dirichlet());
  auto s = solve_spectrum(g, 5, {32});
  auto exact = interval_spectrum_closed_form(
      1.0, EndpointCondition::dirichlet(), EndpointCondition::dirichlet(), 5);
  check_against(s, exact);
  SECTION("raw pair is Galerkin-monotone and brackets the truth") {
    for (int k = 0; k < 5; ++k) {
      CHECK(s.coarse[k] >= s.fine[k] - 1e-12 * std::abs(s.fine[k]));
      CHECK(s.fine[k] >= exact[k] - 1e-12 * std::abs(exact[k]));
    }
  }
}

TEST_CASE("degree-one reductions match the interval oracles", "[solver]") {
  SECTION("standard ends behave as Neumann") {
    auto g = interval(1.0, VertexCondition::standard(), VertexCondition::standard());
    auto s = solve_spectrum(g, 4, {32});
    check_against(s, interval_spectrum_closed_form(
                         1.0, EndpointCondition::neumann(),
                         EndpointCondition::neumann(), 4));
    CHECK(std::abs(s.eigenvalues[0]) <= 1e-9);
  }
  SECTION("anti-standard ends behave as Dirichlet") {
    auto g = interval(1.0, VertexCondition::anti_standard(),
                      VertexCondition::anti_standard());
    auto s = solve_spectrum(g, 4, {32});
    check_against(s, interval_spectrum_closed_form(
                         1.0, EndpointCondition::dirichlet(),
                         EndpointCondition::dirichlet(), 4));
  }
}

TEST_CASE("attractive delta end: negative eigenvalue vs secular oracle",
          "[solver]") {
  auto g = interval(1.0, VertexCondition::delta(-5.0), VertexCondition::neumann());
  auto s = solve_spectrum(g, 3, {64});
  auto exact = interval_secular_spectrum(1.0, EndpointCondition::robin_delta(-5.0),
                                         EndpointCondition::neumann(), 3);
  CHECK(s.eigenvalues[0] < 0.0);
  CHECK(s.eigenvalues[1] > 0.0);
  check_against(s, exact);
}

TEST_CASE("delta-prime end vs secular oracle", "[solver]") {
  auto g = interval(1.0, VertexCondition::delta_prime(-0.5),
                    VertexCondition::dirichlet());
  auto s = solve_spectrum(g, 4, {64});
  auto exact = interval_secular_spectrum(
      1.0, EndpointCondition::robin_delta_prime(-0.5),
      EndpointCondition::dirichlet(), 4);
  check_against(s, exact);
}

TEST_CASE("all-standard cycle: zero mode and double eigenvalues", "[solver]") {
  double L = 2.0;
  auto g = MetricGraph::build({vx("u"), vx("v")},
                              {ed("e1", "u", "v", 1.0), ed("e2", "v", "u", 1.0)});
  auto s = solve_spectrum(g, 5, {32});
  check_against(s, cycle_spectrum_closed_form(L, 5));
  CHECK(std::abs(s.eigenvalues[0]) <= 1e-9);
  // eigenvalues 2,3 and 4,5 are exact FEM double pairs -> clusters
  REQUIRE(s.clusters.size() >= 1);
  CHECK(s.clusters[0] == std::make_pair(2, 3));
}

TEST_CASE("subdivision invariance", "[solver]") {
  auto g = MetricGraph::build(
      {vx("a", VertexCondition::delta(1.5)), vx("b", VertexCondition::neumann())},
      {ed("e", "a", "b", 2.0)});
  auto s1 = solve_spectrum(g, 5, {32});
  auto sub = subdivide_edge(g, "e", 0.8);
  // unequal element sizes across the two sub-edges: same operator
  auto s2 = solve_spectrum(sub, 5, {32});
  for (int k = 0; k < 5; ++k) {
    double tol = s1.error_estimates[k] + s2.error_estimates[k] +
                 1e-9 * (1.0 + std::abs(s1.eigenvalues[k]));
    CHECK(std::abs(s1.eigenvalues[k] - s2.eigenvalues[k]) <= tol);
  }
}

TEST_CASE("exact discrete scaling covariance", "[solver]") {
  auto g = MetricGraph::build(
      {vx("a", VertexCondition::delta_prime(-0.7)),
       vx("b", VertexCondition::delta_prime(1.3)),
       vx("c", VertexCondition::anti_standard())},
      {ed("e1", "a", "b", 0.7), ed("e2", "b", "c", 1.3), ed("e3", "c", "a", 2.0)});
  auto s = solve_spectrum(g, 8, {16});
  for (double t : {0.5, 2.0, 3.0}) {
    std::vector<Vertex> verts;
    for (const auto& v : g.vertices()) {
      VertexCondition c = v.condition;
      if (c.kind == ConditionKind::DeltaPrime) c.strength *= t;
      if (c.kind == ConditionKind::Delta) c.strength /= t;
      verts.push_back({v.id, c});
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
      edges.push_back({e.id, e.from, e.to, e.length * t});
    auto scaled = MetricGraph::build(verts, edges);
    auto ss = solve_spectrum(scaled, 8, {16});
    for (int k = 0; k < 8; ++k) {
      double dev = std::abs(ss.eigenvalues[k] * t * t - s.eigenvalues[k]) /
                   std::max(1.0, std::abs(s.eigenvalues[k]));
      CHECK(dev <= 1e-10);
    }
  }
}

TEST_CASE("k_max guard", "[solver]") {
  auto g = interval(1.0, VertexCondition::dirichlet(), VertexCondition::dirichlet());
  // n=2 elements: 3 dofs, 2 Dirichlet rows -> reduced dimension 1
  CHECK_THROWS_MATCHES(solve_spectrum(g, 5, {2}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Err::KMaxExceedsDofs;
                       }));
  CHECK_THROWS_AS(solve_spectrum(g, 0, {8}), Error);
}

TEST_CASE("counting function", "[solver]") {
  auto g = interval(1.0, VertexCondition::dirichlet(), VertexCondition::dirichlet());
  auto s = solve_spectrum(g, 6, {32});
  CHECK(counting_function(s, 1.5 * 1.5 * kPi * kPi) == 1);
  CHECK(counting_function(s, 0.5) == 0);
  CHECK(counting_function(s, s.eigenvalues[2] + 0.1) == 3);
  CHECK_THROWS_MATCHES(counting_function(s, s.eigenvalues[5] + 1.0), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Err::LambdaBeyondComputedRange;
                       }));
  SECTION("Weyl sanity on decoupled Dirichlet edges") {
    auto h = MetricGraph::build(
        {vx("a", VertexCondition::dirichlet()), vx("b", VertexCondition::dirichlet()),
         vx("c", VertexCondition::dirichlet())},
        {ed("e1", "a", "b", 1.0), ed("e2", "b", "c", 1.61803398875)});
    auto hs = solve_spectrum(h, 10, {32});
    for (double lam : {5.0, 20.0, 55.0}) {
      int expected = 0;
      for (double ell : {1.0, 1.61803398875})
        expected += (int)std::floor(std::sqrt(lam) * ell / kPi);
      CHECK(counting_function(hs, lam) == expected);
    }
  }
}

TEST_CASE("quadratic form values", "[solver]") {
  SECTION("constant on an all-standard graph gives zero") {
    auto g = MetricGraph::build(
        {vx("a"), vx("b")}, {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 2.0)});
    Mesh mesh = Mesh::uniform(g, 16);
    auto x = interpolate_on_mesh(g, mesh, [](int, double) { return 1.0; });
    CHECK(quadratic_form_value(g, mesh, x) == Catch::Approx(0.0).margin(1e-12));
    CHECK(mass_form_value(g, mesh, x) == Catch::Approx(3.0).epsilon(1e-12));
  }
  SECTION("constant on a delta-prime graph gives the strength sum") {
    // banana with two DeltaPrime vertices, degrees 2 and 2
    auto g = MetricGraph::build(
        {vx("a", VertexCondition::delta_prime(2.0)),
         vx("b", VertexCondition::delta_prime(-0.8))},
        {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 2.0)});
    Mesh mesh = Mesh::uniform(g, 8);
    auto x = interpolate_on_mesh(g, mesh, [](int, double) { return 1.0; });
    double expected = 4.0 / 2.0 + 4.0 / (-0.8);  // Σ d_v² / α′_v
    CHECK(quadratic_form_value(g, mesh, x) ==
          Catch::Approx(expected).epsilon(1e-12));
    SECTION("Rayleigh quotient dominates lambda_1") {
      auto s = solve_spectrum(g, 1, {32});
      double rayleigh = expected / mass_form_value(g, mesh, x);
      CHECK(rayleigh >= s.eigenvalues[0] - s.error_estimates[0] - 1e-9);
    }
  }
  SECTION("discontinuity at a standard vertex is rejected") {
    auto g = MetricGraph::build({vx("a"), vx("b")},
                                {ed("e1", "a", "b", 1.0), ed("e2", "a", "b", 1.0)});
    Mesh mesh = Mesh::uniform(g, 4);
    auto x = interpolate_on_mesh(g, mesh,
                                 [](int e, double) { return e == 0 ? 1.0 : 2.0; });
    CHECK_THROWS_MATCHES(quadratic_form_value(g, mesh, x), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Err::ConstraintViolation;
                         }));
  }
}

TEST_CASE("loop with delta-prime assembles both endpoints", "[solver]") {
  auto g = MetricGraph::build({vx("v", VertexCondition::delta_prime(0.5))},
                              {ed("l", "v", "v", 1.0)});
  Mesh mesh = Mesh::uniform(g, 1);
  auto a = assemble_forms(g, mesh);
  // 2 dofs; K = (1/h)[[1,-1],[-1,1]] + (1/α′)·ones(2,2) with h=1, 1/α′=2
  CHECK(a.K(0, 0) == Catch::Approx(3.0));
  CHECK(a.K(0, 1) == Catch::Approx(1.0));
  CHECK(a.K(1, 1) == Catch::Approx(3.0));
  CHECK(a.Crows.empty());
  CHECK(a.Zcols.size() == 2);
}

TEST_CASE("spectrum JSON shape", "[solver]") {
  auto g = interval(1.0, VertexCondition::dirichlet(), VertexCondition::dirichlet());
  auto s = solve_spectrum(g, 3, {16});
  json j = spectrum_to_json(s);
  CHECK(j.contains("eigenvalues"));
  CHECK(j.contains("error_estimates"));
  CHECK(j.contains("clusters"));
  CHECK(j["mesh"]["elements_per_edge"] == 16);
  CHECK(j["eigenvalues"].size() == 3);
}
