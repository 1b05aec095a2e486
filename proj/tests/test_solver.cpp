#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace dpdeg;

namespace {

SolveOptions core_only() {
  SolveOptions o;
  o.fallback = false;
  return o;
}

}  // namespace

TEST_CASE("brute force") {
  CHECK_FALSE(brute_force(gen_c(5, Parity::Odd)).has_value());

  auto fig4 = gen_c(6, Parity::Even);
  auto f = fig4.f();
  f[0] = {2, 2};
  auto raised = with_f(fig4, f);
  auto c = brute_force(raised);
  REQUIRE(c);
  CHECK(oracle::strictly_degenerate(raised.h(), raised.f(), c->transversal));
  CHECK(oracle::valid_order(raised.h(), raised.f(), c->order));

  std::vector<Arc> a{{0, 1}};
  auto t2 = Configuration(Cover::build(single_arc(), {{0}, {1}}, a), {{1, 0}, {0, 0}});
  CHECK_FALSE(brute_force(t2).has_value());

  BruteForceOptions tiny;
  tiny.budget = 3;
  try {
    brute_force(gen_k(5, {2, 1, 1}, 3), tiny);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("brute force matches the transversal oracle") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 1500; ++it) {
    auto k = oracle::random_configuration(rng, 5, 3, 2);
    auto want = oracle::colorable(k).has_value();
    CHECK(brute_force(k).has_value() == want);
    CHECK(brute_force(k, {50'000'000, true}).has_value() == want);
  }
}

TEST_CASE("solve examples") {
  auto fig3 = solve(gen_c(5, Parity::Odd), core_only());
  REQUIRE_FALSE(fig3.colored());
  CHECK(fig3.certificate.kind == Certificate::Kind::OddC);

  // f = (1,0) everywhere is colorable but not degree-feasible, so only the
  // exhaustive search accepts it.
  auto c3 = Configuration(constant_list_cover(directed_cycle(3), 2), VertexFunction(6, {1, 0}));
  auto bf = brute_force(c3);
  REQUIRE(bf);
  CHECK(oracle::strictly_degenerate(c3.h(), c3.f(), bf->transversal));
  CHECK_THROWS_AS(solve(c3), Error);

  c3 = with_f(c3, VertexFunction(6, {1, 1}));
  auto v = solve(c3, core_only());
  REQUIRE(v.colored());
  CHECK(verify(c3, v));
  CHECK(oracle::strictly_degenerate(c3.h(), c3.f(), v.coloring.transversal));

  auto fig1 = gen_m(Digraph::build(4, {{0, 1}, {0, 2}, {2, 1}, {3, 2}, {3, 1}}));
  auto m = solve(fig1, core_only());
  REQUIRE_FALSE(m.colored());
  CHECK(m.certificate.kind == Certificate::Kind::M);
}

TEST_CASE("solve rejects ineligible input") {
  auto two = Digraph::build(2, {});
  auto c = Cover::build(two, {{0}, {1}}, {});
  try {
    solve(Configuration(c, VertexFunction(2, {1, 1})));
    FAIL("disconnected input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnected);
  }
  auto c3 = Configuration(constant_list_cover(directed_cycle(3), 1), VertexFunction(3, {1, 0}));
  try {
    solve(c3);
    FAIL("infeasible input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDegreeFeasible);
  }
}

TEST_CASE("core verdicts agree with the oracle and verify") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 3000; ++it) {
    auto k = oracle::random_configuration(rng, 6, 3, 3);
    auto v = solve(k, core_only());
    CHECK(v.colored() == oracle::colorable(k).has_value());
    auto ok = verify(k, v);
    INFO(ok.reason);
    CHECK(ok);
  }
}

TEST_CASE("verification rejects tampered verdicts") {
  auto fig3 = gen_c(5, Parity::Odd);
  auto v = solve(fig3, core_only());
  REQUIRE(verify(fig3, v));

  auto bad = v;
  bad.certificate.n = 4;
  auto r = verify(fig3, bad);
  CHECK_FALSE(r);
  CHECK(r.reason == "BadParity");

  auto swapped = v;
  std::swap(swapped.certificate.layers[0][0], swapped.certificate.layers[1][0]);
  CHECK_FALSE(verify(fig3, swapped));

  auto c3 = Configuration(constant_list_cover(directed_cycle(3), 2), VertexFunction(6, {1, 1}));
  auto col = solve(c3, core_only());
  REQUIRE(col.colored());
  auto skipped = col;
  skipped.coloring.order.pop_back();
  CHECK_FALSE(verify(c3, skipped));

  // A coloring claimed for an uncolorable configuration cannot verify.
  Verdict fake;
  fake.coloring = {{0, 2, 4, 6, 8}, {0, 2, 4, 6, 8}};
  CHECK_FALSE(verify(fig3, fake));
}

TEST_CASE("certificates round-trip through text") {
  auto k = merge(gen_c(5, Parity::Odd), 0, gen_c(6, Parity::Even), 0);
  auto v = solve(k, core_only());
  REQUIRE_FALSE(v.colored());
  auto text = to_sexpr(v.certificate);
  CHECK(parse_certificate(text) == v.certificate);
  CHECK(verify_certificate(k, parse_certificate(text)));
}

TEST_CASE("fallback cross-check") {
  SolveStats st;
  SolveOptions o;
  o.fallback = true;
  auto k = gen_k(4, {2, 1}, 2);
  auto v = solve(k, o, &st);
  CHECK_FALSE(v.colored());
  CHECK_FALSE(st.fallback_used);
  CHECK(st.calls >= 1);
}
