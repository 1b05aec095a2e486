#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace dpdeg;

namespace {

bool has_digon(const Digraph& d) {
  for (auto [u, v] : d.arcs())
    if (d.has_arc(v, u)) return true;
  return false;
}

// Strict m-degeneracy by the definition: every nonempty vertex subset has a
// vertex of out- or in-degree below m.
bool sd_oracle(const Digraph& d, int m) {
  std::vector<int> all(d.order());
  std::iota(all.begin(), all.end(), 0);
  return oracle::strictly_degenerate(d, std::vector<DegreePair>(d.order(), {m, m}), all);
}

}  // namespace

TEST_CASE("builtin properties") {
  auto ad = builtin("ad");
  CHECK(ad.contains(transitive_tournament(4)));
  CHECK_FALSE(ad.contains(directed_cycle(3)));
  CHECK(ad.strongly_reliable());

  auto sd2 = builtin("sd", 2);
  CHECK(sd2.name() == "sd:2");
  CHECK_FALSE(sd2.contains(bidirected_complete(3)));
  CHECK(sd2.contains(bidirected_path(4)));
  CHECK(builtin("sd:3").name() == "sd:3");

  CHECK_THROWS_AS(builtin("sd"), Error);
  CHECK_THROWS_AS(builtin("sd:0"), Error);
  CHECK_THROWS_AS(builtin("xyz"), Error);
}

TEST_CASE("ad coincides with sd:1 and sd:m matches the definition") {
  auto ad = builtin("ad");
  for (int n = 1; n <= 4; ++n)
    for (const auto& d : all_digraphs(n)) {
      CHECK(ad.contains(d) == sd_oracle(d, 1));
      for (int m = 1; m <= 3; ++m) CHECK(strictly_m_degenerate(d, m) == sd_oracle(d, m));
    }
}

TEST_CASE("CR membership") {
  auto ad = builtin("ad");
  for (int n = 2; n <= 6; ++n) CHECK(in_CR(ad, directed_cycle(n)));
  CHECK_FALSE(in_CR(ad, bidirected_complete(3)));
  CHECK_FALSE(in_CR(ad, bidirected_cycle(4)));
  CHECK_FALSE(in_CR(ad, transitive_tournament(3)));
  CHECK(in_CR(builtin("sd", 1), directed_cycle(2)));
  CHECK(in_CR(builtin("sd", 2), bidirected_complete(3)));
}

TEST_CASE("minimum degree pair of CR") {
  auto d = compute_d(builtin("ad"), 4);
  CHECK(d.value == DegreePair{1, 1});
  CHECK(d.exactness == DExactness::ClosedForm);
  for (int m = 1; m <= 3; ++m) {
    auto dm = compute_d(builtin("sd", m), 4);
    CHECK(dm.value == DegreePair{m, m});
    CHECK(dm.exactness == DExactness::ClosedForm);
  }

  auto no_digon = register_property("no-digon", [](const Digraph& g) { return !has_digon(g); },
                                    {true, true, true, true});
  auto nd = compute_d(no_digon, 3);
  CHECK(nd.value == DegreePair{1, 1});
  CHECK(nd.exactness == DExactness::SearchedUpperBound);
  CHECK(in_CR(no_digon, bidirected_complete(2)));
}

TEST_CASE("registration rejects properties that break their declared flags") {
  // Claims additivity, but two disjoint members are not a member.
  auto at_most_one = [](const Digraph& g) { return g.order() <= 1; };
  CHECK_THROWS_AS(register_property("tiny", at_most_one, {true, true, true, true}), Error);
  // Claims heredity but excludes K1.
  auto nonempty = [](const Digraph& g) { return g.order() != 1; };
  CHECK_THROWS_AS(register_property("odd", nonempty, {true, false, false, true}), Error);
}
