#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace dpdeg;

namespace {

Digraph bidirected_edges(int n, std::vector<std::pair<int, int>> edges) { return bidirect(n, edges); }

// Brute-force 2-connectivity of the underlying graph.
bool two_connected(const Digraph& d) {
  if (d.order() < 3 || !oracle::connected(d)) return false;
  for (int v = 0; v < d.order(); ++v)
    if (!oracle::connected(remove_vertex(d, v))) return false;
  return true;
}

}  // namespace

TEST_CASE("build rejects loops and parallel arcs are merged or rejected") {
  auto c3 = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  for (int v = 0; v < 3; ++v) CHECK(c3.degree(v) == DegreePair{1, 1});
  auto k2 = Digraph::build(2, {{0, 1}, {1, 0}});
  CHECK(k2.degree(0) == DegreePair{1, 1});
  CHECK(k2.degree(1) == DegreePair{1, 1});
  try {
    Digraph::build(1, {{0, 0}});
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopArc);
  }
  CHECK_THROWS_AS(Digraph::build(2, {{0, 2}}), Error);
}

TEST_CASE("degree profile") {
  auto empty = degree_profile(Digraph::build(0, {}));
  CHECK(empty.max == DegreePair{0, 0});
  CHECK(empty.min == DegreePair{0, 0});

  auto k3 = degree_profile(bidirected_complete(3));
  CHECK(k3.max == DegreePair{2, 2});
  CHECK(k3.min == DegreePair{2, 2});

  auto fig1 = Digraph::build(4, {{0, 1}, {0, 2}, {2, 1}, {3, 2}, {3, 1}});
  auto p = degree_profile(fig1);
  CHECK(p.degrees[0] == DegreePair{2, 0});
  CHECK(p.degrees[1] == DegreePair{0, 3});
  CHECK(p.degrees[2] == DegreePair{1, 2});
  CHECK(p.degrees[3] == DegreePair{2, 0});
}

TEST_CASE("blocks and cut vertices") {
  auto k4 = blocks(bidirected_complete(4));
  CHECK(k4.blocks == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(k4.cut_vertices.empty());

  auto p3 = blocks(bidirected_path(3));
  CHECK(p3.blocks == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(p3.cut_vertices == std::vector<int>{1});

  CHECK(blocks(directed_cycle(5)).blocks.size() == 1);
  CHECK(blocks(Digraph::build(1, {})).blocks == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("blocks agree with a vertex-deletion oracle on random digraphs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto d = oracle::random_connected(rng, n, 0.1);
    std::set<int> cuts;
    for (int v = 0; v < n; ++v)
      if (!oracle::connected(remove_vertex(d, v))) cuts.insert(v);
    auto bd = blocks(d);
    CHECK(std::vector<int>(cuts.begin(), cuts.end()) == bd.cut_vertices);
    for (const auto& b : bd.blocks) {
      auto sub = induced(d, b);
      CHECK((b.size() == 2 || two_connected(sub)));
    }
  }
}

TEST_CASE("2-connected decomposition cases") {
  CHECK(decompose_2connected(directed_cycle(4)).kind == DecompositionCase::Kind::Cycle);

  auto k4 = decompose_2connected(bidirected_complete(4));
  CHECK(k4.kind == DecompositionCase::Kind::RemovableVertex);
  CHECK(k4.vertex == 0);

  // Theta graph with three paths of length three between 0 and 1: no single
  // vertex is removable, so the case must be an ear.
  auto theta = bidirected_edges(8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
  auto c = decompose_2connected(theta);
  REQUIRE(c.kind == DecompositionCase::Kind::Path);
  REQUIRE(c.path.size() == 2);
  std::vector<int> rest;
  for (int v = 0; v < 8; ++v)
    if (std::find(c.path.begin(), c.path.end(), v) == c.path.end()) rest.push_back(v);
  CHECK(two_connected(induced(theta, rest)));
  for (int v : c.path) CHECK(theta.degree(v) == DegreePair{2, 2});
}

TEST_CASE("family classification") {
  CHECK(classify(bidirected_cycle(5)) == FamilyTag{FamilyTag::Kind::BidirectedCycle, 5});
  CHECK(classify(bidirected_complete(4)) == FamilyTag{FamilyTag::Kind::BidirectedComplete, 4});
  CHECK(classify(directed_cycle(3)).kind == FamilyTag::Kind::DirectedCycle);
  CHECK(classify(antidirected_cycle(6)) == FamilyTag{FamilyTag::Kind::AntidirectedCycle, 6});
  CHECK(classify(single_arc()).kind == FamilyTag::Kind::SingleArc);
  auto c3_plus = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}});
  CHECK(classify(c3_plus).kind == FamilyTag::Kind::Other);
}

TEST_CASE("eulerian and diregular") {
  auto a = eulerian_diregular(directed_cycle(4));
  CHECK(a.eulerian);
  CHECK(a.diregular_r == 1);
  auto b = eulerian_diregular(bidirected_complete(3));
  CHECK(b.eulerian);
  CHECK(b.diregular_r == 2);
  auto c = eulerian_diregular(single_arc());
  CHECK_FALSE(c.eulerian);
  CHECK_FALSE(c.diregular_r.has_value());
}

TEST_CASE("bidirect") {
  std::vector<std::pair<int, int>> k3{{0, 1}, {1, 2}, {0, 2}};
  CHECK(bidirect(3, k3).arc_count() == 6);
  CHECK(bidirect(3, k3) == bidirected_complete(3));
  std::vector<std::pair<int, int>> p3{{0, 1}, {1, 2}};
  CHECK(bidirect(3, p3).arc_count() == 4);
  CHECK(bidirect(0, {}).order() == 0);
}

TEST_CASE("digraph enumeration counts isomorphism classes") {
  // Known counts of unlabelled digraphs on n vertices.
  CHECK(all_digraphs(1).size() == 1);
  CHECK(all_digraphs(2).size() == 3);
  CHECK(all_digraphs(3).size() == 16);
  CHECK(all_digraphs(4).size() == 218);
  // Weakly connected ones.
  CHECK(connected_digraphs(2).size() == 2);
  CHECK(connected_digraphs(3).size() == 13);
  CHECK(connected_digraphs(4).size() == 199);
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto d = oracle::random_connected(rng, n, 0.3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(d) == canonical_code(relabel(d, perm)));
  }
  CHECK(canonical_code(directed_cycle(4)) != canonical_code(antidirected_cycle(4)));
}
