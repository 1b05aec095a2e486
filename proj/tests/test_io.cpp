#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace dpdeg;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("configuration text round-trips") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 200; ++it) {
    auto k = oracle::random_configuration(rng, 6, 3, 3);
    auto doc = parse_document(configuration_text("k", k));
    REQUIRE(doc.digraphs.size() == 1);
    REQUIRE(doc.covers.size() == 1);
    CHECK(doc.covers[0].base == "k_D");
    auto back = first_configuration(doc);
    CHECK(back.cover() == k.cover());
    CHECK(back.f() == k.f());
  }
}

TEST_CASE("documents with comments and several blocks") {
  auto doc = parse_document(R"(# two digraphs
digraph a
vertices 2
arc 0 1   # the only arc
end

digraph b
vertices 1
end
cover c
base a
fibre 0 : 0 1
fibre 1 : 2
harc 1 2
end
)");
  CHECK(doc.digraphs.size() == 2);
  REQUIRE(doc.digraph("b"));
  CHECK(doc.digraph("b")->order() == 1);
  CHECK_FALSE(doc.covers[0].f.has_value());
  CHECK(doc.covers[0].cover.h().has_arc(1, 2));
  CHECK_THROWS_AS(first_configuration(doc), Error);
}

TEST_CASE("a missing fibre line means an empty fibre") {
  auto doc = parse_document("digraph a\nvertices 2\narc 0 1\nend\ncover c\nbase a\nfibre 0 : 0\nend\n");
  CHECK(doc.covers[0].cover.fibre(1).empty());
}

TEST_CASE("parse errors") {
  CHECK(parse_error("digraph a\nvertices 2\narc 0 0\nend\n") == ErrorCode::LoopArc);
  CHECK(parse_error("digraph a\nvertices x\nend\n") == ErrorCode::ParseError);
  CHECK(parse_error("digraph a\nvertices 2\n") == ErrorCode::ParseError);
  CHECK(parse_error("graph a\n") == ErrorCode::ParseError);
  CHECK(parse_error("cover c\nbase nope\nend\n") == ErrorCode::ParseError);
  CHECK(parse_error("digraph a\nvertices 1\nend\nconfig c\nbase a\nfibre 0 : 0 1\nf 0 1 1\nend\n") ==
        ErrorCode::MissingF);
  CHECK(parse_error("digraph a\nvertices 1\nend\nconfig c\nbase a\nfibre 0 : 0\nf 0 0 0\nf 5 0 0\nend\n") ==
        ErrorCode::UnknownColor);
  CHECK(parse_error("digraph a\nvertices 1\nend\nconfig c\nbase a\nfibre 0 : 0\nf 0 -1 0\nend\n") ==
        ErrorCode::ParseError);
  CHECK(parse_error("digraph a\nvertices 2\narc 0 1\nend\ncover c\nbase a\nfibre 0 : 0 1\nfibre 1 : 2\n"
                    "harc 0 2\nharc 1 2\nend\n") == ErrorCode::NotAMatching);

  try {
    parse_document("digraph a\nvertices 1\n\nbogus\n");
  } catch (const Error& e) {
    CHECK(e.data() == std::vector<int>{4});
  }
}

TEST_CASE("DOT output lists every color and arc") {
  auto k = gen_c(5, Parity::Odd);
  std::ostringstream os;
  write_dot(os, k.cover(), &k.f());
  auto s = os.str();
  CHECK(s.rfind("digraph H {", 0) == 0);
  CHECK(s.find("cluster_4") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = s.find("->"); p != std::string::npos; p = s.find("->", p + 2)) ++arrows;
  CHECK(arrows == k.h().arc_count());
}
