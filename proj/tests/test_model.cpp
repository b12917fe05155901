#include <doctest.h>

#include <algorithm>

#include "cgt/model.hpp"
#include "cgt/tracer.hpp"
#include "oracle_tracer.hpp"
#include "rng.hpp"

using namespace cgt;

namespace {

const char* kTwoVertexFile =
    "group 3 12\n"
    "index 1\n"
    "v 1 : e1.0\n"
    "v 2 : e1.1\n"
    "e 1 sig +1 cur (0,6)\n";

std::vector<int> face_lengths(const CurrentGraph& g) {
  std::vector<int> lens;
  for (const auto& f : trace_faces(g)) lens.push_back(static_cast<int>(f.steps.size()));
  std::sort(lens.begin(), lens.end());
  return lens;
}

}  // namespace

TEST_CASE("one-edge file parses to V=2, E=1") {
  CurrentGraph g = parse_current_graph(kTwoVertexFile);
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.declared_index == 1);
  CHECK(g.edge(1).cur == make_element(g.group, {0, 6}));
  CHECK(g.degree(1) == 1);
}

TEST_CASE("duplicate dart is rejected") {
  const char* text =
      "group 3 12\n"
      "v 1 : e1.0 e1.0\n"
      "v 2 : e1.1\n"
      "e 1 sig +1 cur (0,6)\n";
  CHECK_THROWS_AS(parse_current_graph(text), ParseError);
}

TEST_CASE("dangling dart is rejected") {
  const char* text =
      "group 3 12\n"
      "v 1 : e1.0\n"
      "e 1 sig +1 cur (0,6)\n";
  CHECK_THROWS_AS(parse_current_graph(text), ParseError);
}

TEST_CASE("unknown group element is a parse error with position") {
  const char* text =
      "group 3 12\n"
      "v 1 : e1.0\n"
      "v 2 : e1.1\n"
      "e 1 sig +1 cur (0,99)\n";
  try {
    parse_current_graph(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.col > 1);
  }
}

TEST_CASE("syntax error carries line and column") {
  try {
    parse_current_graph("group 3 12\nv 1 cw what\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("cw and ccw expand the declared neighbor order") {
  const char* cw =
      "group 3 12\n"
      "v 1 cw e1.0 e2.0 e3.0\n"
      "v 2 : e1.1 e2.1 e3.1\n"
      "e 1 sig +1 cur (0,1)\n"
      "e 2 sig +1 cur (0,2)\n"
      "e 3 sig +1 cur (0,3)\n";
  std::string ccw(cw);
  ccw.replace(ccw.find("cw"), 2, "ccw");
  CurrentGraph a = parse_current_graph(cw);
  CurrentGraph b = parse_current_graph(ccw);
  auto ra = a.vertex(1).rot;
  auto rb = b.vertex(1).rot;
  std::reverse(rb.begin(), rb.end());
  CHECK(ra == rb);
}

TEST_CASE("serialize canonicalizes and round-trips") {
  // rotation written starting from a non-smallest dart on purpose
  const char* text =
      "group 3 12\n"
      "index 1\n"
      "v 1 : e2.0 e3.0 e1.0\n"
      "v 2 : e1.1 e2.1 e3.1\n"
      "e 2 sig -1 cur (1,2)\n"
      "e 1 sig +1 cur (0,1)\n"
      "e 3 sig +1 cur (0,3)\n";
  CurrentGraph g = parse_current_graph(text);
  std::string s1 = serialize(g);
  CurrentGraph h = parse_current_graph(s1);
  std::string s2 = serialize(h);
  CHECK(s1 == s2);
  // canonical rotations start at the smallest dart
  CHECK(s1.find("v 1 : e1.0") != std::string::npos);
  // cyclic order preserved: e1.0 -> e2.0 -> e3.0
  CHECK(s1.find("v 1 : e1.0 e2.0 e3.0\n") != std::string::npos);
}

TEST_CASE("empty graph serializes to a header-only file") {
  CurrentGraph g = parse_current_graph("group 3 12\nindex 2\n");
  CHECK(serialize(g) == "group 3 12\nindex 2\n");
}

TEST_CASE("flip is an involution and toggles incident signatures") {
  CurrentGraph g = parse_current_graph(kTwoVertexFile);
  CurrentGraph f = apply_flip(g, 1);
  CHECK(f.edge(1).sig == -1);
  CurrentGraph ff = apply_flip(f, 1);
  CHECK(serialize(ff) == serialize(g));
  CHECK_THROWS_AS(apply_flip(g, 99), std::invalid_argument);
}

TEST_CASE("flip preserves the face-length multiset on random graphs") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    CurrentGraph g = random_embedded_graph(seed, 10);
    auto before = face_lengths(g);
    TestRng rng(seed * 977);
    int vid = g.vertices[rng.below(static_cast<int>(g.vertices.size()))].id;
    auto after = face_lengths(apply_flip(g, vid));
    CHECK(before == after);
  }
}

TEST_CASE("sum of rotation lengths is twice the edge count") {
  for (uint64_t seed = 100; seed < 120; ++seed) {
    CurrentGraph g = random_embedded_graph(seed, 12);
    std::size_t total = 0;
    for (const auto& v : g.vertices) total += v.rot.size();
    CHECK(total == 2 * g.edges.size());
  }
}

TEST_CASE("relabeling keeps the graph valid") {
  CurrentGraph g = parse_current_graph(kTwoVertexFile);
  CurrentGraph h = relabel(g, {{1, 7}, {2, 3}}, {{1, 5}});
  CHECK(h.vertex_pos(7) >= 0);
  CHECK(h.edge_pos(5) >= 0);
  CHECK(h.vertex(3).rot[0].edge == 5);
}
