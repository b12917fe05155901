#include <doctest.h>

#include <set>
#include <map>

#include "cgt/certify.hpp"
#include "cgt/search.hpp"

using namespace cgt;

TEST_CASE("scaffold parameter validation") {
  CHECK_THROWS_AS(build_scaffold(2, -1, "auto", Mode::cascade), std::invalid_argument);
  CHECK_THROWS_AS(build_scaffold(3, -1, "auto", Mode::index2), std::invalid_argument);
  CHECK_THROWS_AS(build_scaffold(1, 4, "auto", Mode::cascade), std::invalid_argument);
  CHECK_THROWS_AS(build_scaffold(2, 3, "auto", Mode::index2), std::invalid_argument);
  CHECK_THROWS_AS(build_scaffold(0, -1, "auto", Mode::cascade), std::invalid_argument);

  Scaffold s1 = build_scaffold(1, -1, "auto", Mode::cascade);
  CHECK(s1.rung_count == 0);
  CHECK(s1.group == GroupSpec({3, 12}));
  CHECK(s1.profile.order2 == 1);
  CHECK(s1.profile.order3 == 2);

  Scaffold s2 = build_scaffold(2, -1, "auto", Mode::index2);
  CHECK(s2.rung_count == 11);
  CHECK(s2.group == GroupSpec({3, 24}));
  CHECK(s2.profile.order2 == 2);

  Scaffold s3 = build_scaffold(3, -1, "auto", Mode::cascade);
  CHECK(s3.rung_count == 12);
}

TEST_CASE("s=1 skeleton has the forced degree profile") {
  Scaffold sc = build_scaffold(1, 0, "auto", Mode::cascade);
  CurrentGraph skel = scaffold_skeleton(sc);
  CHECK(skel.edges.size() == 18);
  std::map<int, int> degs;
  for (const auto& v : skel.vertices) degs[static_cast<int>(v.rot.size())]++;
  CHECK(degs[1] == 3);
  CHECK(degs[3] == 11);
  CHECK(skel.vertices.size() == 14);
}

TEST_CASE("s=3 skeleton carries consecutive rung currents") {
  Scaffold sc = build_scaffold(3, -1, "auto", Mode::cascade);
  CurrentGraph skel = scaffold_skeleton(sc);
  // handshake: E = 18s, V3 = 12s-1, V1 = 3
  CHECK(skel.edges.size() == 54);
  std::map<int, int> degs;
  for (const auto& v : skel.vertices) degs[static_cast<int>(v.rot.size())]++;
  CHECK(degs[1] == 3);
  CHECK(degs[3] == 35);
  // the rung currents form a consecutive second-component run, up to sign
  std::vector<int> seconds;
  for (const auto& e : skel.edges) {
    if (is_zero(e.cur)) continue;
    if (e.cur.r[0] != 0) continue;
    int b = e.cur.r[1];
    seconds.push_back(std::min(b, 36 - b));
  }
  std::sort(seconds.begin(), seconds.end());
  REQUIRE(seconds.size() == 12);
  for (int i = 0; i < 12; ++i) CHECK(seconds[i] == i + 1);
}

TEST_CASE("search finds an s=1 cascade whose pipeline certifies") {
  Scaffold sc = build_scaffold(1, -1, "auto", Mode::cascade);
  SearchOptions opt;
  opt.first_only = true;
  opt.node_cap_per_shape = 200000;
  opt.budget_seconds = 300;
  SearchOutcome res = search(sc, opt);
  REQUIRE(!res.solutions.empty());
  const CurrentGraph& g = res.solutions[0];
  CHECK(check_laws(g, Mode::cascade).pass());
  CHECK(!surface_orientable(g));
  Certificate c = certify(normalize_to_pure(derive_index1(g)));
  CHECK(c.pass);
  CHECK(c.genus == 88);
}

TEST_CASE("search is deterministic for fixed inputs") {
  Scaffold sc = build_scaffold(1, -1, "auto", Mode::cascade);
  SearchOptions opt;
  opt.max_solutions = 2;
  opt.node_cap_per_shape = 200000;
  opt.budget_seconds = 300;
  SearchOutcome a = search(sc, opt);
  SearchOutcome b = search(sc, opt);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i)
    CHECK(serialize(a.solutions[i]) == serialize(b.solutions[i]));
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("solutions come one per sign class") {
  Scaffold sc = build_scaffold(1, -1, "auto", Mode::cascade);
  SearchOptions opt;
  opt.max_solutions = 6;
  opt.node_cap_per_shape = 200000;
  opt.budget_seconds = 300;
  SearchOutcome res = search(sc, opt);
  REQUIRE(res.solutions.size() >= 2);
  std::set<std::string> seen;
  for (const auto& g : res.solutions) {
    CHECK(!seen.count(serialize(g)));
    CHECK(!seen.count(serialize(negate_all_currents(g))));
    seen.insert(serialize(g));
  }
}

TEST_CASE("even-only currents make the cascade search infeasible") {
  Scaffold sc = build_scaffold(1, -1, "auto", Mode::cascade);
  SearchOptions opt;
  opt.force_even_currents = true;
  opt.budget_seconds = 600;
  opt.node_cap_per_shape = 100000;
  SearchOutcome res = search(sc, opt);
  CHECK(res.solutions.empty());
  // nine odd slots per shape can never be filled
  CHECK(res.status != SearchStatus::found);
}

TEST_CASE("prune_partial flags Kirchhoff conflicts, repeats and log clashes") {
  Scaffold sc = build_scaffold(1, -1, "auto", Mode::cascade);
  CurrentGraph skel = scaffold_skeleton(sc);
  GroupSpec grp = skel.group;

  std::vector<std::optional<GroupElement>> none(skel.edges.size());
  CHECK(!prune_partial(skel, none, Mode::cascade).prune);

  // duplicate class up to sign
  auto dup = none;
  dup[0] = make_element(grp, {0, 1});
  dup[1] = make_element(grp, {0, 11});
  auto v = prune_partial(skel, dup, Mode::cascade);
  CHECK(v.prune);
  CHECK(v.reason.find("repeats up to sign") != std::string::npos);

  // a trivalent vertex fully assigned with nonzero excess
  auto bad = none;
  const auto& hub = skel.vertices[0];
  REQUIRE(hub.rot.size() == 3);
  int k = 0;
  for (Dart d : hub.rot)
    bad[skel.edge_pos(d.edge)] = make_element(grp, {1, ++k});
  auto v2 = prune_partial(skel, bad, Mode::cascade);
  CHECK(v2.prune);
  CHECK(v2.reason.find("Kirchhoff") != std::string::npos);

  // repeated log element within the single face
  auto clash = none;
  clash[0] = make_element(grp, {0, 1});
  // find another edge and give it the same entry value; tracing decides the
  // sign, so try both and expect at least one to clash
  bool found = false;
  for (std::size_t e = 1; e < skel.edges.size() && !found; ++e) {
    for (int sgn = 0; sgn < 2 && !found; ++sgn) {
      auto probe = clash;
      probe[e] = sgn ? negate(grp, *clash[0]) : *clash[0];
      auto vp = prune_partial(skel, probe, Mode::cascade);
      // class repetition triggers first by design; accept either reason
      found = vp.prune;
    }
  }
  CHECK(found);
}
