#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "flagsolve/triangulation.hpp"

using namespace flagsolve;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

std::set<std::tuple<int, int, int>> edge_set(const EdgeClass& ec) {
    std::set<std::tuple<int, int, int>> s;
    for (const auto& e : ec.cycle) s.insert({e.tet, e.from, e.to});
    return s;
}

}  // namespace

TEST_CASE("two-tetrahedron knot complement parses and validates") {
    Triangulation t = load_triangulation(fixture("m004.tri"));
    CHECK(t.name == "m004");
    CHECK(t.num_tets == 2);
    REQUIRE(t.pairings.size() == 4);
    REQUIRE(t.cusps.size() == 1);
    CHECK(t.cusps[0].meridian.size() == 4);
    CHECK(t.cusps[0].longitude.size() == 16);
    REQUIRE(t.base_face.has_value());
    CHECK(*t.base_face == PathState{0, {2, 3, 4}});
    REQUIRE(t.generators.size() == 3);
    CHECK(t.generators[0].path.size() == 7);
    CHECK(t.generators[0].conjugator.size() == 5);
    CHECK(t.generators[1].path.size() == 8);
    CHECK(t.generators[2].path.size() == 7);
    CHECK(t.generators[2].conjugator.size() == 4);
    validate_triangulation(t);

    CHECK(t.cusps[0].meridian.front() == PathState{1, {4, 2, 1}});
    CHECK(t.cusps[0].meridian.back() == PathState{0, {3, 1, 4}});
    CHECK(t.pairings[0].tet_a == 0);
    CHECK(t.pairings[0].face_a == std::array<int, 3>{2, 3, 4});
    CHECK(t.pairings[0].tet_b == 1);
    CHECK(t.pairings[0].face_b == std::array<int, 3>{2, 4, 3});
}

TEST_CASE("crossing a pairing maps ordered triples vertexwise") {
    Triangulation t = load_triangulation(fixture("m004.tri"));
    // Stated direction of the first pairing: 2->2, 3->4, 4->3.
    auto side = find_pairing(t, 0, {2, 3, 4});
    REQUIRE(side.has_value());
    CHECK(side->index == 0);
    CHECK_FALSE(side->reversed);
    CHECK(map_across(t, *side, PathState{0, {2, 3, 4}}) == PathState{1, {2, 4, 3}});
    CHECK(map_across(t, *side, PathState{0, {3, 2, 4}}) == PathState{1, {4, 2, 3}});
    // Reverse direction, and the fourth vertex also maps across (1 -> 1).
    auto back = find_pairing(t, 1, {4, 2, 3});
    REQUIRE(back.has_value());
    CHECK(back->index == 0);
    CHECK(back->reversed);
    CHECK(map_across(t, *back, PathState{1, {4, 2, 3}}) == PathState{0, {3, 2, 4}});
    CHECK(map_across(t, *back, PathState{1, {1, 2, 3}}) == PathState{0, {1, 2, 4}});
}

TEST_CASE("missing vertex and state formatting") {
    PathState s{0, {3, 2, 4}};
    CHECK(s.missing_vertex() == 1);
    CHECK(s.str() == "(0:324)");
    CHECK(PathState{1, {4, 2, 1}}.missing_vertex() == 3);
}

TEST_CASE("edge cycles close with length six") {
    Triangulation t = load_triangulation(fixture("m004.tri"));
    auto classes = edge_classes(t);
    REQUIRE(classes.size() == 4);
    for (const auto& ec : classes) CHECK(ec.cycle.size() == 6);

    // First cycle, walked by hand through the four pairings.
    const std::vector<TetEdge> expect0 = {{0, 1, 2}, {1, 3, 4}, {0, 4, 3},
                                          {1, 1, 4}, {0, 4, 2}, {1, 3, 2}};
    REQUIRE(classes[0].cycle.size() == expect0.size());
    for (std::size_t k = 0; k < expect0.size(); ++k) CHECK(classes[0].cycle[k] == expect0[k]);

    // The four cycles, as sets of oriented edges, are the two geometric
    // edges in both vertex orientations.
    std::set<std::set<std::tuple<int, int, int>>> got;
    for (const auto& ec : classes) got.insert(edge_set(ec));
    auto as_set = [](std::vector<TetEdge> v) {
        EdgeClass ec;
        ec.cycle = std::move(v);
        return edge_set(ec);
    };
    std::set<std::set<std::tuple<int, int, int>>> want;
    want.insert(as_set({{0, 2, 3}, {1, 2, 4}, {0, 1, 3}, {1, 3, 1}, {0, 1, 4}, {1, 2, 1}}));
    want.insert(as_set({{0, 3, 2}, {1, 4, 2}, {0, 3, 1}, {1, 1, 3}, {0, 4, 1}, {1, 1, 2}}));
    want.insert(as_set({{0, 2, 4}, {1, 2, 3}, {0, 2, 1}, {1, 4, 3}, {0, 3, 4}, {1, 4, 1}}));
    want.insert(as_set({{0, 4, 2}, {1, 3, 2}, {0, 1, 2}, {1, 3, 4}, {0, 4, 3}, {1, 1, 4}}));
    CHECK(got == want);

    // All 24 oriented edges are covered exactly once.
    std::set<std::tuple<int, int, int>> all;
    std::size_t total = 0;
    for (const auto& ec : classes) {
        total += ec.cycle.size();
        for (const auto& e : ec.cycle) all.insert({e.tet, e.from, e.to});
    }
    CHECK(total == 24);
    CHECK(all.size() == 24);
}

TEST_CASE("json mirror round-trips") {
    Triangulation t = load_triangulation(fixture("m004.tri"));
    const std::string j = triangulation_to_json(t);
    Triangulation u = triangulation_from_json(j);
    CHECK(triangulation_to_json(u) == j);
    validate_triangulation(u);
    CHECK(u.num_tets == t.num_tets);
    CHECK(u.cusps[0].longitude.size() == 16);
    CHECK(u.generators.size() == 3);
}

TEST_CASE("malformed inputs are rejected with reasons") {
    // Unknown keyword.
    CHECK_THROWS_WITH_AS(parse_triangulation("frobnicate 3\n"),
                         doctest::Contains("line 1"), std::runtime_error);
    // Bad vertex label.
    CHECK_THROWS_AS(parse_triangulation("cusp 0\nmeridian (0:125)\n"), std::runtime_error);
    // Wrong arity in a pairing.
    CHECK_THROWS_AS(parse_triangulation("pair (0 1 2 3) (1 2 3)\n"), std::runtime_error);

    // Structural: a face glued twice.
    Triangulation t = load_triangulation(fixture("m004.tri"));
    Triangulation broken = t;
    broken.pairings[1] = broken.pairings[0];
    CHECK_THROWS_WITH_AS(validate_triangulation(broken), doctest::Contains("glued"),
                         std::runtime_error);

    // Orientation-incompatible gluing (identity vertex map is even).
    broken = t;
    broken.pairings[0].face_b = {2, 3, 4};
    broken.pairings[0].tet_b = 1;
    CHECK_THROWS_WITH_AS(validate_triangulation(broken),
                         doctest::Contains("orientation"), std::runtime_error);

    // A peripheral path with an illegal jump.
    broken = t;
    broken.cusps[0].meridian[1] = PathState{0, {1, 2, 3}};
    CHECK_THROWS_WITH_AS(validate_triangulation(broken), doctest::Contains("illegal step"),
                         std::runtime_error);
}

TEST_CASE("legal internal moves are reorderings or fourth-vertex swaps") {
    Triangulation t = load_triangulation(fixture("m004.tri"));
    // Build a tiny closed path exercising a rotation, a swap, and crossings:
    // rotate (0:234)->(0:342), swap 1 in for 2 (missing vertex of {3,4,2}),
    // cross, rotate back.
    std::vector<PathState> loop = {{0, {2, 3, 4}}, {0, {3, 4, 2}}};
    Triangulation probe = t;
    probe.cusps.clear();
    probe.generators.clear();
    Cusp c;
    c.meridian = {PathState{0, {2, 3, 4}}, PathState{1, {2, 4, 3}},
                  PathState{1, {4, 3, 2}}, PathState{1, {2, 4, 3}},
                  PathState{0, {2, 3, 4}}, PathState{0, {3, 4, 2}}};
    c.longitude = c.meridian;
    probe.cusps.push_back(c);
    validate_triangulation(probe);  // every step above is legal
}
