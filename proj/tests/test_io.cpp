#include "doctest.h"
#include "tessella/io.hpp"
#include "tessella/solver.hpp"

using namespace tessella;

namespace {
// serialize -> parse -> serialize must be byte-identical
void roundtrip(const Manifest& m) {
    std::string s = serialize_manifest(m);
    Manifest back = parse_manifest(s);
    CHECK(back.kind == m.kind);
    CHECK(serialize_manifest(back) == s);
}

Tile t2(std::vector<Vec> pts) {
    GroupSpec g = make_group(2);
    std::vector<GroupElement> es;
    for (Vec& p : pts) es.push_back(make_element(g, std::move(p)));
    return make_tile(g, std::move(es));
}
}  // namespace

TEST_CASE("manifest envelope") {
    Manifest m = make_manifest("tile", {{"x", 1}});
    std::string s = serialize_manifest(m);
    CHECK(s.back() == '\n');
    CHECK(s.find("\"schema_version\":1") != std::string::npos);
    roundtrip(m);

    CHECK_THROWS_AS(parse_manifest("{\"kind\":\"tile\"}"), format_error);
    CHECK_THROWS_AS(parse_manifest("[1,2]"), format_error);
    CHECK_THROWS_AS(
        parse_manifest("{\"schema_version\":2,\"kind\":\"x\",\"payload\":{}}"),
        format_error);
    CHECK_THROWS_AS(
        parse_manifest("{\"schema_version\":1,\"kind\":3,\"payload\":{}}"),
        format_error);

    try {
        parse_manifest("{\n  \"kind\": oops\n}");
        FAIL("expected a parse error");
    } catch (const format_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 1);
    }
}

TEST_CASE("group, lattice, element payloads") {
    GroupSpec g = make_group(2, {3});
    CHECK(group_from_json(to_json(g)).torsion == std::vector<i64>{3});
    CHECK_THROWS_AS(group_from_json(json{{"torsion", {2}}}), format_error);
    CHECK_THROWS_AS(group_from_json(json{{"d", -1}}), format_error);

    Lattice lat = lattice_from_columns(2, {{2, 1}, {0, 3}});
    Lattice back = lattice_from_json(to_json(lat));
    CHECK(back == lat);
    CHECK(back.index() == 6);
    CHECK_THROWS_AS(lattice_from_json(json::array({{1, 2}})), format_error);
    CHECK_THROWS_AS(lattice_from_json(json::array({{1, 0}, {0, 0}})), format_error);

    GroupElement e = make_element(g, {4, -2}, {2});
    json je = to_json(g, e);
    CHECK(je == json::array({4, -2, 2}));
    CHECK(element_from_json(g, je) == e);
    CHECK_THROWS_AS(element_from_json(g, json::array({1, 2})), format_error);
}

TEST_CASE("tile and system round trips") {
    Tile f = t2({{0, 0}, {1, 0}, {0, 2}});
    Tile back = tile_from_json(to_json(f));
    CHECK(back == f);
    roundtrip(make_manifest("tile", to_json(f)));

    TileSystem sys = make_system({f, t2({{0, 0}, {1, 1}})}, 2);
    TileSystem sback = system_from_json(to_json(sys));
    CHECK(sback.level == 2);
    CHECK(sback.tiles == sys.tiles);
    roundtrip(make_manifest("system", to_json(sys)));

    CHECK_THROWS_AS(tile_from_json(json{{"group", to_json(f.group)}}), format_error);
    CHECK_THROWS_AS(system_from_json(json{{"tiles", json::array()}}), format_error);
    CHECK_THROWS_AS(
        system_from_json(json{{"level", 0}, {"tiles", {to_json(f)}}}), format_error);
}

TEST_CASE("periodic set round trip") {
    GroupSpec g = make_group(2);
    PeriodicSet a = make_periodic_set(g, lattice_from_columns(2, {{2, 0}, {1, 2}}),
                                      {0, 2});
    PeriodicSet back = periodic_set_from_json(to_json(a));
    CHECK(back == a);
    roundtrip(make_manifest("periodic_set", to_json(a)));

    json j = to_json(a);
    j["points"].push_back(j["points"][0]); // duplicate residue
    CHECK_THROWS_AS(periodic_set_from_json(j), format_error);
}

TEST_CASE("window run-length encoding") {
    WindowSet w = make_window({-2, 0}, {2, 1}, [](const Vec& x) {
        return mod_floor(x[0] + x[1], 2) == 0;
    });
    json j = to_json(w);
    CHECK(j["rows"].size() == 2);
    // row y=0 over x=-2..2: 1,0,1,0,1 -> leading zero-run of 0
    CHECK(j["rows"][0] == json::array({0, 1, 1, 1, 1, 1}));
    WindowSet back = window_from_json(j);
    CHECK(back.membership == w.membership);
    CHECK(back.lo == w.lo);
    roundtrip(make_manifest("window", j));

    json short_row = j;
    short_row["rows"][1] = json::array({0, 1});
    CHECK_THROWS_AS(window_from_json(short_row), format_error);
    json few_rows = j;
    few_rows["rows"].erase(1);
    CHECK_THROWS_AS(window_from_json(few_rows), format_error);
}

TEST_CASE("wang payloads") {
    WangInstance w;
    w.colors = {"r", "b"};
    w.squares = {{0, 0, 1, 0}, {1, 0, 0, 0}};
    json j = to_json(w);
    CHECK(j["squares"][0] == json::array({"r", "r", "b", "r"}));
    WangInstance back = wang_from_json(j);
    CHECK(back.colors == w.colors);
    CHECK(back.squares.size() == 2);
    CHECK(back.squares[1].east == 1);
    roundtrip(make_manifest("wang", j));

    json unknown = j;
    unknown["squares"][0][0] = "g";
    CHECK_THROWS_AS(wang_from_json(unknown), format_error);

    WangAssignment torus;
    torus.torus = lattice_from_columns(2, {{2, 0}, {0, 1}});
    torus.squares = {0, 1};
    WangAssignment tb = wang_assignment_from_json(to_json(torus));
    CHECK(tb.torus == torus.torus);
    CHECK(tb.squares == torus.squares);

    WangAssignment win;
    win.lo = {0, 0};
    win.hi = {1, 0};
    win.squares = {1, 0};
    WangAssignment wb = wang_assignment_from_json(to_json(win));
    CHECK(!wb.torus);
    CHECK(wb.hi == win.hi);
    json wrong = to_json(win);
    wrong["squares"].push_back(0);
    CHECK_THROWS_AS(wang_assignment_from_json(wrong), format_error);
}

TEST_CASE("sudoku payloads") {
    PadicContext ctx = make_padic(3);
    SudokuWindow s = standard_solution(ctx, -1, 2);
    SudokuWindow back = sudoku_from_json(to_json(s));
    CHECK(back.m0 == -1);
    CHECK(back.cells == s.cells);
    roundtrip(make_manifest("sudoku", to_json(s)));

    json j = to_json(s);
    j["cells"][0][0] = 0; // outside Sigma_p
    CHECK_THROWS_AS(sudoku_from_json(j), format_error);
    json bad_p = to_json(s);
    bad_p["p"] = 4;
    CHECK_THROWS_AS(sudoku_from_json(bad_p), format_error);
}

TEST_CASE("coloring payloads") {
    ColoringInstance inst = make_coloring({{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}, 2,
                                          {0, 1}, {{{0, 0}, 0, 0}, {{1, 1}, 1, 1}});
    json j = to_json(inst);
    ColoringInstance back = coloring_from_json(j);
    CHECK(back.dirs == inst.dirs);
    CHECK(back.N == 2);
    CHECK(back.table == inst.table);
    CHECK(back.omega({0, 0}, 0, 0));
    CHECK(!back.omega({0, 1}, 0, 0));
    roundtrip(make_manifest("coloring", j));

    ColoringInstance sud = coloring_from_json(json{{"name", "sudoku_p3"}});
    CHECK(sud.N == 3);
    CHECK(sud.dirs.size() == 9);
    CHECK(to_json(sud) == json{{"name", "sudoku_p3"}});
    CHECK_THROWS_AS(coloring_from_json(json{{"name", "sudoku_p4"}}), format_error);
    CHECK_THROWS_AS(coloring_from_json(json{{"name", "mystery"}}), format_error);

    json mism = j;
    mism["orthos"] = json::array({std::vector<i64>{1, 1}, std::vector<i64>{0, 1}});
    CHECK_THROWS_AS(coloring_from_json(mism), format_error);
}
