#include "doctest.h"
#include "tessella/wang.hpp"

using namespace tessella;

namespace {
// east, south, west, north
WangInstance mono() { return {{"r"}, {{0, 0, 0, 0}}}; }
WangInstance mismatched() { return {{"r", "b"}, {{0, 0, 1, 0}}}; }
WangInstance two_cycle() { return {{"r", "b"}, {{0, 0, 1, 0}, {1, 0, 0, 0}}}; }
}  // namespace

TEST_CASE("wang_check") {
    WangAssignment win;
    win.lo = {0, 0};
    win.hi = {2, 2};
    win.squares.assign(9, 0);
    CHECK(!wang_check(mono(), win));

    WangAssignment pair;
    pair.lo = {0, 0};
    pair.hi = {1, 0};
    pair.squares = {0, 0};
    auto v = wang_check(mismatched(), pair);
    REQUIRE(v);
    CHECK(v->horizontal);
    CHECK(v->pos == Vec{0, 0});

    WangAssignment cyc;
    cyc.torus = diagonal_lattice({2, 1});
    cyc.squares = {0, 1};
    CHECK(!wang_check(two_cycle(), cyc));
}

TEST_CASE("wang_solve_periodic") {
    auto a = wang_solve_periodic(mono(), 1, 1);
    REQUIRE(a);
    CHECK(!wang_check(mono(), *a));

    CHECK(!wang_solve_periodic(mismatched(), 1, 1));
    CHECK(!wang_solve_periodic(mismatched(), 3, 2));
    CHECK(!wang_solve_periodic(two_cycle(), 1, 1)); // odd width cannot close

    auto c = wang_solve_periodic(two_cycle(), 2, 1);
    REQUIRE(c);
    CHECK(!wang_check(two_cycle(), *c));

    CHECK_THROWS_AS(wang_solve_periodic(mono(), 100, 100, 50), budget_error);
}

TEST_CASE("golomb encoding shape") {
    GolombEncoding enc = golomb_encode(two_cycle());
    CHECK(enc.K == 10); // 2*2 + 6
    REQUIRE(enc.system.tiles.size() == 2);
    for (const Tile& t : enc.system.tiles) CHECK(t.size() == enc.K * enc.K);
    CHECK(enc.system.tiles[0].points != enc.system.tiles[1].points);
    CHECK(golomb_encode(mono()).K == 8);
}

TEST_CASE("encode/solve/decode round trip, tileable") {
    GolombEncoding enc = golomb_encode(mono());
    auto cert = solve_periodic(enc.system, diagonal_lattice({enc.K, enc.K}));
    REQUIRE(cert);
    CHECK(cert->verified);
    WangAssignment a = decode_tiling(enc, *cert);
    CHECK(a.torus == diagonal_lattice({1, 1}));
    CHECK(!wang_check(enc.instance, a));

    GolombEncoding enc2 = golomb_encode(two_cycle());
    auto cert2 = solve_periodic(enc2.system, diagonal_lattice({2 * enc2.K, enc2.K}));
    REQUIRE(cert2);
    WangAssignment a2 = decode_tiling(enc2, *cert2);
    CHECK(a2.torus == diagonal_lattice({2, 1}));
    CHECK(!wang_check(enc2.instance, a2));
    CHECK(a2.squares[0] != a2.squares[1]); // the two squares alternate
}

TEST_CASE("mismatched encoding admits a box obstruction") {
    GolombEncoding enc = golomb_encode(mismatched());
    CHECK(!solve_periodic(enc.system, diagonal_lattice({enc.K, enc.K})));
    CHECK(box_obstruction(enc.system, enc.K));
}

TEST_CASE("solve_encoded mirrors the Wang side") {
    CHECK(solve_encoded(golomb_encode(mono()), 1).kind == SemiResult::Kind::tileable);
    SemiResult r = solve_encoded(golomb_encode(two_cycle()), 2);
    CHECK(r.kind == SemiResult::Kind::tileable);
    CHECK(solve_encoded(golomb_encode(mismatched()), 1).kind ==
          SemiResult::Kind::not_tileable);
}

TEST_CASE("corrupted certificates are rejected") {
    GolombEncoding enc = golomb_encode(mono());
    auto cert = solve_periodic(enc.system, diagonal_lattice({enc.K, enc.K}));
    REQUIRE(cert);
    TilingCertificate bad = *cert;
    bad.solution[0] = translate(bad.solution[0], make_element(make_group(2), {1, 0}));
    CHECK_THROWS_AS(decode_tiling(enc, bad), error);
    TilingCertificate off = *cert;
    off.solution[0].lattice = diagonal_lattice({enc.K, enc.K - 1});
    CHECK_THROWS_AS(decode_tiling(enc, off), error);
}
