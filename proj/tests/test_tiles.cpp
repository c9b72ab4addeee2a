#include <random>

#include "doctest.h"
#include "tessella/tiles.hpp"

using namespace tessella;

namespace {
Tile t2(std::vector<Vec> pts) {
    GroupSpec g = make_group(2);
    std::vector<GroupElement> es;
    for (Vec& p : pts) es.push_back(make_element(g, std::move(p)));
    return make_tile(g, std::move(es));
}

Tile t1(Vec xs) {
    GroupSpec g = make_group(1);
    std::vector<GroupElement> es;
    for (i64 x : xs) es.push_back(make_element(g, {x}));
    return make_tile(g, std::move(es));
}
}  // namespace

TEST_CASE("normalization and reflection") {
    CHECK(t1({5, 7, 8}) == t1({0, 2, 3}));
    CHECK(reflect(t1({0, 2, 3})) == t1({0, 1, 3}));
    CHECK(reflect(t2({{0, 0}, {0, 1}, {1, 0}, {1, 1}})) ==
          t2({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    CHECK(reflect(t2({{0, 0}, {1, 0}, {0, 2}})) == t2({{1, 2}, {0, 2}, {1, 0}}));

    std::mt19937_64 rng(777);
    std::uniform_int_distribution<i64> d(-6, 6);
    for (int it = 0; it < 100; ++it) {
        std::vector<Vec> pts;
        for (int k = 0; k < 4; ++k) pts.push_back({d(rng), d(rng)});
        Tile f = t2(pts);
        CHECK(reflect(reflect(f)) == f);
    }
}

TEST_CASE("dilation") {
    Tile sq = t2({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(dilate(sq, 5).points ==
          t2({{0, 0}, {0, 5}, {5, 0}, {5, 5}}).points);
    CHECK(dilate(sq, 1) == sq);
    Tile f = t1({0, 2, 3});
    Tile neg = dilate(f, -1);
    std::vector<i64> xs;
    for (const GroupElement& p : neg.points) xs.push_back(p.free[0]);
    CHECK(xs == std::vector<i64>{-3, -2, 0});
    CHECK_THROWS_AS(dilate(f, 0), error);

    // torsion collision: r = 2 not coprime to Z/2
    GroupSpec g = make_group(1, {2});
    Tile tor = make_tile(g, {make_element(g, {0}, {0}), make_element(g, {0}, {1})});
    CHECK_THROWS_AS(dilate(tor, 2), error);
    CHECK(dilate(tor, 3).size() == 2);
}

TEST_CASE("slices and support") {
    Tile sq = t2({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(slices(sq).slices.size() == 4);
    CHECK(support(sq).size() == 4);

    GroupSpec g = make_group(2, {2});
    Tile mix = make_tile(g, {make_element(g, {0, 0}, {0}), make_element(g, {0, 0}, {1}),
                             make_element(g, {1, 0}, {0})});
    SliceMap sm = slices(mix);
    CHECK(sm.support() == std::vector<Vec>{{0, 0}, {1, 0}});
    CHECK(sm.slices.at({0, 0}).size() == 2);

    // union of slices recovers the tile
    i64 total = 0;
    for (const auto& [x, fib] : sm.slices) total += static_cast<i64>(fib.size());
    CHECK(total == mix.size());
}

TEST_CASE("direction sets in canonical order") {
    CHECK(direction_set(t2({{0, 0}, {0, 1}, {1, 0}, {1, 1}})) ==
          std::vector<Vec>{{1, 0}, {0, 1}, {1, 1}, {1, -1}});
    CHECK(direction_set(t2({{0, 0}})).empty());
    CHECK(direction_set(t2({{0, 0}, {0, 1}, {2, 0}, {2, 1}})) ==
          std::vector<Vec>{{1, 0}, {0, 1}, {2, 1}, {2, -1}});

    // translation invariance
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<i64> d(-5, 5);
    for (int it = 0; it < 50; ++it) {
        std::vector<Vec> pts;
        for (int k = 0; k < 3; ++k) pts.push_back({d(rng), d(rng)});
        Tile f = t2(pts);
        GroupElement x = make_element(f.group, {d(rng), d(rng)});
        CHECK(direction_set(f) == direction_set(normalize(translate(f, x))));
    }
}

TEST_CASE("diameter") {
    CHECK(diam(t1({0, 2, 3})) == 3);
    CHECK(diam(t1({0, 1})) == 1);
    CHECK(diam(t1({0})) == 0);
    CHECK_THROWS_AS(diam(t2({{0, 0}})), dimension_error);
}
