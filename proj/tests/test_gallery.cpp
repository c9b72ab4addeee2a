#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "tessella/gallery.hpp"

using namespace tessella;

namespace {
Tile square() {
    GroupSpec g = make_group(2);
    return make_tile(g, {make_element(g, {0, 0}), make_element(g, {0, 1}),
                         make_element(g, {1, 0}), make_element(g, {1, 1})});
}

Tile disconnected() {
    GroupSpec g = make_group(2);
    return make_tile(g, {make_element(g, {0, 0}), make_element(g, {0, 1}),
                         make_element(g, {2, 0}), make_element(g, {2, 1})});
}
}  // namespace

TEST_CASE("square tilings A_a and A^a") {
    PeriodicSet trivial = gen_square_tiling({0}, Orientation::columns);
    CHECK(trivial == make_periodic_set(make_group(2), scaled_lattice(2, 2), {0}));

    PeriodicSet a01 = gen_square_tiling({0, 1}, Orientation::columns);
    CHECK(a01.lattice == diagonal_lattice({4, 2}));
    CHECK(!check_tiling(single(square()), {a01}));

    PeriodicSet rows = gen_square_tiling({0, 1, 1}, Orientation::rows);
    CHECK(rows.lattice == diagonal_lattice({2, 6}));
    CHECK(!check_tiling(single(square()), {rows}));

    // windowed with an arbitrary (non-periodic looking) shift function
    auto a = [](i64 n) { return (n * n + n / 2) % 2; };
    WindowSet w = gen_square_tiling(a, Orientation::columns, {-7, -7}, {7, 7});
    WindowVerdict v = window_verify(single(square()), w);
    CHECK(v.kind == WindowVerdict::Kind::ok);
    CHECK(v.checked > 0);
}

TEST_CASE("disconnected tilings A_a^b") {
    PeriodicSet plain = gen_disconnected_tiling({0}, {0});
    CHECK(plain.lattice == diagonal_lattice({4, 2}));
    CHECK(plain.residues.size() == 2);
    CHECK(!check_tiling(single(disconnected()), {plain}));

    PeriodicSet mixed = gen_disconnected_tiling({0, 1}, {0, 1, 1});
    CHECK(mixed.lattice == diagonal_lattice({8, 6}));
    CHECK(!check_tiling(single(disconnected()), {mixed}));

    auto a = [](i64 n) { return n % 2 != 0 ? 1 : 0; };
    auto b = [](i64 m) { return m % 3 == 1 ? 1 : 0; };
    WindowSet w = gen_disconnected_tiling(a, b, {-9, -9}, {9, 9});
    CHECK(window_verify(single(disconnected()), w).kind == WindowVerdict::Kind::ok);
}

TEST_CASE("the level-4 equidistributed tile") {
    Tile f = equidistributed_level4_tile();
    REQUIRE(f.size() == 8);
    std::vector<Vec> expect{{0, 0}, {0, 2}, {1, 0}, {2, -2},
                            {1, 2}, {2, 0}, {3, -2}, {3, 0}};
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 8; ++i) CHECK(f.points[i].free == expect[i]);
    CHECK(slices(f).support().size() == 8); // torsion-free: 8 singleton slices
}

TEST_CASE("A_alpha rational sets") {
    PeriodicSet a0 = gen_a_alpha(0, 1);
    CHECK(a0.lattice == diagonal_lattice({2, 4}));
    // A_0 = {(n,m) : n + floor(m/2) odd}
    for (i64 n = -4; n <= 4; ++n)
        for (i64 m = -4; m <= 4; ++m)
            CHECK(member(a0, make_element(a0.group, {n, m})) ==
                  (mod_floor(n + div_floor(m, 2), 2) == 1));
    CHECK(!check_tiling(make_system({equidistributed_level4_tile()}, 4), {a0}));

    // every small rational alpha gives a periodic level-4 tiling
    for (auto [p, q] : {std::pair<i64, i64>{1, 2}, {1, 3}, {2, 5}, {1, 6}, {5, 6}}) {
        PeriodicSet apq = gen_a_alpha(p, q);
        CHECK(!check_tiling(make_system({equidistributed_level4_tile()}, 4), {apq}));
    }

    WindowSet w = gen_a_alpha(1, 3, {-12, -12}, {12, 12});
    WindowVerdict v = window_verify(make_system({equidistributed_level4_tile()}, 4), w);
    CHECK(v.kind == WindowVerdict::Kind::ok);
}

TEST_CASE("A_alpha irrational surrogate stabilizes") {
    WindowSet w = gen_a_alpha_window(1.41421356237309504, {-10, -10}, {10, 10});
    // density of a level-4 tiling by an 8-point tile is 1/2
    i64 hits = 0;
    for (char c : w.membership) hits += c;
    CHECK(std::abs(hits * 2 - w.cells()) < w.cells() / 5);
    auto conv = cf_convergents(1.41421356237309504, 12);
    REQUIRE(conv.size() >= 4);
    CHECK(conv[1] == std::pair<i64, i64>{3, 2}); // sqrt(2) = [1;2,2,2,...]
    CHECK(conv[2] == std::pair<i64, i64>{7, 5});
}

TEST_CASE("window verification outcomes") {
    WindowSet good = window_of(gen_square_tiling({0}, Orientation::columns), {-6, -6}, {6, 6});
    CHECK(window_verify(single(square()), good).kind == WindowVerdict::Kind::ok);

    WindowSet broken = good;
    broken.membership[broken.index({0, 0})] = 0;
    CHECK(window_verify(single(square()), broken).kind == WindowVerdict::Kind::violation);

    WindowSet tiny = window_of(gen_square_tiling({0}, Orientation::columns), {0, 0}, {0, 0});
    CHECK(window_verify(single(square()), tiny).kind == WindowVerdict::Kind::inconclusive);
}
