#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tessella/group.hpp"

using namespace tessella;

TEST_CASE("group construction and element arithmetic") {
    GroupSpec z2 = make_group(2);
    CHECK(add(z2, make_element(z2, {1, 2}), make_element(z2, {3, 4})) ==
          make_element(z2, {4, 6}));
    CHECK(scale(z2, 5, make_element(z2, {0, 1})) == make_element(z2, {0, 5}));

    GroupSpec g = make_group(2, {3});
    GroupElement e = make_element(g, {1, 0}, {1});
    CHECK(neg(g, e) == make_element(g, {-1, 0}, {2}));
    CHECK(g.torsion_exponent() == 3);
    CHECK(make_group(1, {2, 3}).torsion_size() == 6);
    CHECK_THROWS_AS(make_group(0), error);
    CHECK_THROWS_AS(make_group(1, {1}), error);
}

TEST_CASE("lattice HNF canonicalization") {
    // generators (2,1),(0,3) and (2,4),(0,3) span the same lattice
    Lattice a = lattice_from_columns(2, {{2, 1}, {0, 3}});
    Lattice b = lattice_from_columns(2, {{2, 4}, {0, 3}});
    CHECK(a == b);
    CHECK(a.index() == 6);
    CHECK(a.diag(0) == 2);
    CHECK(a.diag(1) == 3);
    CHECK(lattice_contains(a, {2, 1}));
    CHECK(lattice_contains(a, {-2, 2}));
    CHECK(!lattice_contains(a, {1, 0}));
    Vec r = lattice_reduce(a, {-3, 7});
    CHECK(r[0] >= 0);
    CHECK(r[0] < 2);
    CHECK(r[1] >= 0);
    CHECK(r[1] < 3);
    CHECK_THROWS_AS(lattice_from_columns(2, {{1, 0}, {2, 0}}), dimension_error);
}

TEST_CASE("lattice intersection and sum") {
    Lattice two = scaled_lattice(2, 2), three = scaled_lattice(2, 3);
    CHECK(lattice_intersect(two, three) == scaled_lattice(2, 6));
    CHECK(lattice_sum(two, three) == scaled_lattice(2, 1));
    Lattice skew = lattice_from_columns(2, {{2, 1}, {0, 4}});
    Lattice meet = lattice_intersect(skew, two);
    for (const Vec& c : meet.cols) {
        CHECK(lattice_contains(skew, c));
        CHECK(lattice_contains(two, c));
    }
    CHECK(meet.index() % skew.index() == 0);
}

TEST_CASE("lattice enumeration counts") {
    auto one_d = enumerate_lattices(1, 3);
    REQUIRE(one_d.size() == 3);
    CHECK(one_d[0].diag(0) == 1);
    CHECK(one_d[2].diag(0) == 3);

    // # sublattices of Z^2 of index n is sigma(n), the divisor sum
    auto sigma = [](i64 n) {
        i64 s = 0;
        for (i64 d = 1; d <= n; ++d)
            if (n % d == 0) s += d;
        return s;
    };
    auto lats = enumerate_lattices(2, 12);
    std::vector<i64> count(13, 0);
    for (const Lattice& l : lats) ++count[l.index()];
    for (i64 n = 1; n <= 12; ++n) CHECK(count[n] == sigma(n));
    // ordered by index, no duplicates
    for (size_t i = 1; i < lats.size(); ++i) {
        CHECK(lats[i - 1].index() <= lats[i].index());
        CHECK(lats[i - 1] != lats[i]);
    }
    CHECK(enumerate_lattices(2, 1).size() == 1);
}

TEST_CASE("quotient projection is a homomorphism") {
    GroupSpec g = make_group(2, {2});
    Lattice lat = scaled_lattice(2, 2);
    QuotientGroup q = make_quotient(g, lat);
    CHECK(q.size() == 8);
    CHECK(make_quotient(make_group(1), scaled_lattice(1, 4)).size() == 4);

    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<i64> d(-50, 50);
    for (int it = 0; it < 200; ++it) {
        GroupElement a = make_element(g, {d(rng), d(rng)}, {d(rng)});
        GroupElement b = make_element(g, {d(rng), d(rng)}, {d(rng)});
        CHECK(q.project(add(g, a, b)) == q.add_indices(q.project(a), q.project(b)));
        GroupElement back = q.section(q.project(a));
        Vec diff{a.free[0] - back.free[0], a.free[1] - back.free[1]};
        CHECK(lattice_contains(lat, diff));
        CHECK(back.tor == a.tor);
    }
    for (i64 i = 0; i < q.size(); ++i) CHECK(q.project(q.section(i)) == i);
}

TEST_CASE("primitive direction representatives") {
    CHECK(primitive_of({4, -6}) == Vec{2, -3});
    CHECK(primitive_of({-2, 0}) == Vec{1, 0});
    CHECK(primitive_of({0, -5}) == Vec{0, 1});
}
