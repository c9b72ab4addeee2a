#include "doctest.h"
#include "tessella/gallery.hpp"
#include "tessella/structure.hpp"

using namespace tessella;

namespace {
Tile t2(std::vector<Vec> pts) {
    GroupSpec g = make_group(2);
    std::vector<GroupElement> es;
    for (Vec& p : pts) es.push_back(make_element(g, std::move(p)));
    return make_tile(g, std::move(es));
}

Tile square() { return t2({{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

PeriodicSet even2() {
    return make_periodic_set(make_group(2), scaled_lattice(2, 2), {0});
}
}  // namespace

TEST_CASE("exact rational feasibility") {
    using F = Fraction;
    // x + y = 2, x - y = 0 has x = y = 1 >= 0
    CHECK(linear_feasible({{F(1), F(1)}, {F(1), F(-1)}}, {F(2), F(0)}));
    // x + y = 1, x + y = 2 inconsistent
    CHECK(!linear_feasible({{F(1), F(1)}, {F(1), F(1)}}, {F(1), F(2)}));
    // x - y = 1 with x,y >= 0 feasible; x = -1 alone infeasible
    CHECK(linear_feasible({{F(1), F(-1)}}, {F(1)}));
    CHECK(!linear_feasible({{F(1)}}, {F(-1)}));
    CHECK(F(1, 2) + F(1, 3) == F(5, 6));
    CHECK(F(2, 4) == F(1, 2));
    CHECK(F(3, -6) == F(-1, 2));
}

TEST_CASE("dilation checks") {
    DilationReport r = dilation_check(square(), even2(), 4, {5});
    CHECK(r.all_ok()); // {0,5}^2 + 2Z^2 = Z^2

    GroupSpec z = make_group(1);
    Tile dom = make_tile(z, {make_element(z, {0}), make_element(z, {1})});
    PeriodicSet a = make_periodic_set(z, scaled_lattice(1, 2), {0});
    CHECK(dilation_check(dom, a, 2, {3}).all_ok()); // {0,3} + 2Z = Z
    CHECK(dilation_check(dom, a, 2, {1}).all_ok()); // identity dilation
    CHECK(dilation_check(square(), even2()).all_ok()); // default q=4, rs

    CHECK_THROWS_AS(dilation_check(square(), even2(), 4, {6}), error); // r != 1 mod q
    // not a tiling -> rejected input
    PeriodicSet bad = make_periodic_set(make_group(2), scaled_lattice(2, 2), {0, 1});
    CHECK_THROWS_AS(dilation_check(square(), bad, 4, {5}), error);
}

TEST_CASE("density") {
    CHECK(exact_density(even2()) == Fraction(1, 4));
    PeriodicSet all = make_periodic_set(make_group(1), scaled_lattice(1, 1), {0});
    CHECK(exact_density(all) == Fraction(1));
    auto seq = density_estimate(even2(), {2, 5});
    CHECK(seq.size() == 2);
    CHECK(seq[0] == Fraction(9, 25));  // evens in [-2,2]^2
    auto byfn = density_estimate(1, [](const Vec& x) { return x[0] % 2 == 0; }, {3});
    CHECK(byfn[0] == Fraction(3, 7));
}

TEST_CASE("weak-periodic decomposition") {
    // fully periodic solution: one part, first direction (1,0)
    auto dec = weak_periodic_decompose(square(), even2(), 4);
    REQUIRE(dec);
    REQUIRE(dec->parts.size() == 1);
    CHECK(dec->dirs[0] == Vec{1, 0});
    DecompositionReport rep = verify_decomposition(square(), even2(), *dec);
    CHECK(rep.ok);
    REQUIRE(rep.detected);
    // each slice sumset F_y + A is a full union of even rows: period Z x 2Z
    CHECK(*rep.detected == diagonal_lattice({1, 2}));

    // column construction with a of period 3: forced to v = (0,1)
    PeriodicSet aa = gen_square_tiling({0, 1, 1}, Orientation::columns);
    auto dec2 = weak_periodic_decompose(square(), aa, 4);
    REQUIRE(dec2);
    REQUIRE(dec2->parts.size() == 1);
    CHECK(dec2->dirs[0] == Vec{0, 1});
    CHECK(verify_decomposition(square(), aa, *dec2).ok);

    // disconnected tile: two parts along (1,0) and (0,1)
    Tile f = t2({{0, 0}, {0, 1}, {2, 0}, {2, 1}});
    PeriodicSet ab = gen_disconnected_tiling({0, 1}, {0, 1});
    auto dec3 = weak_periodic_decompose(f, ab, 4);
    REQUIRE(dec3);
    CHECK(dec3->parts.size() == 2);
    CHECK(verify_decomposition(f, ab, *dec3).ok);
}

TEST_CASE("decomposition perturbations are caught") {
    auto dec = weak_periodic_decompose(square(), even2(), 4);
    REQUIRE(dec);
    WeakDecomposition dup = *dec;
    dup.dirs.push_back({0, 1});
    dup.parts.push_back(dup.parts[0]); // same residues twice
    CHECK(!verify_decomposition(square(), even2(), dup).ok);

    WeakDecomposition shrunk = *dec;
    PeriodicSet fine = rebase(shrunk.parts[0], scaled_lattice(2, 4));
    fine.residues.pop_back();
    shrunk.parts[0] = fine;
    CHECK(!verify_decomposition(square(), even2(), shrunk).ok);

    // a part that is not qv-invariant
    PeriodicSet skew = make_periodic_set(make_group(2),
                                         lattice_from_columns(2, {{8, 0}, {0, 2}}),
                                         {0, 3});
    WeakDecomposition bad{4, {{1, 0}}, {skew}};
    DecompositionReport r = verify_decomposition(square(), skew, bad);
    CHECK(!r.ok);
    CHECK(r.detail.find("q*v") != std::string::npos);
}

TEST_CASE("min_period") {
    PeriodicSet redundant = rebase(even2(), scaled_lattice(2, 4));
    CHECK(redundant.lattice.index() == 16);
    CHECK(min_period(redundant) == scaled_lattice(2, 2));

    GroupSpec z = make_group(1);
    PeriodicSet pair = make_periodic_set(z, scaled_lattice(1, 4), {0, 1});
    CHECK(min_period(pair) == scaled_lattice(1, 4));
    PeriodicSet full = make_periodic_set(z, scaled_lattice(1, 3), {0, 1, 2});
    CHECK(min_period(full) == scaled_lattice(1, 1));
}

TEST_CASE("structure consequence check") {
    CHECK(structure_consequence_check(square(), even2(), 4).ok);
    Tile f = t2({{0, 0}, {0, 1}, {2, 0}, {2, 1}});
    PeriodicSet ab = gen_disconnected_tiling({0, 1}, {0, 1});
    CHECK(structure_consequence_check(f, ab, 4).ok);
    // non-tiling input rejected
    PeriodicSet bad = make_periodic_set(make_group(2), scaled_lattice(2, 2), {0, 1});
    CHECK_THROWS_AS(structure_consequence_check(square(), bad, 4), error);
}
