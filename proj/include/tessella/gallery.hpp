#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "tessella/structure.hpp"

namespace tessella {

/// Finite view of a subset of Z^d: 0/1 membership on an inclusive box,
/// indexed mixed-radix with coordinate 0 fastest.
struct WindowSet {
    Vec lo, hi;
    std::vector<char> membership;

    int dim() const { return static_cast<int>(lo.size()); }
    i64 extent(int i) const { return hi[i] - lo[i] + 1; }
    i64 cells() const { return static_cast<i64>(membership.size()); }
    bool in_box(const Vec& x) const;
    bool at(const Vec& x) const; // false outside the box
    i64 index(const Vec& x) const;
    Vec point(i64 index) const;
};

WindowSet make_window(Vec lo, Vec hi, const std::function<bool(const Vec&)>& pred);
WindowSet window_of(const PeriodicSet& a, Vec lo, Vec hi);

enum class Orientation { columns, rows };

/// A_a = {(2n, 2m + a(n))} (columns) or A^a = {(2n + a(m), 2m)} (rows),
/// for a shift function a: Z -> {0,1}.
PeriodicSet gen_square_tiling(const std::vector<i64>& a_table, Orientation o);
WindowSet gen_square_tiling(const std::function<i64(i64)>& a, Orientation o,
                            Vec lo, Vec hi);

/// A_a^b = {(4n, 2m + a(n))} disjoint-union {(4n + 1 + 2 b(m), 2m)}.
PeriodicSet gen_disconnected_tiling(const std::vector<i64>& a_table,
                                    const std::vector<i64>& b_table);
WindowSet gen_disconnected_tiling(const std::function<i64(i64)>& a,
                                  const std::function<i64(i64)>& b, Vec lo, Vec hi);

/// A_alpha for rational alpha = p/q: the sign-of-carry set
/// {(n,m) : (-1)^{floor(m/2)+n} ({an}+{am}-{a(n+m)} - 1/2) > 0},
/// evaluated in exact integer arithmetic.  Periodic with lattice
/// diag(lcm(2,q), lcm(4,q)).
PeriodicSet gen_a_alpha(i64 p, i64 q);
WindowSet gen_a_alpha(i64 p, i64 q, Vec lo, Vec hi);

/// Continued-fraction convergents p/q of alpha, in order.
std::vector<std::pair<i64, i64>> cf_convergents(double alpha, int max_terms = 20);

/// Window of A_alpha for an irrational surrogate: evaluated at successive
/// convergents until two consecutive ones agree on the whole box.  Throws
/// when no stable pair is found (membership too close to a tie).
WindowSet gen_a_alpha_window(double alpha, Vec lo, Vec hi);

/// The level-4 tile with slice polynomial (1+e1)(1+e2)(1+e3),
/// e1=(0,2), e2=(1,0), e3=(2,-2): eight points in Z^2.
Tile equidistributed_level4_tile();

struct WindowVerdict {
    enum class Kind { ok, violation, inconclusive } kind;
    std::optional<Vec> point; // failing or first undeterminable point
    i64 checked = 0;          // determinable points examined
};

/// Coverage-count check of the tiling equation on a window: a point counts
/// only when every translate that could cover it lies inside the box.
WindowVerdict window_verify(const TileSystem& system, const WindowSet& w);

}  // namespace tessella
