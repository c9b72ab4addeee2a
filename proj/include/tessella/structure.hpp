#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tessella/linfeas.hpp"
#include "tessella/solver.hpp"

namespace tessella {

struct DilationReport {
    i64 q = 1;
    std::vector<i64> tested_r;
    std::vector<CheckResult> results; // parallel to tested_r

    bool all_ok() const;
};

/// Checks that dilating F by each r (r == 1 mod q, gcd(r, torsion exponent)
/// = 1) preserves the level-1 tiling F + A = G.  q defaults to
/// torsion_exponent * |F|; rs defaults to {1+q, 1+2q, 1-q, 1+5q}.
DilationReport dilation_check(const Tile& f, const PeriodicSet& a, i64 q = 0,
                              std::vector<i64> rs = {});

/// |residues| / (lattice index * torsion size).
Fraction exact_density(const PeriodicSet& a);

/// |{x in [-N,N]^d : eval(x)}| / (2N+1)^d for each N.
std::vector<Fraction> density_estimate(int d, const std::function<bool(const Vec&)>& eval,
                                       const std::vector<i64>& radii);
/// Windowed counts of a periodic set (over the box times the whole torsion
/// part, so the sequence converges to exact_density).
std::vector<Fraction> density_estimate(const PeriodicSet& a, const std::vector<i64>& radii);

/// A = disjoint union of parts[i], each invariant under q * dirs[i].
struct WeakDecomposition {
    i64 q = 1;
    std::vector<Vec> dirs;
    std::vector<PeriodicSet> parts; // parallel to dirs
};

/// Partition of A into q*v-periodic parts, v ranging over direction_set(F)
/// (fallback {(1,0)} for singleton support).  Each part is a union of full
/// q*v-cycles on the torus Z^2 / Lambda; greedy assignment first, exact-cover
/// backtracking on failure.  none when no partition exists for this q.
std::optional<WeakDecomposition> weak_periodic_decompose(const Tile& f,
                                                         const PeriodicSet& a,
                                                         i64 q = 0);

struct DecompositionReport {
    bool ok = true;
    std::string detail;               // violation description when !ok
    std::optional<Lattice> detected;  // empirical full-period lattice of the
                                      // (F cap (x+<v>)) + A_v sumsets
};

DecompositionReport verify_decomposition(const Tile& f, const PeriodicSet& a,
                                         const WeakDecomposition& dec);

/// Maximal lattice of translation periods of A (always contains the declared
/// lattice).
Lattice min_period(const PeriodicSet& a);

struct ConsequenceReport {
    bool ok = true;
    std::string detail;
};

/// Consequences of the slice decomposition of a level-1 tiling: the slice
/// convolutions c_x = 1_{F_x} * 1_A sum to 1 with values in {0,1}, and each
/// 1 - c_x splits into nonnegative q*v-invariant components (checked as an
/// exact rational feasibility problem; the components themselves are not
/// constructed).
ConsequenceReport structure_consequence_check(const Tile& f, const PeriodicSet& a,
                                              i64 q = 0);

}  // namespace tessella
