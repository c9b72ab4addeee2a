#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "tessella/cover.hpp"
#include "tessella/tiles.hpp"

namespace tessella {

/// Lambda-periodic subset of G: A = section(residues) + (Lambda x {0}).
/// Residues are quotient indices for make_quotient(group, lattice), sorted.
struct PeriodicSet {
    GroupSpec group;
    Lattice lattice;
    std::vector<i64> residues;

    bool operator==(const PeriodicSet&) const = default;
};

PeriodicSet make_periodic_set(const GroupSpec& g, const Lattice& lat,
                              std::vector<i64> residues);
PeriodicSet periodic_set_from_points(const GroupSpec& g, const Lattice& lat,
                                     const std::vector<GroupElement>& points);
std::vector<GroupElement> residue_points(const PeriodicSet& a);
bool member(const PeriodicSet& a, const GroupElement& x);
PeriodicSet translate(const PeriodicSet& a, const GroupElement& x);
PeriodicSet reflect(const PeriodicSet& a);
/// Re-express on a sublattice of a.lattice.
PeriodicSet rebase(const PeriodicSet& a, const Lattice& finer);

struct TilingCertificate {
    TileSystem system;
    std::vector<PeriodicSet> solution; // one per tile
    bool verified = false;
};

/// Witness that no exact cover of the centered box [-R,R]^d x G_0 exists.
struct Obstruction {
    i64 radius = 0;
};

struct CheckViolation {
    GroupElement point;
    i64 count = 0;
};
using CheckResult = std::optional<CheckViolation>; // nullopt == ok

struct Tileable1D {
    i64 universal_period = 0;
    PeriodicSet witness;
};
struct NotTileable1D {
    std::vector<i64> stuck_prefix; // forced placements before the conflict
};
using Decision1D = std::variant<Tileable1D, NotTileable1D>;

struct SolveOptions {
    i64 cell_cap = 1'000'000;
    std::uint64_t node_budget = UINT64_MAX;
};

/// Search for a Lambda-periodic solution of the tiling equation at the
/// system's level.  Exact cover with multiplicity over the finite quotient.
std::optional<TilingCertificate> solve_periodic(const TileSystem& system,
                                                const Lattice& lat,
                                                const SolveOptions& opts = {});

/// Convolution check on a fundamental domain of the common refinement.
CheckResult check_tiling(const TileSystem& system, const std::vector<PeriodicSet>& a);

Decision1D decide_1d(const Tile& f);

bool box_obstruction(const TileSystem& system, i64 radius,
                     const SolveOptions& opts = {});

struct SemiBudget {
    i64 max_index = 256;
    i64 max_radius = 8;
    i64 cell_cap = 1'000'000;
    std::function<bool()> interrupt; // checked between steps; true -> unknown
};

struct SemiResult {
    enum class Kind { tileable, not_tileable, unknown } kind;
    std::optional<TilingCertificate> certificate;
    std::optional<Obstruction> obstruction;
};

/// Wang's interleaved procedure: periodic search over lattices by index,
/// alternated with box-obstruction search over growing radii.
SemiResult semi_decide(const TileSystem& system, const SemiBudget& budget = {});

/// Finitely supported integer function on Z^d.
using SoftFunction = std::map<Vec, i64>;

/// Periodic integer mapping given by a lattice and values on its fundamental
/// domain (indexed like make_quotient over the torsion-free group).
struct PeriodicIntMap {
    Lattice lattice;
    std::vector<i64> values;
};

PeriodicIntMap constant_map(int d, i64 value);
CheckResult verify_soft_tiling(const SoftFunction& f, const PeriodicIntMap& g,
                               const PeriodicSet& a);

}  // namespace tessella
