#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tessella/solver.hpp"

namespace tessella {

/// Edge colors of a Wang square, as indices into WangInstance::colors.
struct WangSquare {
    int east = 0, south = 0, west = 0, north = 0;
    bool operator==(const WangSquare&) const = default;
};

struct WangInstance {
    std::vector<std::string> colors;
    std::vector<WangSquare> squares;
    bool operator==(const WangInstance&) const = default;
};

/// Square assignment on a torus Z^2 / Lambda (edges wrap) or on a window box
/// (only interior edges constrained).  Cells are indexed over the canonical
/// box, coordinate 0 fastest.
struct WangAssignment {
    std::optional<Lattice> torus;
    Vec lo{0, 0}, hi{0, 0}; // window box when torus is absent
    std::vector<int> squares;

    i64 extent(int i) const;
    i64 cells() const { return static_cast<i64>(squares.size()); }
    int at(Vec pos) const; // reduces mod the torus; -1 outside a window
};

struct EdgeViolation {
    Vec pos;        // cell whose east/north edge mismatches; horizontal when
    bool horizontal; // true (east-west), vertical otherwise
};

/// Rule (1): every cell holds a valid square index.  Rule (2): east = next
/// cell's west, north = upper cell's south, on every constrained edge.
std::optional<EdgeViolation> wang_check(const WangInstance& w, const WangAssignment& a);

/// Backtracking search for a torus assignment.  Throws budget_error when the
/// torus has more than cell_cap cells.
std::optional<WangAssignment> wang_solve_torus(const WangInstance& w, const Lattice& lat,
                                               i64 cell_cap = 4096);
std::optional<WangAssignment> wang_solve_periodic(const WangInstance& w, i64 p1, i64 p2,
                                                  i64 cell_cap = 4096);

/// Wang squares as K x K polyominoes (K = 2|C|+6): a filled block with two
/// notches per west/south side and two matching bumps per east/north side.
/// Offset 1 is an orientation key on every side; color i sits at offset i+2.
struct GolombEncoding {
    WangInstance instance;
    i64 K = 0;
    TileSystem system; // tiles parallel to instance.squares, level 1
};

GolombEncoding golomb_encode(const WangInstance& w);

/// Inverse of the encoding: reads a periodic certificate for the encoded
/// system back into a torus Wang assignment.  Throws on translates off the
/// K-grid or cells not covered exactly once.
WangAssignment decode_tiling(const GolombEncoding& enc, const TilingCertificate& cert);

/// Periodic solves over diag(q1 K, q2 K) for q1, q2 <= max_factor, then box
/// obstructions at radii K/2, K, 2K.
SemiResult solve_encoded(const GolombEncoding& enc, i64 max_factor = 3,
                         const SolveOptions& opts = {});

}  // namespace tessella
