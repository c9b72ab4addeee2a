#pragma once

#include <map>
#include <vector>

#include "tessella/group.hpp"

namespace tessella {

/// Finite subset of G, deduplicated and sorted.  Normalized tiles have the
/// coordinatewise minimum of the free parts at the zero vector.
struct Tile {
    GroupSpec group;
    std::vector<GroupElement> points;

    i64 size() const { return static_cast<i64>(points.size()); }
    bool operator==(const Tile&) const = default;
};

Tile make_tile(const GroupSpec& g, std::vector<GroupElement> points, bool normalized = true);
Tile normalize(Tile f);
Tile translate(const Tile& f, const GroupElement& x);

Tile reflect(const Tile& f);
/// Scales every point by r.  Result is not re-normalized.  Throws on r == 0
/// and on torsion collisions (r not coprime to the torsion exponent).
Tile dilate(const Tile& f, i64 r);

struct SliceMap {
    std::map<Vec, std::vector<Vec>> slices; // free part x -> torsion parts of F_x
    std::vector<Vec> support() const;       // S_F, sorted
};

SliceMap slices(const Tile& f);
std::vector<Vec> support(const Tile& f);

/// Directions of the nonzero vectors in S_F - S_F: primitive representatives,
/// sign-normalized (first nonzero coordinate positive), in canonical order
/// (ascending 1-norm, then lexicographically descending).  Contracted for
/// d = 2; exposed but unverified for d >= 3.
std::vector<Vec> direction_set(const Tile& f);

i64 diam(const Tile& f); // rank-1 groups only

/// Ordered tiles over a common group plus the tiling level k.
struct TileSystem {
    std::vector<Tile> tiles;
    int level = 1;

    const GroupSpec& group() const { return tiles.front().group; }
};

TileSystem make_system(std::vector<Tile> tiles, int level = 1);
TileSystem single(Tile f, int level = 1);

}  // namespace tessella
