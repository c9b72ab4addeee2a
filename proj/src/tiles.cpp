#include "tessella/tiles.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace tessella {

Tile make_tile(const GroupSpec& g, std::vector<GroupElement> points, bool normalized) {
    if (points.empty()) throw dimension_error("tile must be nonempty");
    for (GroupElement& p : points) p = make_element(g, p.free, p.tor);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Tile f{g, std::move(points)};
    return normalized ? normalize(std::move(f)) : f;
}

Tile normalize(Tile f) {
    for (int i = 0; i < f.group.rank; ++i) {
        i64 lo = f.points.front().free[i];
        for (const GroupElement& p : f.points) lo = std::min(lo, p.free[i]);
        for (GroupElement& p : f.points) p.free[i] -= lo;
    }
    std::sort(f.points.begin(), f.points.end());
    return f;
}

Tile translate(const Tile& f, const GroupElement& x) {
    Tile out = f;
    for (GroupElement& p : out.points) p = add(f.group, p, x);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

Tile reflect(const Tile& f) {
    std::vector<GroupElement> pts;
    pts.reserve(f.points.size());
    for (const GroupElement& p : f.points) pts.push_back(neg(f.group, p));
    return make_tile(f.group, std::move(pts));
}

Tile dilate(const Tile& f, i64 r) {
    if (r == 0) throw error("dilation by 0 is degenerate");
    std::vector<GroupElement> pts;
    pts.reserve(f.points.size());
    for (const GroupElement& p : f.points) pts.push_back(scale(f.group, r, p));
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw error("dilation collision: scaled points coincide");
    return Tile{f.group, std::move(pts)};
}

std::vector<Vec> SliceMap::support() const {
    std::vector<Vec> s;
    s.reserve(slices.size());
    for (const auto& [x, _] : slices) s.push_back(x);
    return s;
}

SliceMap slices(const Tile& f) {
    SliceMap m;
    for (const GroupElement& p : f.points) m.slices[p.free].push_back(p.tor);
    return m;
}

std::vector<Vec> support(const Tile& f) { return slices(f).support(); }

std::vector<Vec> direction_set(const Tile& f) {
    if (f.group.rank < 1) throw dimension_error("direction_set needs free rank >= 1");
    std::vector<Vec> s = support(f);
    std::set<Vec> dirs;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j) {
            if (i == j) continue;
            Vec d(f.group.rank);
            for (int k = 0; k < f.group.rank; ++k) d[k] = s[i][k] - s[j][k];
            if (std::all_of(d.begin(), d.end(), [](i64 x) { return x == 0; })) continue;
            dirs.insert(primitive_of(std::move(d)));
        }
    std::vector<Vec> out(dirs.begin(), dirs.end());
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        i64 na = 0, nb = 0;
        for (i64 x : a) na += std::abs(x);
        for (i64 x : b) nb += std::abs(x);
        if (na != nb) return na < nb;
        return a > b; // lexicographically descending puts (1,0) before (0,1)
    });
    return out;
}

i64 diam(const Tile& f) {
    if (f.group.rank != 1)
        throw dimension_error("diam is defined for rank-1 groups only");
    i64 lo = f.points.front().free[0], hi = lo;
    for (const GroupElement& p : f.points) {
        lo = std::min(lo, p.free[0]);
        hi = std::max(hi, p.free[0]);
    }
    return hi - lo;
}

TileSystem make_system(std::vector<Tile> tiles, int level) {
    if (tiles.empty()) throw dimension_error("tile system must be nonempty");
    if (level < 1) throw dimension_error("level must be >= 1");
    for (const Tile& t : tiles)
        if (!(t.group == tiles.front().group))
            throw dimension_error("tiles must share one group spec");
    return TileSystem{std::move(tiles), level};
}

TileSystem single(Tile f, int level) {
    return make_system({std::move(f)}, level);
}

}  // namespace tessella
