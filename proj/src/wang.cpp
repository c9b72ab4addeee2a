#include "tessella/wang.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tessella {

namespace {
void require_valid(const WangInstance& w) {
    if (w.squares.empty()) throw error("Wang instance with no squares");
    int nc = static_cast<int>(w.colors.size());
    for (const WangSquare& s : w.squares)
        for (int c : {s.east, s.south, s.west, s.north})
            if (c < 0 || c >= nc) throw error("Wang square uses an unknown color");
}
}  // namespace

i64 WangAssignment::extent(int i) const {
    return torus ? torus->diag(i) : hi[i] - lo[i] + 1;
}

int WangAssignment::at(Vec pos) const {
    if (torus) {
        pos = lattice_reduce(*torus, pos);
        return squares[pos[0] + extent(0) * pos[1]];
    }
    for (int i = 0; i < 2; ++i)
        if (pos[i] < lo[i] || pos[i] > hi[i]) return -1;
    return squares[(pos[0] - lo[0]) + extent(0) * (pos[1] - lo[1])];
}

std::optional<EdgeViolation> wang_check(const WangInstance& w, const WangAssignment& a) {
    require_valid(w);
    if (a.cells() != a.extent(0) * a.extent(1))
        throw error("assignment size does not match its domain");
    int ns = static_cast<int>(w.squares.size());
    for (int s : a.squares)
        if (s < 0 || s >= ns) throw error("assignment uses an unknown square");
    Vec base = a.torus ? Vec{0, 0} : a.lo;
    for (i64 y = 0; y < a.extent(1); ++y)
        for (i64 x = 0; x < a.extent(0); ++x) {
            Vec pos{base[0] + x, base[1] + y};
            const WangSquare& sq = w.squares[a.at(pos)];
            int east = a.at({pos[0] + 1, pos[1]});
            if (east >= 0 && sq.east != w.squares[east].west)
                return EdgeViolation{pos, true};
            int north = a.at({pos[0], pos[1] + 1});
            if (north >= 0 && sq.north != w.squares[north].south)
                return EdgeViolation{pos, false};
        }
    return std::nullopt;
}

std::optional<WangAssignment> wang_solve_torus(const WangInstance& w, const Lattice& lat,
                                               i64 cell_cap) {
    require_valid(w);
    i64 cells = lat.index();
    if (cells > cell_cap) throw budget_error("Wang torus exceeds the cell cap");
    i64 d0 = lat.diag(0);
    auto cell = [&](Vec pos) {
        pos = lattice_reduce(lat, pos);
        return pos[0] + d0 * pos[1];
    };
    std::vector<int> asg(cells, -1);
    int ns = static_cast<int>(w.squares.size());

    auto fits = [&](i64 x, i64 y, int s) {
        const WangSquare& sq = w.squares[s];
        struct Nb {
            i64 dx, dy;
        };
        const Nb nbs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        i64 self = cell({x, y});
        for (const Nb& n : nbs) {
            i64 c = cell({x + n.dx, y + n.dy});
            int o = c == self ? s : asg[c]; // wraparound to the cell itself
            if (o < 0) continue;
            const WangSquare& oq = w.squares[o];
            if (n.dx == 1 && sq.east != oq.west) return false;
            if (n.dx == -1 && oq.east != sq.west) return false;
            if (n.dy == 1 && sq.north != oq.south) return false;
            if (n.dy == -1 && oq.north != sq.south) return false;
        }
        return true;
    };

    std::function<bool(i64)> rec = [&](i64 k) {
        if (k == cells) return true;
        i64 x = k % d0, y = k / d0;
        for (int s = 0; s < ns; ++s) {
            if (!fits(x, y, s)) continue;
            asg[k] = s;
            if (rec(k + 1)) return true;
            asg[k] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    WangAssignment a;
    a.torus = lat;
    a.squares = std::move(asg);
    return a;
}

std::optional<WangAssignment> wang_solve_periodic(const WangInstance& w, i64 p1, i64 p2,
                                                  i64 cell_cap) {
    if (p1 < 1 || p2 < 1) throw error("period components must be positive");
    return wang_solve_torus(w, diagonal_lattice({p1, p2}), cell_cap);
}

GolombEncoding golomb_encode(const WangInstance& w) {
    require_valid(w);
    i64 k = 2 * static_cast<i64>(w.colors.size()) + 6;
    GroupSpec g = make_group(2);
    std::vector<Tile> tiles;
    for (const WangSquare& sq : w.squares) {
        std::set<Vec> cells;
        for (i64 x = 0; x < k; ++x)
            for (i64 y = 0; y < k; ++y) cells.insert({x, y});
        cells.erase({0, 1});
        cells.erase({0, sq.west + 2});
        cells.erase({1, 0});
        cells.erase({sq.south + 2, 0});
        cells.insert({k, 1});
        cells.insert({k, sq.east + 2});
        cells.insert({1, k});
        cells.insert({sq.north + 2, k});
        std::vector<GroupElement> pts;
        for (const Vec& c : cells) pts.push_back(make_element(g, c));
        tiles.push_back(make_tile(g, std::move(pts)));
    }
    return {w, k, make_system(std::move(tiles), 1)};
}

WangAssignment decode_tiling(const GolombEncoding& enc, const TilingCertificate& cert) {
    if (cert.solution.size() != enc.instance.squares.size())
        throw error("decode: certificate does not match the encoding");
    const Lattice& lat = cert.solution.front().lattice;
    std::vector<Vec> small;
    for (const Vec& col : lat.cols) {
        Vec c(col);
        for (i64& v : c) {
            if (v % enc.K != 0)
                throw error("decode: solution lattice is not on the K-grid");
            v /= enc.K;
        }
        small.push_back(std::move(c));
    }
    for (const PeriodicSet& s : cert.solution) {
        if (s.lattice != lat)
            throw error("decode: parts use different lattices");
        for (const GroupElement& p : residue_points(s))
            if (mod_floor(p.free[0], enc.K) != 0 || mod_floor(p.free[1], enc.K) != 0)
                throw error("decode: translate off the K-grid");
    }
    Lattice torus = lattice_from_columns(2, std::move(small));
    WangAssignment a;
    a.torus = torus;
    for (i64 y = 0; y < torus.diag(1); ++y)
        for (i64 x = 0; x < torus.diag(0); ++x) {
            int found = -1;
            for (size_t s = 0; s < cert.solution.size(); ++s) {
                if (!member(cert.solution[s],
                            make_element(cert.solution[s].group, {enc.K * x, enc.K * y})))
                    continue;
                if (found >= 0) throw error("decode: grid cell claimed twice");
                found = static_cast<int>(s);
            }
            if (found < 0) throw error("decode: grid cell unclaimed");
            a.squares.push_back(found);
        }
    return a;
}

SemiResult solve_encoded(const GolombEncoding& enc, i64 max_factor,
                         const SolveOptions& opts) {
    std::vector<std::pair<i64, i64>> periods;
    for (i64 q1 = 1; q1 <= max_factor; ++q1)
        for (i64 q2 = 1; q2 <= max_factor; ++q2) periods.emplace_back(q1, q2);
    std::sort(periods.begin(), periods.end(), [](auto a, auto b) {
        return a.first * a.second != b.first * b.second
                   ? a.first * a.second < b.first * b.second
                   : a < b;
    });
    for (auto [q1, q2] : periods) {
        try {
            auto cert = solve_periodic(enc.system,
                                       diagonal_lattice({q1 * enc.K, q2 * enc.K}), opts);
            if (cert) return {SemiResult::Kind::tileable, std::move(cert), std::nullopt};
        } catch (const budget_error&) {
        }
    }
    for (i64 r : {enc.K / 2, enc.K, 2 * enc.K}) {
        try {
            if (box_obstruction(enc.system, r, opts))
                return {SemiResult::Kind::not_tileable, std::nullopt, Obstruction{r}};
        } catch (const budget_error&) {
        }
    }
    return {SemiResult::Kind::unknown, std::nullopt, std::nullopt};
}

}  // namespace tessella
