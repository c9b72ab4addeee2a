#include "tessella/solver.hpp"

#include <algorithm>
#include <unordered_map>

namespace tessella {

PeriodicSet make_periodic_set(const GroupSpec& g, const Lattice& lat,
                              std::vector<i64> residues) {
    QuotientGroup q = make_quotient(g, lat);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    for (i64 r : residues)
        if (r < 0 || r >= q.size()) throw dimension_error("residue index out of range");
    return PeriodicSet{g, lat, std::move(residues)};
}

PeriodicSet periodic_set_from_points(const GroupSpec& g, const Lattice& lat,
                                     const std::vector<GroupElement>& points) {
    QuotientGroup q = make_quotient(g, lat);
    std::vector<i64> res;
    res.reserve(points.size());
    for (const GroupElement& p : points) res.push_back(q.project(p));
    return make_periodic_set(g, lat, std::move(res));
}

std::vector<GroupElement> residue_points(const PeriodicSet& a) {
    QuotientGroup q = make_quotient(a.group, a.lattice);
    std::vector<GroupElement> pts;
    pts.reserve(a.residues.size());
    for (i64 r : a.residues) pts.push_back(q.section(r));
    return pts;
}

bool member(const PeriodicSet& a, const GroupElement& x) {
    QuotientGroup q = make_quotient(a.group, a.lattice);
    return std::binary_search(a.residues.begin(), a.residues.end(), q.project(x));
}

PeriodicSet translate(const PeriodicSet& a, const GroupElement& x) {
    QuotientGroup q = make_quotient(a.group, a.lattice);
    std::vector<i64> res;
    res.reserve(a.residues.size());
    for (i64 r : a.residues) res.push_back(q.project(add(a.group, q.section(r), x)));
    return make_periodic_set(a.group, a.lattice, std::move(res));
}

PeriodicSet reflect(const PeriodicSet& a) {
    QuotientGroup q = make_quotient(a.group, a.lattice);
    std::vector<i64> res;
    res.reserve(a.residues.size());
    for (i64 r : a.residues) res.push_back(q.project(neg(a.group, q.section(r))));
    return make_periodic_set(a.group, a.lattice, std::move(res));
}

// Coset representatives of coarse/fine inside the fine quotient's free box.
static std::vector<Vec> coset_reps(const Lattice& coarse, const Lattice& fine) {
    std::vector<Vec> reps;
    int d = fine.dim();
    Vec v(d, 0);
    for (;;) {
        if (lattice_contains(coarse, v)) reps.push_back(v);
        int i = 0;
        while (i < d && ++v[i] == fine.diag(i)) v[i++] = 0;
        if (i == d) break;
    }
    return reps;
}

PeriodicSet rebase(const PeriodicSet& a, const Lattice& finer) {
    QuotientGroup qa = make_quotient(a.group, a.lattice);
    QuotientGroup qf = make_quotient(a.group, finer);
    std::vector<Vec> reps = coset_reps(a.lattice, finer);
    if (static_cast<i64>(reps.size()) * qa.size() != qf.size())
        throw dimension_error("rebase target is not a sublattice");
    std::vector<i64> res;
    for (i64 r : a.residues) {
        GroupElement p = qa.section(r);
        for (const Vec& rep : reps) {
            GroupElement shifted = p;
            for (int i = 0; i < a.group.rank; ++i) shifted.free[i] += rep[i];
            res.push_back(qf.project(shifted));
        }
    }
    return make_periodic_set(a.group, finer, std::move(res));
}

namespace {

// quotient-projected tile footprints, aggregated multiplicities
std::vector<std::pair<i64, int>> footprint(const QuotientGroup& q, const Tile& f,
                                           const GroupElement& at) {
    std::map<i64, int> cover;
    for (const GroupElement& p : f.points)
        cover[q.project(add(q.parent, p, at))] += 1;
    return {cover.begin(), cover.end()};
}

bool injective_mod(const QuotientGroup& q, const Tile& f) {
    std::vector<i64> img;
    img.reserve(f.points.size());
    for (const GroupElement& p : f.points) img.push_back(q.project(p));
    std::sort(img.begin(), img.end());
    return std::adjacent_find(img.begin(), img.end()) == img.end();
}

}  // namespace

std::optional<TilingCertificate> solve_periodic(const TileSystem& system,
                                                const Lattice& lat,
                                                const SolveOptions& opts) {
    const GroupSpec& g = system.group();
    QuotientGroup q = make_quotient(g, lat);
    if (q.size() * system.level > opts.cell_cap)
        throw budget_error("quotient size exceeds solve cap");

    int ntiles = static_cast<int>(system.tiles.size());
    std::vector<char> usable(ntiles, 1);
    if (system.level == 1) {
        for (int t = 0; t < ntiles; ++t) {
            if (!injective_mod(q, system.tiles[t])) {
                // a level-1 periodic tiling forces injectivity of F mod Lambda
                if (ntiles == 1) return std::nullopt;
                usable[t] = 0;
            }
        }
        if (std::none_of(usable.begin(), usable.end(), [](char u) { return u; }))
            return std::nullopt;
    }

    CoverProblem prob;
    prob.num_cells = static_cast<int>(q.size());
    prob.lo.assign(prob.num_cells, system.level);
    prob.hi.assign(prob.num_cells, system.level);
    std::vector<std::pair<int, i64>> cand_key; // (tile, position index)
    for (int t = 0; t < ntiles; ++t) {
        if (!usable[t]) continue;
        for (i64 pos = 0; pos < q.size(); ++pos) {
            GroupElement at = q.section(pos);
            std::vector<std::pair<int, int>> cover;
            for (auto [cell, m] : footprint(q, system.tiles[t], at))
                cover.emplace_back(static_cast<int>(cell), m);
            prob.cand.push_back(std::move(cover));
            cand_key.emplace_back(t, pos);
        }
    }
    CoverResult res = solve_cover(prob, opts.node_budget);
    if (res.aborted) throw budget_error("cover search node budget exhausted");
    if (!res.feasible) return std::nullopt;

    std::vector<std::vector<i64>> per_tile(ntiles);
    for (int r : res.chosen) per_tile[cand_key[r].first].push_back(cand_key[r].second);
    TilingCertificate cert;
    cert.system = system;
    for (int t = 0; t < ntiles; ++t)
        cert.solution.push_back(make_periodic_set(g, lat, per_tile[t]));
    cert.verified = !check_tiling(system, cert.solution).has_value();
    return cert;
}

CheckResult check_tiling(const TileSystem& system, const std::vector<PeriodicSet>& a) {
    const GroupSpec& g = system.group();
    if (a.size() != system.tiles.size())
        throw dimension_error("one periodic set per tile expected");
    Lattice common = a.front().lattice;
    for (const PeriodicSet& s : a) {
        if (!(s.group == g)) throw dimension_error("solution group mismatch");
        common = lattice_intersect(common, s.lattice);
    }
    QuotientGroup q = make_quotient(g, common);
    std::vector<i64> counts(q.size(), 0);
    for (size_t t = 0; t < a.size(); ++t) {
        QuotientGroup qt = make_quotient(g, a[t].lattice);
        std::vector<Vec> reps = coset_reps(a[t].lattice, common);
        for (i64 r : a[t].residues) {
            GroupElement base = qt.section(r);
            for (const Vec& rep : reps) {
                GroupElement at = base;
                for (int i = 0; i < g.rank; ++i) at.free[i] += rep[i];
                for (const GroupElement& p : system.tiles[t].points)
                    counts[q.project(add(g, p, at))] += 1;
            }
        }
    }
    for (i64 c = 0; c < q.size(); ++c)
        if (counts[c] != system.level)
            return CheckViolation{q.section(c), counts[c]};
    return std::nullopt;
}

Decision1D decide_1d(const Tile& f_in) {
    Tile f = normalize(f_in);
    if (f.group.rank != 1 || !f.group.torsion.empty())
        throw dimension_error("decide_1d expects rank 1 with trivial torsion");
    std::vector<i64> offs;
    for (const GroupElement& p : f.points) offs.push_back(p.free[0]);
    i64 d = offs.back(); // sorted, min 0
    if (offs.size() == 1) {
        PeriodicSet w = make_periodic_set(f.group, diagonal_lattice({1}), {0});
        return Tileable1D{1, w};
    }
    if (d > 62) throw budget_error("decide_1d diameter too large for the state mask");

    // Forced frontier walk: with min(F) = 0 the leftmost uncovered cell can
    // only be covered by a translate placed exactly there, so the process is
    // deterministic and either hits a collision or enters a cycle.
    std::unordered_map<std::uint64_t, std::pair<i64, size_t>> seen; // mask -> (pos, #placed)
    std::uint64_t mask = 0; // bit k = cell pos+k covered
    i64 pos = 0;
    std::vector<i64> placements;
    for (;;) {
        if (!(mask & 1)) {
            for (i64 o : offs)
                if (mask & (1ull << o))
                    return NotTileable1D{placements};
            for (i64 o : offs) mask |= 1ull << o;
            placements.push_back(pos);
        }
        mask >>= 1;
        ++pos;
        auto it = seen.find(mask);
        if (it != seen.end()) {
            i64 start = it->second.first;
            size_t first_placed = it->second.second;
            i64 period = pos - start;
            QuotientGroup q = make_quotient(f.group, diagonal_lattice({period}));
            std::vector<i64> res;
            for (size_t i = first_placed; i < placements.size(); ++i)
                res.push_back(q.project(GroupElement{{placements[i]}, {}}));
            PeriodicSet w = make_periodic_set(f.group, diagonal_lattice({period}),
                                              std::move(res));
            return Tileable1D{period, w};
        }
        seen.emplace(mask, std::make_pair(pos, placements.size()));
    }
}

bool box_obstruction(const TileSystem& system, i64 radius, const SolveOptions& opts) {
    if (radius < 0) throw dimension_error("radius must be >= 0");
    const GroupSpec& g = system.group();
    int d = g.rank;
    i64 tor = g.torsion_size();

    // inner box cells need exact coverage; cells reachable from candidates
    // that overhang the box are only capped
    std::map<std::pair<Vec, i64>, int> cell_id;
    CoverProblem prob;
    auto get_cell = [&](const Vec& x, i64 t, bool inner) {
        auto [it, fresh] = cell_id.try_emplace({x, t}, static_cast<int>(cell_id.size()));
        if (fresh) {
            prob.lo.push_back(inner ? system.level : 0);
            prob.hi.push_back(system.level);
        }
        return it->second;
    };
    auto in_box = [&](const Vec& x) {
        for (i64 c : x)
            if (c < -radius || c > radius) return false;
        return true;
    };
    std::vector<Vec> inner;
    {
        Vec v(d, -radius);
        for (;;) {
            inner.push_back(v);
            int i = 0;
            while (i < d && ++v[i] > radius) v[i++] = -radius;
            if (i == d) break;
        }
    }
    std::vector<Vec> tor_reps;
    {
        Vec t(g.torsion_rank(), 0);
        for (i64 k = 0; k < tor; ++k) {
            tor_reps.push_back(t);
            for (int i = 0; i < g.torsion_rank(); ++i) {
                if (++t[i] < g.torsion[i]) break;
                t[i] = 0;
            }
        }
    }
    for (const Vec& x : inner)
        for (const Vec& t : tor_reps) {
            i64 tidx = 0, base = 1;
            for (int i = 0; i < g.torsion_rank(); ++i) {
                tidx += t[i] * base;
                base *= g.torsion[i];
            }
            get_cell(x, tidx, true);
        }

    // candidate translates: free offsets so the tile meets the inner box
    for (const Tile& tile : system.tiles) {
        Vec lo(d, 0), hi(d, 0);
        for (int i = 0; i < d; ++i) {
            lo[i] = hi[i] = tile.points.front().free[i];
            for (const GroupElement& p : tile.points) {
                lo[i] = std::min(lo[i], p.free[i]);
                hi[i] = std::max(hi[i], p.free[i]);
            }
        }
        Vec a(d);
        for (int i = 0; i < d; ++i) a[i] = -radius - hi[i];
        for (;;) {
            for (const Vec& at_tor : tor_reps) {
                bool meets = false;
                for (const GroupElement& p : tile.points) {
                    Vec x(d);
                    for (int i = 0; i < d; ++i) x[i] = p.free[i] + a[i];
                    if (in_box(x)) {
                        meets = true;
                        break;
                    }
                }
                if (!meets) break; // independent of torsion shift
                std::map<std::pair<Vec, i64>, int> cover;
                for (const GroupElement& p : tile.points) {
                    Vec x(d);
                    for (int i = 0; i < d; ++i) x[i] = p.free[i] + a[i];
                    i64 tidx = 0, base = 1;
                    for (int i = 0; i < g.torsion_rank(); ++i) {
                        tidx += mod_floor(p.tor[i] + at_tor[i], g.torsion[i]) * base;
                        base *= g.torsion[i];
                    }
                    cover[{x, tidx}] += 1;
                }
                std::vector<std::pair<int, int>> cand;
                for (const auto& [key, m] : cover)
                    cand.emplace_back(get_cell(key.first, key.second, in_box(key.first)),
                                      m);
                prob.cand.push_back(std::move(cand));
            }
            int i = 0;
            while (i < d && ++a[i] > radius - lo[i]) {
                a[i] = -radius - hi[i];
                ++i;
            }
            if (i == d) break;
        }
    }
    prob.num_cells = static_cast<int>(cell_id.size());
    CoverResult res = solve_cover(prob, opts.node_budget);
    if (res.aborted) throw budget_error("obstruction search node budget exhausted");
    return !res.feasible;
}

SemiResult semi_decide(const TileSystem& system, const SemiBudget& budget) {
    if (budget.max_index < 1 || budget.max_radius < 1)
        throw dimension_error("budgets must be >= 1");
    std::vector<Lattice> lattices =
        enumerate_lattices(system.group().rank, budget.max_index);
    size_t li = 0;
    i64 radius = 0;
    SolveOptions opts;
    opts.cell_cap = budget.cell_cap;
    while (li < lattices.size() || radius <= budget.max_radius) {
        if (budget.interrupt && budget.interrupt())
            return SemiResult{SemiResult::Kind::unknown, {}, {}};
        if (li < lattices.size()) {
            try {
                auto cert = solve_periodic(system, lattices[li], opts);
                if (cert && cert->verified)
                    return SemiResult{SemiResult::Kind::tileable, std::move(cert), {}};
            } catch (const budget_error&) {
                // skip over-budget lattices, keep the interleave honest
            }
            ++li;
        }
        if (radius <= budget.max_radius) {
            if (box_obstruction(system, radius, opts))
                return SemiResult{SemiResult::Kind::not_tileable, {},
                                  Obstruction{radius}};
            ++radius;
        }
    }
    return SemiResult{SemiResult::Kind::unknown, {}, {}};
}

PeriodicIntMap constant_map(int d, i64 value) {
    return PeriodicIntMap{scaled_lattice(d, 1), {value}};
}

CheckResult verify_soft_tiling(const SoftFunction& f, const PeriodicIntMap& g,
                               const PeriodicSet& a) {
    if (!a.group.torsion.empty())
        throw dimension_error("soft tilings are defined over Z^d");
    int d = a.group.rank;
    if (g.lattice.dim() != d) throw dimension_error("incommensurable lattices");
    Lattice common = lattice_intersect(g.lattice, a.lattice);
    QuotientGroup q = make_quotient(a.group, common);
    QuotientGroup qg = make_quotient(a.group, g.lattice);
    if (static_cast<i64>(g.values.size()) != qg.size())
        throw dimension_error("periodic map values do not cover its domain");
    QuotientGroup qa = make_quotient(a.group, a.lattice);
    std::vector<char> in_a(qa.size(), 0);
    for (i64 r : a.residues) in_a[r] = 1;
    for (i64 c = 0; c < q.size(); ++c) {
        GroupElement x = q.section(c);
        i64 sum = 0;
        for (const auto& [y, w] : f) {
            GroupElement z = x;
            for (int i = 0; i < d; ++i) z.free[i] -= y[i];
            if (in_a[qa.project(z)]) sum += w;
        }
        if (sum != g.values[qg.project(x)]) return CheckViolation{x, sum};
    }
    return std::nullopt;
}

}  // namespace tessella
