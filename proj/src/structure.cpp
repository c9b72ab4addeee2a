#include "tessella/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tessella {

namespace {

void require_level1(const Tile& f, const PeriodicSet& a, const char* op) {
    if (check_tiling(single(f, 1), {a}))
        throw error(std::string(op) + ": F, A is not a level-1 tiling");
}

i64 default_q(const Tile& f) {
    return f.group.torsion_exponent() * f.size();
}

// Representatives of Z^d / lat: the box [0, diag(0)) x ... x [0, diag(d-1)).
void for_each_box_rep(const Lattice& lat, const std::function<void(const Vec&)>& fn) {
    int d = lat.dim();
    Vec t(d, 0);
    for (;;) {
        fn(t);
        int i = 0;
        while (i < d && ++t[i] == lat.diag(i)) t[i++] = 0;
        if (i == d) break;
    }
}

// q*v-orbit of torus cell `start` (step has zero torsion part).
std::vector<i64> orbit_of(const QuotientGroup& tq, i64 step, i64 start) {
    std::vector<i64> orb{start};
    for (i64 c = tq.add_indices(start, step); c != start; c = tq.add_indices(c, step))
        orb.push_back(c);
    return orb;
}

}  // namespace

bool DilationReport::all_ok() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return !r.has_value(); });
}

DilationReport dilation_check(const Tile& f, const PeriodicSet& a, i64 q,
                              std::vector<i64> rs) {
    if (q <= 0) q = default_q(f);
    if (rs.empty()) rs = {1 + q, 1 + 2 * q, 1 - q, 1 + 5 * q};
    require_level1(f, a, "dilation_check");
    i64 e = f.group.torsion_exponent();
    for (i64 r : rs) {
        if (mod_floor(r - 1, q) != 0)
            throw error("dilation_check: r = " + std::to_string(r) +
                        " is not 1 mod " + std::to_string(q));
        if (std::gcd(r < 0 ? -r : r, e) != 1)
            throw error("dilation_check: r shares a factor with the torsion exponent");
    }
    DilationReport rep{q, rs, {}};
    for (i64 r : rs)
        rep.results.push_back(check_tiling(single(dilate(f, r), 1), {a}));
    return rep;
}

Fraction exact_density(const PeriodicSet& a) {
    return Fraction(static_cast<i64>(a.residues.size()),
                    a.lattice.index() * a.group.torsion_size());
}

std::vector<Fraction> density_estimate(int d, const std::function<bool(const Vec&)>& eval,
                                       const std::vector<i64>& radii) {
    std::vector<Fraction> out;
    for (i64 n : radii) {
        i64 hits = 0, total = 1;
        Vec x(d, -n);
        for (;;) {
            if (eval(x)) ++hits;
            int i = 0;
            while (i < d && ++x[i] > n) x[i++] = -n;
            if (i == d) break;
        }
        for (int i = 0; i < d; ++i) total *= 2 * n + 1;
        out.push_back(Fraction(hits, total));
    }
    return out;
}

std::vector<Fraction> density_estimate(const PeriodicSet& a, const std::vector<i64>& radii) {
    GroupSpec g = a.group;
    std::vector<Vec> tors;
    {
        Vec v(g.torsion.size(), 0);
        for (i64 i = 0; i < g.torsion_size(); ++i) {
            tors.push_back(v);
            for (size_t j = 0; j < v.size(); ++j) {
                if (++v[j] < g.torsion[j]) break;
                v[j] = 0;
            }
        }
    }
    auto eval = [&](const Vec& x) {
        i64 c = 0;
        for (const Vec& t : tors)
            if (member(a, {x, t})) ++c;
        return c;
    };
    std::vector<Fraction> out;
    i64 ts = g.torsion_size();
    for (i64 n : radii) {
        i64 hits = 0, total = ts;
        Vec x(g.rank, -n);
        for (;;) {
            hits += eval(x);
            int i = 0;
            while (i < g.rank && ++x[i] > n) x[i++] = -n;
            if (i == g.rank) break;
        }
        for (int i = 0; i < g.rank; ++i) total *= 2 * n + 1;
        out.push_back(Fraction(hits, total));
    }
    return out;
}

std::optional<WeakDecomposition> weak_periodic_decompose(const Tile& f,
                                                         const PeriodicSet& a, i64 q) {
    if (f.group.rank != 2)
        throw dimension_error("weak_periodic_decompose requires rank 2");
    if (q <= 0) q = default_q(f);
    require_level1(f, a, "weak_periodic_decompose");
    std::vector<Vec> dirs = direction_set(f);
    if (dirs.empty()) dirs = {{1, 0}};

    QuotientGroup tq = make_quotient(a.group, a.lattice);
    std::vector<char> in_a(tq.size(), 0);
    for (i64 r : a.residues) in_a[r] = 1;

    // Per direction: the q*v-orbits that lie fully inside A.
    struct Cand {
        int dir;
        std::vector<i64> cells;
    };
    std::vector<Cand> cands;
    std::vector<std::vector<i64>> orbit_id(dirs.size(),
                                           std::vector<i64>(tq.size(), -1));
    for (size_t vi = 0; vi < dirs.size(); ++vi) {
        Vec step_free = {q * dirs[vi][0], q * dirs[vi][1]};
        i64 step = tq.project(make_element(a.group, step_free));
        for (i64 r : a.residues) {
            if (orbit_id[vi][r] != -1) continue;
            std::vector<i64> orb = orbit_of(tq, step, r);
            bool full = std::all_of(orb.begin(), orb.end(),
                                    [&](i64 c) { return in_a[c]; });
            i64 id = full ? static_cast<i64>(cands.size()) : -2;
            for (i64 c : orb) orbit_id[vi][c] = id;
            if (full) cands.push_back({static_cast<int>(vi), std::move(orb)});
        }
    }

    std::map<i64, int> cell_of; // residue -> dense cell id
    for (i64 r : a.residues) cell_of[r] = static_cast<int>(cell_of.size());

    auto assemble = [&](const std::vector<int>& chosen) {
        WeakDecomposition dec{q, {}, {}};
        std::vector<std::vector<i64>> by_dir(dirs.size());
        for (int ci : chosen)
            for (i64 c : cands[ci].cells) by_dir[cands[ci].dir].push_back(c);
        for (size_t vi = 0; vi < dirs.size(); ++vi) {
            if (by_dir[vi].empty()) continue;
            dec.dirs.push_back(dirs[vi]);
            dec.parts.push_back(make_periodic_set(a.group, a.lattice, by_dir[vi]));
        }
        return dec;
    };

    // Greedy: first direction in canonical order whose orbit is free.
    {
        std::vector<char> taken(tq.size(), 0);
        std::vector<int> chosen;
        bool stuck = false;
        for (i64 r : a.residues) {
            if (taken[r]) continue;
            bool placed = false;
            for (size_t vi = 0; vi < dirs.size() && !placed; ++vi) {
                i64 id = orbit_id[vi][r];
                if (id < 0) continue;
                const auto& orb = cands[id].cells;
                if (std::any_of(orb.begin(), orb.end(),
                                [&](i64 c) { return taken[c]; }))
                    continue;
                for (i64 c : orb) taken[c] = 1;
                chosen.push_back(static_cast<int>(id));
                placed = true;
            }
            if (!placed) {
                stuck = true;
                break;
            }
        }
        if (!stuck) return assemble(chosen);
    }

    CoverProblem p;
    p.num_cells = static_cast<int>(cell_of.size());
    p.lo.assign(p.num_cells, 1);
    p.hi.assign(p.num_cells, 1);
    for (const Cand& c : cands) {
        std::vector<std::pair<int, int>> occ;
        for (i64 cell : c.cells) occ.emplace_back(cell_of.at(cell), 1);
        p.cand.push_back(std::move(occ));
    }
    CoverResult res = solve_cover(p);
    if (!res.feasible) return std::nullopt;
    return assemble(res.chosen);
}

Lattice min_period(const PeriodicSet& a) {
    std::vector<Vec> gens = a.lattice.cols;
    for_each_box_rep(a.lattice, [&](const Vec& t) {
        if (std::all_of(t.begin(), t.end(), [](i64 x) { return x == 0; })) return;
        if (translate(a, make_element(a.group, t)) == a) gens.push_back(t);
    });
    return lattice_from_columns(a.group.rank, std::move(gens));
}

DecompositionReport verify_decomposition(const Tile& f, const PeriodicSet& a,
                                         const WeakDecomposition& dec) {
    if (dec.dirs.size() != dec.parts.size())
        throw error("verify_decomposition: dirs/parts length mismatch");
    DecompositionReport rep;

    // (i) pairwise disjoint with union A, on a common refinement.
    Lattice common = a.lattice;
    for (const PeriodicSet& p : dec.parts)
        common = lattice_intersect(common, p.lattice);
    std::vector<i64> all;
    for (const PeriodicSet& p : dec.parts) {
        PeriodicSet r = rebase(p, common);
        all.insert(all.end(), r.residues.begin(), r.residues.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return {false, "parts are not pairwise disjoint", {}};
    if (all != rebase(a, common).residues)
        return {false, "union of parts differs from A", {}};

    // (ii) each part invariant under q * v.
    for (size_t i = 0; i < dec.parts.size(); ++i) {
        Vec step(dec.dirs[i]);
        for (i64& c : step) c *= dec.q;
        const PeriodicSet& p = dec.parts[i];
        if (translate(p, make_element(p.group, step)) != p)
            return {false, "part " + std::to_string(i) + " is not q*v-invariant", {}};
    }

    // (iii) each (F cap (x + <v>)) + A_v is fully periodic; record the
    // coarsest detected period lattice.
    std::optional<Lattice> detected;
    for (size_t i = 0; i < dec.parts.size(); ++i) {
        const Vec& v = dec.dirs[i];
        const PeriodicSet& p = dec.parts[i];
        // line classes: group F's points by their coset of Zv in Z^2.
        std::map<i64, std::vector<GroupElement>> classes;
        for (const GroupElement& pt : f.points) {
            i64 key = pt.free[0] * v[1] - pt.free[1] * v[0];
            classes[key].push_back(pt);
        }
        QuotientGroup tq = make_quotient(p.group, p.lattice);
        for (const auto& [key, pts] : classes) {
            std::set<i64> sum;
            for (const GroupElement& pt : pts)
                for (i64 r : p.residues)
                    sum.insert(tq.project(add(p.group, tq.section(r), pt)));
            PeriodicSet b = make_periodic_set(p.group, p.lattice,
                                              {sum.begin(), sum.end()});
            Lattice per = min_period(b);
            detected = detected ? lattice_intersect(*detected, per) : per;
        }
    }
    rep.detected = detected;
    return rep;
}

ConsequenceReport structure_consequence_check(const Tile& f, const PeriodicSet& a,
                                              i64 q) {
    if (f.group.rank != 2)
        throw dimension_error("structure_consequence_check requires rank 2");
    if (q <= 0) q = default_q(f);
    require_level1(f, a, "structure_consequence_check");

    QuotientGroup tq = make_quotient(a.group, a.lattice);
    std::vector<char> in_a(tq.size(), 0);
    for (i64 r : a.residues) in_a[r] = 1;

    // Slice convolutions c_x(z) = #{p in F with free part x : z - p in A}.
    SliceMap sm = slices(f);
    std::vector<std::vector<i64>> conv;
    for (const auto& [x, fibers] : sm.slices) {
        std::vector<i64> c(tq.size(), 0);
        for (const Vec& t : fibers) {
            i64 shift = tq.project(neg(a.group, make_element(a.group, x, t)));
            for (i64 z = 0; z < tq.size(); ++z)
                if (in_a[tq.add_indices(z, shift)]) ++c[z];
        }
        conv.push_back(std::move(c));
    }
    for (i64 z = 0; z < tq.size(); ++z) {
        i64 s = 0;
        for (const auto& c : conv) s += c[z];
        if (s != 1) return {false, "slice convolutions do not sum to 1"};
    }
    for (const auto& c : conv)
        for (i64 v : c)
            if (v < 0 || v > 1) return {false, "slice convolution outside {0,1}"};

    std::vector<Vec> dirs = direction_set(f);
    // Orbit labels per direction: a q*v-invariant function is one value per
    // orbit, so feasibility of 1 - c_x = sum_v (nonneg, q*v-invariant) is a
    // linear program over orbit values.
    std::vector<std::vector<i64>> labels;
    std::vector<i64> base; // column offset per direction
    i64 ncols = 0;
    for (const Vec& v : dirs) {
        i64 step = tq.project(make_element(a.group, {q * v[0], q * v[1]}));
        std::vector<i64> lab(tq.size(), -1);
        i64 next = 0;
        for (i64 z = 0; z < tq.size(); ++z) {
            if (lab[z] != -1) continue;
            for (i64 c : orbit_of(tq, step, z)) lab[c] = next;
            ++next;
        }
        base.push_back(ncols);
        ncols += next;
        labels.push_back(std::move(lab));
    }
    for (const auto& c : conv) {
        bool zero = std::all_of(c.begin(), c.end(), [](i64 v) { return v == 1; });
        if (zero) continue; // 1 - c_x = 0: trivially feasible
        std::vector<std::vector<Fraction>> mat(tq.size(),
                                               std::vector<Fraction>(ncols, Fraction(0)));
        std::vector<Fraction> rhs(tq.size());
        for (i64 z = 0; z < tq.size(); ++z) {
            rhs[z] = Fraction(1 - c[z]);
            for (size_t vi = 0; vi < dirs.size(); ++vi)
                mat[z][base[vi] + labels[vi][z]] = Fraction(1);
        }
        if (ncols == 0 || !linear_feasible(mat, rhs))
            return {false, "no q*v-invariant nonnegative decomposition of 1 - c_x"};
    }
    return {};
}

}  // namespace tessella
