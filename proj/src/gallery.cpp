#include "tessella/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tessella {

namespace {
void require_box(const Vec& lo, const Vec& hi) {
    if (lo.size() != hi.size() || lo.empty())
        throw dimension_error("window box corners disagree");
    for (size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) throw error("empty window box");
}
}  // namespace

bool WindowSet::in_box(const Vec& x) const {
    for (int i = 0; i < dim(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

i64 WindowSet::index(const Vec& x) const {
    i64 idx = 0, stride = 1;
    for (int i = 0; i < dim(); ++i) {
        idx += (x[i] - lo[i]) * stride;
        stride *= extent(i);
    }
    return idx;
}

Vec WindowSet::point(i64 index) const {
    Vec x(dim());
    for (int i = 0; i < dim(); ++i) {
        x[i] = lo[i] + index % extent(i);
        index /= extent(i);
    }
    return x;
}

bool WindowSet::at(const Vec& x) const {
    return in_box(x) && membership[index(x)];
}

WindowSet make_window(Vec lo, Vec hi, const std::function<bool(const Vec&)>& pred) {
    require_box(lo, hi);
    WindowSet w{std::move(lo), std::move(hi), {}};
    i64 n = 1;
    for (int i = 0; i < w.dim(); ++i) n *= w.extent(i);
    w.membership.resize(n);
    for (i64 k = 0; k < n; ++k) w.membership[k] = pred(w.point(k)) ? 1 : 0;
    return w;
}

WindowSet window_of(const PeriodicSet& a, Vec lo, Vec hi) {
    if (!a.group.torsion.empty())
        throw dimension_error("window_of needs a torsion-free group");
    return make_window(std::move(lo), std::move(hi), [&](const Vec& x) {
        return member(a, make_element(a.group, x));
    });
}

PeriodicSet gen_square_tiling(const std::vector<i64>& a_table, Orientation o) {
    if (a_table.empty()) throw error("empty shift table");
    i64 p = static_cast<i64>(a_table.size());
    GroupSpec g = make_group(2);
    std::vector<GroupElement> pts;
    for (i64 n = 0; n < p; ++n) {
        i64 s = mod_floor(a_table[n], 2);
        if (o == Orientation::columns)
            pts.push_back(make_element(g, {2 * n, s}));
        else
            pts.push_back(make_element(g, {s, 2 * n}));
    }
    Lattice lat = o == Orientation::columns ? diagonal_lattice({2 * p, 2})
                                            : diagonal_lattice({2, 2 * p});
    return periodic_set_from_points(g, lat, pts);
}

WindowSet gen_square_tiling(const std::function<i64(i64)>& a, Orientation o,
                            Vec lo, Vec hi) {
    return make_window(std::move(lo), std::move(hi), [&](const Vec& z) {
        i64 x = z[0], y = z[1];
        if (o == Orientation::rows) std::swap(x, y);
        return x % 2 == 0 && mod_floor(y - a(div_floor(x, 2)), 2) == 0;
    });
}

PeriodicSet gen_disconnected_tiling(const std::vector<i64>& a_table,
                                    const std::vector<i64>& b_table) {
    if (a_table.empty() || b_table.empty()) throw error("empty shift table");
    i64 pa = static_cast<i64>(a_table.size());
    i64 pb = static_cast<i64>(b_table.size());
    GroupSpec g = make_group(2);
    std::vector<GroupElement> pts;
    for (i64 n = 0; n < pa; ++n)
        for (i64 m = 0; m < pb; ++m) {
            pts.push_back(make_element(g, {4 * n, 2 * m + mod_floor(a_table[n], 2)}));
            pts.push_back(make_element(g, {4 * n + 1 + 2 * mod_floor(b_table[m], 2), 2 * m}));
        }
    return periodic_set_from_points(g, diagonal_lattice({4 * pa, 2 * pb}), pts);
}

WindowSet gen_disconnected_tiling(const std::function<i64(i64)>& a,
                                  const std::function<i64(i64)>& b, Vec lo, Vec hi) {
    return make_window(std::move(lo), std::move(hi), [&](const Vec& z) {
        i64 x = z[0], y = z[1];
        if (mod_floor(x, 4) == 0 && mod_floor(y - a(div_floor(x, 4)), 2) == 0)
            return true;
        return mod_floor(y, 2) == 0 &&
               mod_floor(x - 1 - 2 * b(div_floor(y, 2)), 4) == 0;
    });
}

namespace {
// {pn/q} + {pm/q} - {p(n+m)/q} in units of 1: the fractional-part carry.
bool a_alpha_member(i64 p, i64 q, i64 n, i64 m) {
    i64 carry = (mod_floor(p * n, q) + mod_floor(p * m, q) - mod_floor(p * (n + m), q)) / q;
    i64 parity = mod_floor(n + div_floor(m, 2), 2);
    return (parity == 0) == (carry == 1);
}
}  // namespace

PeriodicSet gen_a_alpha(i64 p, i64 q) {
    if (q <= 0) throw error("gen_a_alpha: nonpositive denominator");
    i64 g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    GroupSpec grp = make_group(2);
    Lattice lat = diagonal_lattice({lcm64(2, q), lcm64(4, q)});
    std::vector<GroupElement> pts;
    for (i64 n = 0; n < lat.diag(0); ++n)
        for (i64 m = 0; m < lat.diag(1); ++m)
            if (a_alpha_member(p, q, n, m)) pts.push_back(make_element(grp, {n, m}));
    return periodic_set_from_points(grp, lat, pts);
}

WindowSet gen_a_alpha(i64 p, i64 q, Vec lo, Vec hi) {
    if (q <= 0) throw error("gen_a_alpha: nonpositive denominator");
    return make_window(std::move(lo), std::move(hi), [&](const Vec& z) {
        return a_alpha_member(p, q, z[0], z[1]);
    });
}

std::vector<std::pair<i64, i64>> cf_convergents(double alpha, int max_terms) {
    std::vector<std::pair<i64, i64>> out;
    i64 h0 = 1, k0 = 0, h1 = static_cast<i64>(std::floor(alpha)), k1 = 1;
    double x = alpha;
    out.emplace_back(h1, k1);
    for (int i = 1; i < max_terms; ++i) {
        double frac = x - std::floor(x);
        if (frac < 1e-12) break;
        x = 1.0 / frac;
        double af = std::floor(x);
        if (af > 1e15) break;
        i64 a = static_cast<i64>(af);
        i64 h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (h2 > (i64{1} << 40) || k2 > (i64{1} << 40)) break;
        out.emplace_back(h2, k2);
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
    }
    return out;
}

WindowSet gen_a_alpha_window(double alpha, Vec lo, Vec hi) {
    auto conv = cf_convergents(alpha);
    std::optional<WindowSet> prev;
    for (auto [p, q] : conv) {
        if (q < 2) continue;
        WindowSet w = gen_a_alpha(p, q, lo, hi);
        if (prev && prev->membership == w.membership) return w;
        prev = std::move(w);
    }
    throw error("gen_a_alpha_window: membership did not stabilize across convergents");
}

Tile equidistributed_level4_tile() {
    GroupSpec g = make_group(2);
    std::vector<GroupElement> pts;
    const Vec e1{0, 2}, e2{1, 0}, e3{2, -2};
    for (int s = 0; s < 8; ++s) {
        Vec p{0, 0};
        if (s & 1) { p[0] += e1[0]; p[1] += e1[1]; }
        if (s & 2) { p[0] += e2[0]; p[1] += e2[1]; }
        if (s & 4) { p[0] += e3[0]; p[1] += e3[1]; }
        pts.push_back(make_element(g, p));
    }
    return make_tile(g, std::move(pts), /*normalized=*/false);
}

WindowVerdict window_verify(const TileSystem& system, const WindowSet& w) {
    if (system.tiles.size() != 1)
        throw error("window_verify handles single-tile systems");
    const Tile& f = system.tiles.front();
    if (!f.group.torsion.empty())
        throw dimension_error("window_verify needs a torsion-free group");
    WindowVerdict verdict{WindowVerdict::Kind::ok, {}, 0};
    bool any = false;
    for (i64 k = 0; k < w.cells(); ++k) {
        Vec z = w.point(k);
        bool determinable = true;
        i64 count = 0;
        for (const GroupElement& p : f.points) {
            Vec t(z);
            for (size_t i = 0; i < t.size(); ++i) t[i] -= p.free[i];
            if (!w.in_box(t)) {
                determinable = false;
                break;
            }
            if (w.membership[w.index(t)]) ++count;
        }
        if (!determinable) {
            if (!verdict.point) verdict.point = z;
            continue;
        }
        any = true;
        ++verdict.checked;
        if (count != system.level)
            return {WindowVerdict::Kind::violation, z, verdict.checked};
    }
    if (!any) return {WindowVerdict::Kind::inconclusive, verdict.point, 0};
    verdict.point.reset();
    return verdict;
}

}  // namespace tessella
