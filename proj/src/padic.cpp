#include "tessella/padic.hpp"

#include <algorithm>

namespace tessella {

namespace {
bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace

PadicContext make_padic(i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw error("p must be an odd prime");
    return {p, p * p};
}

i64 f_p(const PadicContext& ctx, i64 n) {
    if (n == 0) return 1;
    while (n % ctx.p == 0) n /= ctx.p;
    return mod_floor(n, ctx.p);
}

namespace {
// word given as (index, value) pairs; step h fixed.  Collects the excluded
// coset and offset at each depth.
bool sp_rec(i64 p, i64 h, const std::vector<std::pair<i64, i64>>& w, int depth,
            std::vector<i64>& cosets, std::vector<i64>& offsets) {
    if (w.size() <= 1) return true;
    if (std::all_of(w.begin(), w.end(),
                    [&](const auto& e) { return e.second == w.front().second; }))
        return true;
    if (depth < 0) return false;
    for (i64 c1 = 0; c1 < p; ++c1) {
        i64 alpha = -1;
        bool affine = true;
        std::vector<std::pair<i64, i64>> sub;
        for (const auto& [n, v] : w) {
            if (mod_floor(n, p) == c1) {
                sub.emplace_back(div_floor(n - c1, p), v);
                continue;
            }
            i64 a = mod_floor(v - h * n, p);
            if (alpha == -1) alpha = a;
            if (a != alpha) {
                affine = false;
                break;
            }
        }
        if (!affine || alpha == -1) continue;
        cosets.push_back(c1);
        offsets.push_back(alpha);
        if (sp_rec(p, h, sub, depth - 1, cosets, offsets)) return true;
        cosets.pop_back();
        offsets.pop_back();
    }
    return false;
}
}  // namespace

std::optional<SpWitness> is_sp_cutoff(const PadicContext& ctx, const std::vector<i64>& word) {
    if (static_cast<i64>(word.size()) != ctx.M)
        throw error("cutoff word must cover {1..M}");
    for (i64 v : word)
        if (v < 1 || v >= ctx.p) throw error("cutoff word value outside Sigma_p");
    if (std::all_of(word.begin(), word.end(), [&](i64 v) { return v == word.front(); }))
        return SpWitness{};
    std::vector<std::pair<i64, i64>> w;
    for (i64 n = 1; n <= ctx.M; ++n) w.emplace_back(n, word[n - 1]);
    int depth = 0;
    for (i64 m = ctx.M; m >= 1; m /= ctx.p) ++depth; // log_p M + 1
    for (i64 h = 1; h < ctx.p; ++h) {
        SpWitness wit{h, {}, {}};
        if (sp_rec(ctx.p, h, w, depth, wit.cosets, wit.offsets)) return wit;
    }
    return std::nullopt;
}

SudokuWindow standard_solution(const PadicContext& ctx, i64 m0, i64 m1) {
    if (m0 > m1) throw error("empty row interval");
    SudokuWindow s{ctx, m0, m1, {}};
    s.cells.reserve((m1 - m0 + 1) * ctx.M);
    for (i64 m = m0; m <= m1; ++m) {
        i64 v = f_p(ctx, m);
        for (i64 n = 1; n <= ctx.M; ++n) s.cells.push_back(v);
    }
    return s;
}

bool SudokuReport::lines_ok() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const Line& l) { return l.accepted; });
}

SudokuReport verify_sudoku_window(const PadicContext& ctx, const SudokuWindow& s,
                                  const std::vector<std::pair<i64, i64>>& slopes) {
    SudokuReport rep;
    for (i64 n = 1; n <= ctx.M; ++n) {
        bool two = false;
        for (i64 m = s.m0; m <= s.m1 && !two; ++m) two = s.at(n, m) != s.at(n, s.m0);
        rep.columns.push_back({n, two});
    }
    for (auto [a, b] : slopes) {
        std::vector<i64> word;
        for (i64 n = 1; n <= ctx.M; ++n) {
            i64 m = a * n + b;
            if (m < s.m0 || m > s.m1)
                throw error("requested line leaves the window rows");
            word.push_back(s.at(n, m));
        }
        auto wit = is_sp_cutoff(ctx, word);
        rep.lines.push_back({a, b, wit.has_value(), wit});
    }
    return rep;
}

i64 vdw_violation(const PadicContext& ctx, i64 n, i64 a, i64 d) {
    if (n < 1 || mod_floor(d, n) != 1) throw error("need d == 1 mod N");
    i64 bound = ctx.p * ctx.p * n;
    for (i64 j = 0; j <= bound; ++j)
        if (f_p(ctx, a + j * d) != f_p(ctx, a + (n + j) * d)) return j;
    throw error("no van der Waerden violation within p^2 N — bound breached");
}

i64 nonperiodicity_witness(const PadicContext& ctx, i64 t, i64 bound) {
    if (t < 1) throw error("period must be positive");
    if (bound <= 0) bound = ctx.p * ctx.p * t;
    for (i64 k = 0; k <= bound; ++k)
        for (i64 n : {k, -k}) {
            if (f_p(ctx, n) != f_p(ctx, n + t)) return n;
            if (k == 0) break;
        }
    throw error("f_p looked T-periodic on the whole scan range");
}

ColoringInstance make_coloring(std::vector<Vec> dirs, std::vector<Vec> orthos, i64 n,
                               std::vector<i64> sigma,
                               std::vector<std::tuple<std::vector<i64>, i64, i64>> table) {
    if (dirs.size() != orthos.size()) throw error("dirs/orthos length mismatch");
    for (size_t i = 0; i < dirs.size(); ++i)
        if (dirs[i][0] * orthos[i][0] + dirs[i][1] * orthos[i][1] != 0)
            throw error("orthogonal is not orthogonal to its direction");
    ColoringInstance inst;
    inst.dirs = std::move(dirs);
    inst.orthos = std::move(orthos);
    inst.N = n;
    inst.sigma = std::move(sigma);
    inst.table = std::move(table);
    inst.omega = [table = inst.table](const std::vector<i64>& cv, i64 cx, i64 cy) {
        return std::find(table.begin(), table.end(),
                         std::make_tuple(cv, cx, cy)) != table.end();
    };
    return inst;
}

ColoringResult coloring_check(const ColoringInstance& inst,
                              const std::vector<IntTable>& c,
                              const std::optional<Clock2D>& clock, const Vec& lo,
                              const Vec& hi) {
    if (c.size() != inst.dirs.size())
        throw error("one color table per direction required");
    auto check_offset = [&](const Vec& off) -> std::optional<Vec> {
        std::vector<i64> cv(inst.dirs.size());
        for (i64 y = lo[1]; y <= hi[1]; ++y)
            for (i64 x = lo[0]; x <= hi[0]; ++x) {
                for (size_t i = 0; i < inst.orthos.size(); ++i) {
                    i64 j = x * inst.orthos[i][0] + y * inst.orthos[i][1];
                    if (!c[i].covers(j))
                        throw error("color table does not cover the box");
                    cv[i] = c[i].at(j);
                }
                if (!inst.omega(cv, mod_floor(x + off[0], inst.N),
                                mod_floor(y + off[1], inst.N)))
                    return Vec{x, y};
            }
        return std::nullopt;
    };
    if (clock) {
        auto bad = check_offset(clock->offset);
        if (bad) return {false, bad, std::nullopt};
        return {true, std::nullopt, clock->offset};
    }
    std::optional<Vec> first_bad;
    for (i64 ox = 0; ox < inst.N; ++ox)
        for (i64 oy = 0; oy < inst.N; ++oy) {
            auto bad = check_offset({ox, oy});
            if (!bad) return {true, std::nullopt, Vec{ox, oy}};
            if (!first_bad) first_bad = bad;
        }
    return {false, first_bad, std::nullopt};
}

ColoringInstance sudoku_as_coloring(const PadicContext& ctx) {
    ColoringInstance inst;
    for (i64 n = 1; n <= ctx.M; ++n) {
        inst.dirs.push_back({1, -n});
        inst.orthos.push_back({n, 1});
    }
    inst.N = ctx.p;
    for (i64 v = 1; v < ctx.p; ++v) inst.sigma.push_back(v);
    inst.name = "sudoku_p" + std::to_string(ctx.p);
    inst.omega = [ctx](const std::vector<i64>& cv, i64, i64) {
        return is_sp_cutoff(ctx, cv).has_value();
    };
    return inst;
}

}  // namespace tessella
