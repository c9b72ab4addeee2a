#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tessella/common.hpp"

namespace tessella {

/// Fixed odd prime p with board width M = p^2; the digit alphabet is
/// Sigma_p = {1, ..., p-1}.
struct PadicContext {
    i64 p = 3;
    i64 M = 9;
};

PadicContext make_padic(i64 p);

/// n with all factors of p stripped, reduced mod p; f_p(0) = 1.
i64 f_p(const PadicContext& ctx, i64 n);

/// Witness that a word lies in the cutoff class S_p: a common step h and,
/// per recursion depth, the excluded coset and affine offset.  Constant
/// words carry step 0 and an empty chain.
struct SpWitness {
    i64 step = 0;
    std::vector<i64> cosets;
    std::vector<i64> offsets;
};

/// word[i] is the value at n = i+1, i = 0..M-1.  Accepts iff the word is
/// constant or, for some step h in Sigma_p, affine with slope h outside one
/// coset of pZ, with the coset restriction (reindexed, advancing by h per
/// step of p) recursively of the same shape.
std::optional<SpWitness> is_sp_cutoff(const PadicContext& ctx, const std::vector<i64>& word);

/// Board values on {1..M} x [m0, m1].
struct SudokuWindow {
    PadicContext ctx;
    i64 m0 = 0, m1 = 0;
    std::vector<i64> cells; // (m - m0) * M + (n - 1)

    i64 at(i64 n, i64 m) const { return cells[(m - m0) * ctx.M + (n - 1)]; }
};

/// S(n, m) = f_p(m) for every column n.
SudokuWindow standard_solution(const PadicContext& ctx, i64 m0, i64 m1);

struct SudokuReport {
    // Column non-constancy can be confirmed but never refuted on a window.
    struct Column {
        i64 n;
        bool satisfied; // two distinct values seen; otherwise unconfirmed
    };
    struct Line {
        i64 a, b;
        bool accepted;
        std::optional<SpWitness> witness;
    };
    std::vector<Column> columns;
    std::vector<Line> lines;

    bool lines_ok() const;
};

/// Lines are the words n -> S(n, a n + b), n = 1..M; each must pass
/// is_sp_cutoff.  Throws when a requested line leaves the window rows.
SudokuReport verify_sudoku_window(const PadicContext& ctx, const SudokuWindow& s,
                                  const std::vector<std::pair<i64, i64>>& slopes);

/// Least 0 <= j <= p^2 N with f_p(a + j d) != f_p(a + (N+j) d); requires
/// d == 1 mod N.  Exhausting the bound contradicts the arithmetic bound and
/// throws.
i64 vdw_violation(const PadicContext& ctx, i64 n, i64 a, i64 d);

/// Least-|n| witness in [-bound, bound] that f_p is not T-periodic
/// (scanning 0, 1, -1, 2, -2, ...).  Default bound p^2 T.
i64 nonperiodicity_witness(const PadicContext& ctx, i64 t, i64 bound = 0);

/// Integer table on a contiguous interval [lo, lo + size).
struct IntTable {
    i64 lo = 0;
    std::vector<i64> vals;

    bool covers(i64 j) const {
        return j >= lo && j < lo + static_cast<i64>(vals.size());
    }
    i64 at(i64 j) const { return vals[j - lo]; }
};

/// Coloring(V, N, Sigma, Omega): directions v with chosen orthogonals vbar,
/// clock modulus N, alphabet Sigma, and the allowed set Omega of
/// (color tuple, clock position) pairs — given as an explicit table, or as a
/// named computable predicate when the table would be astronomical.
struct ColoringInstance {
    std::vector<Vec> dirs, orthos;
    i64 N = 1;
    std::vector<i64> sigma;
    std::function<bool(const std::vector<i64>&, i64, i64)> omega;
    std::string name; // predicate-backed instances; empty for explicit ones
    std::vector<std::tuple<std::vector<i64>, i64, i64>> table; // explicit Omega
};

ColoringInstance make_coloring(std::vector<Vec> dirs, std::vector<Vec> orthos, i64 n,
                               std::vector<i64> sigma,
                               std::vector<std::tuple<std::vector<i64>, i64, i64>> table);

struct Clock2D {
    Vec offset{0, 0}; // sigma(x) = x + offset mod N, componentwise
};

struct ColoringResult {
    bool ok = false;
    std::optional<Vec> violation;
    std::optional<Vec> offset; // clock offset that worked (searched or given)
};

/// Checks ((C_v(x . vbar))_v, sigma(x mod N)) in Omega for every x in the
/// box.  When no clock is given, all N^2 offsets are tried.  Throws when a
/// required table value is missing.
ColoringResult coloring_check(const ColoringInstance& inst,
                              const std::vector<IntTable>& c,
                              const std::optional<Clock2D>& clock, const Vec& lo,
                              const Vec& hi);

/// The Sudoku rules as a predicate-backed coloring: V = {(1,-n)}, vbar =
/// (n,1), N = p, Sigma = Sigma_p; Omega accepts a color tuple iff the
/// assembled M-word passes is_sp_cutoff.  Column non-constancy (rule (i)) is
/// a whole-column side condition and is not expressible pointwise here.
ColoringInstance sudoku_as_coloring(const PadicContext& ctx);

}  // namespace tessella
