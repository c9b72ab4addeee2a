#include "tessella/group.hpp"

#include <algorithm>
#include <cstdlib>

namespace tessella {

i64 GroupSpec::torsion_size() const {
    i64 s = 1;
    for (i64 n : torsion) s *= n;
    return s;
}

i64 GroupSpec::torsion_exponent() const {
    i64 e = 1;
    for (i64 n : torsion) e = lcm64(e, n);
    return e;
}

GroupSpec make_group(int rank, std::vector<i64> torsion) {
    if (rank < 0) throw dimension_error("group rank must be non-negative");
    for (i64 n : torsion)
        if (n < 2) throw dimension_error("torsion moduli must be >= 2");
    if (rank == 0 && torsion.empty())
        throw dimension_error("group must have rank + torsion rank >= 1");
    return GroupSpec{rank, std::move(torsion)};
}

static void check_shape(const GroupSpec& g, const GroupElement& e) {
    if (static_cast<int>(e.free.size()) != g.rank ||
        e.tor.size() != g.torsion.size())
        throw dimension_error("element does not match group spec");
}

GroupElement make_element(const GroupSpec& g, Vec free, Vec tor) {
    if (tor.empty()) tor.assign(g.torsion.size(), 0);
    GroupElement e{std::move(free), std::move(tor)};
    check_shape(g, e);
    for (size_t i = 0; i < e.tor.size(); ++i)
        e.tor[i] = mod_floor(e.tor[i], g.torsion[i]);
    return e;
}

GroupElement zero_element(const GroupSpec& g) {
    return GroupElement{Vec(g.rank, 0), Vec(g.torsion.size(), 0)};
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
    check_shape(g, a);
    check_shape(g, b);
    GroupElement r = a;
    for (int i = 0; i < g.rank; ++i) r.free[i] += b.free[i];
    for (size_t i = 0; i < r.tor.size(); ++i)
        r.tor[i] = mod_floor(r.tor[i] + b.tor[i], g.torsion[i]);
    return r;
}

GroupElement neg(const GroupSpec& g, const GroupElement& a) {
    check_shape(g, a);
    GroupElement r = a;
    for (int i = 0; i < g.rank; ++i) r.free[i] = -r.free[i];
    for (size_t i = 0; i < r.tor.size(); ++i)
        r.tor[i] = mod_floor(-r.tor[i], g.torsion[i]);
    return r;
}

GroupElement scale(const GroupSpec& g, i64 r, const GroupElement& a) {
    check_shape(g, a);
    GroupElement out = a;
    for (int i = 0; i < g.rank; ++i) out.free[i] *= r;
    for (size_t i = 0; i < out.tor.size(); ++i)
        out.tor[i] = mod_floor(out.tor[i] * r, g.torsion[i]);
    return out;
}

i64 Lattice::index() const {
    i64 p = 1;
    for (int i = 0; i < dim(); ++i) p *= diag(i);
    return p;
}

// Column-operation HNF.  Works on a d x m matrix of columns, returns the
// lower-triangular square basis.
Lattice lattice_from_columns(int d, std::vector<Vec> cols) {
    for (const Vec& c : cols)
        if (static_cast<int>(c.size()) != d)
            throw dimension_error("generator has wrong dimension");
    int m = static_cast<int>(cols.size());
    for (int row = 0; row < d; ++row) {
        // gcd-eliminate row entries among columns >= row
        for (;;) {
            int piv = -1;
            for (int j = row; j < m; ++j)
                if (cols[j][row] != 0 &&
                    (piv < 0 || std::abs(cols[j][row]) < std::abs(cols[piv][row])))
                    piv = j;
            if (piv < 0) throw dimension_error("generators do not have full rank");
            std::swap(cols[row], cols[piv]);
            bool clean = true;
            for (int j = row + 1; j < m; ++j) {
                if (cols[j][row] == 0) continue;
                i64 t = cols[j][row] / cols[row][row];
                for (int i = 0; i < d; ++i) cols[j][i] -= t * cols[row][i];
                if (cols[j][row] != 0) clean = false;
            }
            if (clean) break;
        }
        if (cols[row][row] < 0)
            for (int i = 0; i < d; ++i) cols[row][i] = -cols[row][i];
    }
    cols.resize(d);
    // normalize off-diagonal entries: row i entries of columns j < i into
    // [0, diag(i)) using column i (which is zero above row i)
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < i; ++j) {
            i64 t = div_floor(cols[j][i], cols[i][i]);
            if (t != 0)
                for (int k = i; k < d; ++k) cols[j][k] -= t * cols[i][k];
        }
    }
    return Lattice{std::move(cols)};
}

Lattice diagonal_lattice(Vec diag) {
    int d = static_cast<int>(diag.size());
    std::vector<Vec> cols(d, Vec(d, 0));
    for (int i = 0; i < d; ++i) {
        if (diag[i] < 1) throw dimension_error("diagonal entries must be positive");
        cols[i][i] = diag[i];
    }
    return Lattice{std::move(cols)};
}

Lattice scaled_lattice(int d, i64 n) { return diagonal_lattice(Vec(d, n)); }

Vec lattice_reduce(const Lattice& lat, Vec v) {
    int d = lat.dim();
    if (static_cast<int>(v.size()) != d)
        throw dimension_error("vector does not match lattice dimension");
    for (int i = 0; i < d; ++i) {
        i64 t = div_floor(v[i], lat.diag(i));
        if (t != 0)
            for (int k = i; k < d; ++k) v[k] -= t * lat.at(k, i);
    }
    return v;
}

bool lattice_contains(const Lattice& lat, const Vec& v) {
    Vec r = lattice_reduce(lat, v);
    return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw dimension_error("lattice dimension mismatch");
    std::vector<Vec> gen = a.cols;
    gen.insert(gen.end(), b.cols.begin(), b.cols.end());
    return lattice_from_columns(a.dim(), std::move(gen));
}

// Integer kernel of [B_a | -B_b] gives the intersection: a vector lies in both
// lattices iff it is B_a u = B_b w for integer u, w.
Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    int d = a.dim();
    if (b.dim() != d) throw dimension_error("lattice dimension mismatch");
    int m = 2 * d;
    std::vector<Vec> mat(m, Vec(d, 0)); // columns
    std::vector<Vec> u(m, Vec(m, 0));   // transformation, columns
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            mat[j][i] = a.at(i, j);
            mat[d + j][i] = -b.at(i, j);
        }
    }
    for (int j = 0; j < m; ++j) u[j][j] = 1;
    for (int row = 0; row < d; ++row) {
        for (;;) {
            int piv = -1;
            for (int j = row; j < m; ++j)
                if (mat[j][row] != 0 &&
                    (piv < 0 || std::abs(mat[j][row]) < std::abs(mat[piv][row])))
                    piv = j;
            if (piv < 0) throw dimension_error("degenerate lattice intersection");
            std::swap(mat[row], mat[piv]);
            std::swap(u[row], u[piv]);
            bool clean = true;
            for (int j = row + 1; j < m; ++j) {
                if (mat[j][row] == 0) continue;
                i64 t = mat[j][row] / mat[row][row];
                for (int i = 0; i < d; ++i) mat[j][i] -= t * mat[row][i];
                for (int i = 0; i < m; ++i) u[j][i] -= t * u[row][i];
                if (mat[j][row] != 0) clean = false;
            }
            if (clean) break;
        }
    }
    // columns d..2d-1 of mat are now zero; the matching u columns span the
    // kernel.  Map kernel coefficients through B_a.
    std::vector<Vec> gen;
    for (int j = d; j < m; ++j) {
        Vec v(d, 0);
        for (int col = 0; col < d; ++col)
            for (int i = 0; i < d; ++i) v[i] += a.at(i, col) * u[j][col];
        gen.push_back(std::move(v));
    }
    return lattice_from_columns(d, std::move(gen));
}

namespace {

void emit_for_index(int d, i64 n, std::vector<Lattice>& out) {
    // choose diagonals with product n, then free sub-diagonal entries
    std::vector<i64> diag(d);
    std::function<void(int, i64)> rec_diag = [&](int pos, i64 rem) {
        if (pos == d) {
            if (rem != 1) return;
            std::vector<Vec> cols(d, Vec(d, 0));
            for (int i = 0; i < d; ++i) cols[i][i] = diag[i];
            std::function<void(int, int)> rec_off = [&](int j, int i) {
                if (j == d) {
                    out.push_back(Lattice{cols});
                    return;
                }
                if (i == d) {
                    rec_off(j + 1, j + 2);
                    return;
                }
                for (i64 v = 0; v < diag[i]; ++v) {
                    cols[j][i] = v;
                    rec_off(j, i + 1);
                }
                cols[j][i] = 0;
            };
            rec_off(0, 1);
            return;
        }
        for (i64 v = 1; v <= rem; ++v)
            if (rem % v == 0) {
                diag[pos] = v;
                rec_diag(pos + 1, rem / v);
            }
    };
    rec_diag(0, n);
}

Vec row_major(const Lattice& l) {
    Vec flat;
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j) flat.push_back(l.at(i, j));
    return flat;
}

}  // namespace

void for_each_lattice(int d, i64 max_index, const std::function<void(const Lattice&)>& fn) {
    if (d < 1 || max_index < 1)
        throw dimension_error("for_each_lattice requires d >= 1, max_index >= 1");
    for (i64 n = 1; n <= max_index; ++n) {
        std::vector<Lattice> batch;
        emit_for_index(d, n, batch);
        std::sort(batch.begin(), batch.end(), [](const Lattice& a, const Lattice& b) {
            return row_major(a) < row_major(b);
        });
        for (const Lattice& l : batch) fn(l);
    }
}

std::vector<Lattice> enumerate_lattices(int d, i64 max_index) {
    std::vector<Lattice> out;
    for_each_lattice(d, max_index, [&](const Lattice& l) { out.push_back(l); });
    return out;
}

Vec primitive_of(Vec v) {
    i64 g = 0;
    for (i64 x : v) g = gcd64(g, x);
    if (g == 0) throw dimension_error("zero vector has no direction");
    for (i64& x : v) x /= g;
    for (i64 x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (i64& y : v) y = -y;
            break;
        }
    }
    return v;
}

QuotientGroup make_quotient(const GroupSpec& g, const Lattice& lat) {
    if (lat.dim() != g.rank)
        throw dimension_error("lattice rank does not match group rank");
    QuotientGroup q;
    q.parent = g;
    q.lattice = lat;
    for (int i = 0; i < g.rank; ++i) q.radix.push_back(lat.diag(i));
    for (i64 n : g.torsion) q.radix.push_back(n);
    q.size_ = 1;
    for (i64 r : q.radix) q.size_ *= r;
    return q;
}

i64 QuotientGroup::project(const GroupElement& e) const {
    // mixed radix, free coordinates are the low digits
    Vec f = lattice_reduce(lattice, e.free);
    i64 idx = 0;
    i64 base = 1;
    for (int i = 0; i < parent.rank; ++i) {
        idx += f[i] * base;
        base *= radix[i];
    }
    for (int i = 0; i < parent.torsion_rank(); ++i) {
        idx += mod_floor(e.tor[i], parent.torsion[i]) * base;
        base *= parent.torsion[i];
    }
    return idx;
}

GroupElement QuotientGroup::section(i64 index) const {
    GroupElement e = GroupElement{Vec(parent.rank, 0), Vec(parent.torsion.size(), 0)};
    for (int i = 0; i < parent.rank; ++i) {
        e.free[i] = index % radix[i];
        index /= radix[i];
    }
    for (int i = 0; i < parent.torsion_rank(); ++i) {
        e.tor[i] = index % parent.torsion[i];
        index /= parent.torsion[i];
    }
    return e;
}

i64 QuotientGroup::add_indices(i64 a, i64 b) const {
    return project(add(parent, section(a), section(b)));
}

}  // namespace tessella
