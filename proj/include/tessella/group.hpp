#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tessella/common.hpp"

namespace tessella {

/// The ambient group Z^d x Z/n_1 x ... x Z/n_k.
struct GroupSpec {
    int rank = 0;             // d
    std::vector<i64> torsion; // moduli n_i, each >= 2

    int torsion_rank() const { return static_cast<int>(torsion.size()); }
    i64 torsion_size() const;
    i64 torsion_exponent() const; // lcm of moduli, 1 when torsion-free
    bool operator==(const GroupSpec&) const = default;
};

GroupSpec make_group(int rank, std::vector<i64> torsion = {});

struct GroupElement {
    Vec free;
    Vec tor;
    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

GroupElement make_element(const GroupSpec& g, Vec free, Vec tor = {});
GroupElement zero_element(const GroupSpec& g);
GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& g, const GroupElement& a);
GroupElement scale(const GroupSpec& g, i64 r, const GroupElement& a);

/// Finite-index sublattice of Z^d.  Basis columns are kept in lower-triangular
/// Hermite normal form: cols[j][i] == 0 for i < j, cols[j][j] >= 1 and
/// 0 <= cols[j][i] < cols[i][i] for i > j.  Equality is structural.
struct Lattice {
    std::vector<Vec> cols;

    int dim() const { return static_cast<int>(cols.size()); }
    i64 at(int row, int col) const { return cols[col][row]; }
    i64 diag(int i) const { return cols[i][i]; }
    i64 index() const; // |det|
    bool operator==(const Lattice&) const = default;
};

/// HNF of the lattice generated by the given columns; throws dimension_error
/// if they do not span a finite-index sublattice.
Lattice lattice_from_columns(int d, std::vector<Vec> generators);
Lattice diagonal_lattice(Vec diag);
Lattice scaled_lattice(int d, i64 n); // nZ^d

bool lattice_contains(const Lattice& lat, const Vec& v);
/// Canonical representative of v mod the lattice; coordinate i lands in
/// [0, diag(i)).
Vec lattice_reduce(const Lattice& lat, Vec v);

Lattice lattice_intersect(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);

/// Every sublattice of Z^d with index in [1, max_index], each exactly once,
/// ordered by index then lexicographically on the row-major basis matrix.
void for_each_lattice(int d, i64 max_index, const std::function<void(const Lattice&)>& fn);
std::vector<Lattice> enumerate_lattices(int d, i64 max_index);

/// Rank-1 subgroup <q*v> of Z^d with v primitive.
struct SubgroupLine {
    Vec direction; // primitive
    i64 q = 1;
    bool operator==(const SubgroupLine&) const = default;
};

Vec primitive_of(Vec v); // divide by gcd, sign-normalize (first nonzero > 0)

/// Finite quotient (Z^d x G_0) / (Lambda x {0}), elements indexed densely
/// 0..size()-1 in mixed radix (free box coordinates first, then torsion).
struct QuotientGroup {
    GroupSpec parent;
    Lattice lattice;
    std::vector<i64> radix;
    i64 size_ = 0;

    i64 size() const { return size_; }
    i64 project(const GroupElement& e) const;
    GroupElement section(i64 index) const;
    i64 add_indices(i64 a, i64 b) const;
};

QuotientGroup make_quotient(const GroupSpec& g, const Lattice& lat);

}  // namespace tessella
