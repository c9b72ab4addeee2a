#pragma once

#include <vector>

#include "tessella/common.hpp"

namespace tessella {

struct Fraction {
    i64 num = 0;
    i64 den = 1;

    Fraction() = default;
    Fraction(i64 n) : num(n) {}
    Fraction(i64 n, i64 d);

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    bool operator==(const Fraction&) const = default;
    bool operator<(const Fraction& o) const;
    bool negative() const { return num < 0; }
    bool zero() const { return num == 0; }
};

/// Feasibility of A y = b, y >= 0, by exact phase-one simplex (Bland's rule).
bool linear_feasible(const std::vector<std::vector<Fraction>>& a,
                     const std::vector<Fraction>& b);

}  // namespace tessella
