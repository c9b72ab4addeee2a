#include "tessella/linfeas.hpp"

namespace tessella {

namespace {
i64 igcd(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw error("fraction overflow");
    return static_cast<i64>(v);
}
}  // namespace

Fraction::Fraction(i64 n, i64 d) {
    if (d == 0) throw error("fraction with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i64 g = igcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Fraction Fraction::operator+(const Fraction& o) const {
    __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    __int128 d = static_cast<__int128>(den) * o.den;
    __int128 g = 1;
    {
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        g = a == 0 ? 1 : a;
    }
    return Fraction(checked(n / g), checked(d / g));
}

Fraction Fraction::operator-(const Fraction& o) const {
    return *this + Fraction(-o.num, o.den);
}

Fraction Fraction::operator*(const Fraction& o) const {
    Fraction a(num, o.den), b(o.num, den);
    return Fraction(checked(static_cast<__int128>(a.num) * b.num),
                    checked(static_cast<__int128>(a.den) * b.den));
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.num == 0) throw error("division by zero fraction");
    return *this * Fraction(o.den, o.num);
}

bool Fraction::operator<(const Fraction& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

bool linear_feasible(const std::vector<std::vector<Fraction>>& a,
                     const std::vector<Fraction>& b) {
    size_t m = a.size();
    if (m == 0) return true;
    size_t n = a.front().size();
    // tableau with one artificial per row; minimize their sum
    std::vector<std::vector<Fraction>> t(m, std::vector<Fraction>(n + m + 1));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        bool flip = b[i].negative();
        for (size_t j = 0; j < n; ++j)
            t[i][j] = flip ? Fraction(0) - a[i][j] : a[i][j];
        t[i][n + i] = Fraction(1);
        t[i][n + m] = flip ? Fraction(0) - b[i] : b[i];
        basis[i] = n + i;
    }
    auto objective = [&]() {
        Fraction s(0);
        for (size_t i = 0; i < m; ++i)
            if (basis[i] >= n) s = s + t[i][n + m];
        return s;
    };
    for (;;) {
        // reduced cost of column j under the phase-one objective
        size_t enter = n + m;
        for (size_t j = 0; j < n + m && enter == n + m; ++j) {
            Fraction c(0);
            for (size_t i = 0; i < m; ++i)
                if (basis[i] >= n) c = c - t[i][j];
            if (j >= n) c = c + Fraction(1);
            if (c.negative()) enter = j; // Bland: first improving column
        }
        if (enter == n + m) break;
        size_t leave = m;
        for (size_t i = 0; i < m; ++i) {
            if (!(Fraction(0) < t[i][enter])) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            Fraction cur = t[i][n + m] / t[i][enter];
            Fraction best = t[leave][n + m] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) return false; // unbounded phase one: cannot happen
        Fraction piv = t[leave][enter];
        for (auto& x : t[leave]) x = x / piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].zero()) continue;
            Fraction f = t[i][enter];
            for (size_t j = 0; j <= n + m; ++j)
                t[i][j] = t[i][j] - f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return objective().zero();
}

}  // namespace tessella
