#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tessella {

using i64 = std::int64_t;
using Vec = std::vector<i64>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different groups / incompatible shapes.
struct dimension_error : error {
    using error::error;
};

/// A configured search cap (quotient size, torus size, ...) was exceeded.
struct budget_error : error {
    using error::error;
};

/// Malformed manifest or payload.
struct format_error : error {
    int line = 0;
    int col = 0;
    format_error(const std::string& msg, int line_, int col_)
        : error(msg), line(line_), col(col_) {}
    explicit format_error(const std::string& msg) : error(msg) {}
};

inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 div_floor(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm64(i64 a, i64 b) { return std::lcm(a, b); }

}  // namespace tessella
