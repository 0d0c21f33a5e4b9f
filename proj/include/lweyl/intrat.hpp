#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lweyl {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx lacks long long constructors; all integer entry points funnel through these
inline Int to_int(long long v) { return Int((long)v); }
inline Rat to_rat(long long v) { return Rat((long)v); }
inline Rat to_rat(long long n, long long d) { return Rat((long)n, (long)d); }

// Error carrying a CLI exit class: usage/config errors exit 2, failed
// mathematical identities exit 1 (reported, not thrown).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};
struct MathError : std::runtime_error {
    explicit MathError(const std::string& m) : std::runtime_error(m) {}
};

using Vec = std::vector<long long>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec vec_scale(long long c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
inline Vec vec_neg(const Vec& a) { return vec_scale(-1, a); }
inline long long vec_dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline bool vec_zero(const Vec& a) {
    for (long long x : a)
        if (x != 0) return false;
    return true;
}
inline long long vec_sum(const Vec& a) {
    long long s = 0;
    for (long long x : a) s += x;
    return s;
}

inline std::string vec_str(const Vec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

// floor division / non-negative remainder
inline long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
inline long long posmod(long long a, long long b) { return a - b * floordiv(a, b); }

}  // namespace lweyl
