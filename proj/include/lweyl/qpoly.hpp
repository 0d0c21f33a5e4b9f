#pragma once

// Dense univariate polynomials and rational functions over Q, with the a-adic
// valuation; used for exact lattice comparisons over the DVR Q[a]_(a).

#include "lweyl/intrat.hpp"

#include <optional>
#include <vector>

namespace lweyl {

struct QPoly {
    std::vector<Rat> c;  // c[i] * a^i, no trailing zeros

    QPoly() = default;
    explicit QPoly(const Rat& c0) { set(0, c0); }
    static QPoly monomial(const Rat& k, size_t deg);

    bool is_zero() const { return c.empty(); }
    void set(size_t i, const Rat& v);
    Rat get(size_t i) const { return i < c.size() ? c[i] : Rat(0); }
    void trim();
    long degree() const { return (long)c.size() - 1; }
    long val() const;  // order of vanishing at a=0; -1 marks zero polynomial

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& k) const;
    bool operator==(const QPoly& o) const { return c == o.c; }

    // division with remainder
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    static QPoly gcd(QPoly a, QPoly b);  // monic gcd
};

// rational function num/den, reduced, den monic and nonzero
struct QRatFunc {
    QPoly num, den;

    QRatFunc() : den(Rat(1)) {}
    explicit QRatFunc(const Rat& c) : num(c), den(Rat(1)) {}
    explicit QRatFunc(QPoly n) : num(std::move(n)), den(Rat(1)) {}
    QRatFunc(QPoly n, QPoly d);

    bool is_zero() const { return num.is_zero(); }
    long val() const;  // a-adic valuation; only valid for nonzero
    bool in_ring() const { return is_zero() || val() >= 0; }  // member of Q[a]_(a)

    QRatFunc operator+(const QRatFunc& o) const;
    QRatFunc operator-(const QRatFunc& o) const;
    QRatFunc operator*(const QRatFunc& o) const;
    QRatFunc operator/(const QRatFunc& o) const;
    bool operator==(const QRatFunc& o) const { return num == o.num && den == o.den; }

  private:
    void reduce();
};

// Whether t lies in the Q[a]_(a)-span of the rows (exact; rows may be dependent).
bool in_dvr_span(std::vector<std::vector<QRatFunc>> rows, std::vector<QRatFunc> t);

// Rank over the fraction field Q(a).
size_t qrf_rank(std::vector<std::vector<QRatFunc>> m);

}  // namespace lweyl
