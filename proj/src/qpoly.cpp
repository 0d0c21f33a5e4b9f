#include "lweyl/qpoly.hpp"

#include <algorithm>

namespace lweyl {

QPoly QPoly::monomial(const Rat& k, size_t deg) {
    QPoly p;
    p.set(deg, k);
    return p;
}

void QPoly::set(size_t i, const Rat& v) {
    if (c.size() <= i) c.resize(i + 1, Rat(0));
    c[i] = v;
    trim();
}

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

long QPoly::val() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return (long)i;
    return -1;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = get(i) + o.get(i);
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = get(i) - o.get(i);
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const Rat& k) const {
    QPoly r;
    if (k == 0) return r;
    r.c = c;
    for (auto& x : r.c) x *= k;
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw MathError("QPoly division by zero");
    q = QPoly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t d = (size_t)(r.degree() - b.degree());
        Rat f = r.c.back() / b.c.back();
        QPoly m = QPoly::monomial(f, d);
        q = q + m;
        r = r - m * b;
    }
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a * (Rat(1) / a.c.back());
    return a;
}

QRatFunc::QRatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw MathError("QRatFunc: zero denominator");
    reduce();
}

void QRatFunc::reduce() {
    if (num.is_zero()) {
        den = QPoly(Rat(1));
        return;
    }
    QPoly g = QPoly::gcd(num, den);
    if (g.degree() > 0) {
        QPoly q, r;
        QPoly::divmod(num, g, q, r);
        num = q;
        QPoly::divmod(den, g, q, r);
        den = q;
    }
    Rat lead = den.c.back();
    num = num * (Rat(1) / lead);
    den = den * (Rat(1) / lead);
}

long QRatFunc::val() const {
    if (is_zero()) throw MathError("valuation of 0");
    return num.val() - den.val();
}

QRatFunc QRatFunc::operator+(const QRatFunc& o) const {
    return QRatFunc(num * o.den + o.num * den, den * o.den);
}
QRatFunc QRatFunc::operator-(const QRatFunc& o) const {
    return QRatFunc(num * o.den - o.num * den, den * o.den);
}
QRatFunc QRatFunc::operator*(const QRatFunc& o) const {
    return QRatFunc(num * o.num, den * o.den);
}
QRatFunc QRatFunc::operator/(const QRatFunc& o) const {
    if (o.is_zero()) throw MathError("QRatFunc division by zero");
    return QRatFunc(num * o.den, den * o.num);
}

bool in_dvr_span(std::vector<std::vector<QRatFunc>> rows, std::vector<QRatFunc> t) {
    auto nonzero = [](const std::vector<QRatFunc>& r) {
        for (auto& x : r)
            if (!x.is_zero()) return true;
        return false;
    };
    while (true) {
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [&](const std::vector<QRatFunc>& r) { return !nonzero(r); }),
                   rows.end());
        bool tz = !nonzero(t);
        if (tz) return true;
        if (rows.empty()) return false;
        // minimal-valuation pivot
        size_t pi = 0, pj = 0;
        long best = 0;
        bool found = false;
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j) {
                if (rows[i][j].is_zero()) continue;
                long v = rows[i][j].val();
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        std::vector<QRatFunc> pivot = rows[pi];
        rows.erase(rows.begin() + pi);
        for (auto& r : rows) {
            if (r[pj].is_zero()) continue;
            QRatFunc f = r[pj] / pivot[pj];
            for (size_t j = 0; j < r.size(); ++j) r[j] = r[j] - f * pivot[j];
        }
        if (!t[pj].is_zero()) {
            QRatFunc cchar = t[pj] / pivot[pj];
            if (cchar.val() < 0) return false;
            for (size_t j = 0; j < t.size(); ++j) t[j] = t[j] - cchar * pivot[j];
        }
    }
}

size_t qrf_rank(std::vector<std::vector<QRatFunc>> m) {
    size_t rank = 0;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            QRatFunc f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

}  // namespace lweyl
