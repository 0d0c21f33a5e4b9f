#include "lweyl/polyform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lweyl {

PolyForm PolyForm::constant(int nvars, const Rat& c) {
    PolyForm p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
}

PolyForm PolyForm::variable(int nvars, int i) {
    PolyForm p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = Rat(1);
    return p;
}

bool PolyForm::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0));
}

Rat PolyForm::constant_term() const {
    auto it = terms_.find(Expo(nvars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

long PolyForm::total_degree() const {
    long d = -1;
    for (auto& [e, c] : terms_) {
        long s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool PolyForm::is_homogeneous(long d) const {
    for (auto& [e, c] : terms_) {
        long s = 0;
        for (auto x : e) s += x;
        if (s != d) return false;
    }
    return true;
}

Rat PolyForm::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void PolyForm::set_coeff(const Expo& e, const Rat& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void PolyForm::trim(const Expo& e) {
    auto it = terms_.find(e);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

PolyForm PolyForm::operator-() const {
    PolyForm r(nvars_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
    PolyForm r = *this;
    for (auto& [e, c] : o.terms_) {
        r.terms_[e] += c;
        r.trim(e);
    }
    return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const {
    PolyForm r = *this;
    for (auto& [e, c] : o.terms_) {
        r.terms_[e] -= c;
        r.trim(e);
    }
    return r;
}

PolyForm PolyForm::operator*(const PolyForm& o) const {
    PolyForm r(nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.terms_[e] += c1 * c2;
            r.trim(e);
        }
    return r;
}

PolyForm PolyForm::operator*(const Rat& c) const {
    if (c == 0) return PolyForm(nvars_);
    PolyForm r(nvars_);
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

bool PolyForm::operator<(const PolyForm& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return b != o.terms_.end();
}

PolyForm PolyForm::pow(unsigned k) const {
    PolyForm r = constant(nvars_, Rat(1));
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

PolyForm PolyForm::substitute(const std::vector<PolyForm>& images) const {
    int n = images.empty() ? nvars_ : images[0].nvars();
    PolyForm r(n);
    for (auto& [e, c] : terms_) {
        PolyForm t = constant(n, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

PolyForm PolyForm::specialize_delta_zero() const {
    PolyForm r(nvars_);
    for (auto& [e, c] : terms_)
        if (e[nvars_ - 1] == 0) r.terms_[e] = c;
    return r;
}

namespace {
// lex-leading term (largest exponent vector)
std::pair<Expo, Rat> lead(const PolyForm& p) {
    auto it = std::prev(p.terms().end());
    return {it->first, it->second};
}
bool expo_divides(const Expo& a, const Expo& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
}  // namespace

std::optional<PolyForm> PolyForm::divide_exact(const PolyForm& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    PolyForm p = *this, q(nvars_);
    auto [de, dc] = lead(divisor);
    while (!p.is_zero()) {
        auto [pe, pc] = lead(p);
        if (!expo_divides(de, pe)) return std::nullopt;  // term would land in remainder
        Expo m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = pe[i] - de[i];
        PolyForm t(nvars_);
        t.terms_[m] = pc / dc;
        q = q + t;
        p = p - t * divisor;
    }
    return q;
}

PolyForm PolyForm::reduce_mod_linear(const PolyForm& lin) const {
    // lin = c*x_k + L with x_k its lex-leading variable; substitute x_k = -L/c.
    auto [le, lc] = lead(lin);
    int k = -1;
    for (int i = nvars_ - 1; i >= 0; --i)
        if (le[i] == 1) {
            k = i;
            break;
        }
    PolyForm rest = lin;  // -c*x_k part removed below
    PolyForm xk = variable(nvars_, k);
    rest = rest - xk * lc;
    PolyForm image = rest * (Rat(-1) / lc);
    std::vector<PolyForm> images;
    for (int i = 0; i < nvars_; ++i) images.push_back(i == k ? image : variable(nvars_, i));
    return substitute(images);
}

long PolyForm::valuation_at(const PolyForm& lin) const {
    if (is_zero()) throw MathError("valuation of 0 is infinite");
    long v = 0;
    PolyForm p = *this;
    while (true) {
        auto q = p.divide_exact(lin);
        if (!q) return v;
        p = *q;
        ++v;
    }
}

PolyForm PolyForm::normalized_linear(Rat* unit) const {
    if (!is_linear()) throw MathError("normalized_linear: not a linear form: " + str());
    // clear denominators, divide by content, make leading coefficient positive
    Int den = 1;
    for (auto& [e, c] : terms_) den = lcm(den, Int(c.get_den()));
    Int g = 0;
    for (auto& [e, c] : terms_) { Rat t = c * Rat(den); t.canonicalize(); g = gcd(g, t.get_num()); }
    Rat u = Rat(g) / Rat(den);
    auto [le, lc] = lead(*this);
    if (lc < 0) u = -u;
    PolyForm r = *this * (Rat(1) / u);
    if (unit) *unit = u;
    return r;
}

std::vector<std::string> PolyForm::default_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 0; i + 1 < nvars; ++i) names.push_back("y" + std::to_string(i + 1));
    names.push_back("d");
    return names;
}

std::string PolyForm::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // print monomials largest-lex first for a stable, human-friendly order
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool mono = false;
        std::ostringstream ms;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (mono) ms << "*";
            ms << names[i];
            if (e[i] > 1) ms << "^" << e[i];
            mono = true;
        }
        if (!mono) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << ms.str();
        }
    }
    return os.str();
}

std::string PolyForm::str() const { return str(default_names(nvars_)); }

namespace {
struct Parser {
    const std::string& s;
    size_t i = 0;
    int nvars;
    explicit Parser(const std::string& t, int n) : s(t), nvars(n) {}
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Rat number() {
        ws();
        size_t j = i;
        while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
        if (j == i) throw ConfigError("polynomial parse error at '" + s.substr(i) + "'");
        Rat r(s.substr(i, j - i));
        r.canonicalize();
        i = j;
        return r;
    }
    int var() {  // returns variable index or -1
        ws();
        if (i < s.size() && s[i] == 'd') {
            ++i;
            return nvars - 1;
        }
        if (i < s.size() && s[i] == 'y') {
            size_t j = ++i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            int k = std::stoi(s.substr(i, j - i));
            i = j;
            if (k < 1 || k >= nvars) throw ConfigError("unknown variable y" + std::to_string(k));
            return k - 1;
        }
        return -1;
    }
    PolyForm monomial() {
        PolyForm m = PolyForm::constant(nvars, Rat(1));
        bool any = false;
        while (true) {
            ws();
            if (i < s.size() && (std::isdigit((unsigned char)s[i]))) {
                m = m * number();
                any = true;
            } else {
                int v = var();
                if (v < 0) break;
                unsigned k = 1;
                if (eat('^')) k = (unsigned)number().get_num().get_ui();
                m = m * PolyForm::variable(nvars, v).pow(k);
                any = true;
            }
            if (!eat('*')) break;
        }
        if (!any) throw ConfigError("polynomial parse error near '" + s.substr(i) + "'");
        return m;
    }
    PolyForm poly() {
        PolyForm p(nvars);
        ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            PolyForm m = monomial();
            p = neg ? p - m : p + m;
            ws();
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                break;
        }
        ws();
        if (i != s.size()) throw ConfigError("trailing input in polynomial: '" + s.substr(i) + "'");
        return p;
    }
};
}  // namespace

PolyForm PolyForm::parse(int nvars, const std::string& text) {
    if (text == "0") return PolyForm(nvars);
    Parser p(text, nvars);
    return p.poly();
}

// ---------------------------------------------------------------------------

LocalizedElem::LocalizedElem(PolyForm num, std::vector<std::pair<PolyForm, int>> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (auto& [f, k] : den_) {
        Rat u;
        PolyForm nf = f.normalized_linear(&u);
        f = nf;
        for (int j = 0; j < k; ++j) num_ = num_ * (Rat(1) / u);
    }
    reduce();
}

void LocalizedElem::reduce() {
    std::map<PolyForm, int> agg;
    for (auto& [f, k] : den_) {
        if (k != 0) agg[f] += k;
    }
    den_.clear();
    if (num_.is_zero()) return;
    for (auto& [f, k] : agg) {
        int kk = k;
        while (kk > 0) {
            auto q = num_.divide_exact(f);
            if (!q) break;
            num_ = *q;
            --kk;
        }
        if (kk > 0) den_.push_back({f, kk});
    }
}

LocalizedElem LocalizedElem::operator-() const {
    LocalizedElem r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalizedElem LocalizedElem::operator+(const LocalizedElem& o) const {
    // common denominator: per-factor max powers
    std::map<PolyForm, std::pair<int, int>> pw;
    for (auto& [f, k] : den_) pw[f].first = k;
    for (auto& [f, k] : o.den_) pw[f].second = k;
    PolyForm a = num_, b = o.num_;
    std::vector<std::pair<PolyForm, int>> den;
    for (auto& [f, kk] : pw) {
        int m = std::max(kk.first, kk.second);
        den.push_back({f, m});
        for (int j = 0; j < m - kk.first; ++j) a = a * f;
        for (int j = 0; j < m - kk.second; ++j) b = b * f;
    }
    LocalizedElem r;
    r.num_ = a + b;
    r.den_ = den;
    r.reduce();
    return r;
}

LocalizedElem LocalizedElem::operator-(const LocalizedElem& o) const { return *this + (-o); }

LocalizedElem LocalizedElem::operator*(const LocalizedElem& o) const {
    LocalizedElem r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (auto& fk : o.den_) r.den_.push_back(fk);
    r.reduce();
    return r;
}

LocalizedElem LocalizedElem::operator*(const Rat& c) const {
    LocalizedElem r = *this;
    r.num_ = r.num_ * c;
    if (c == 0) r.den_.clear();
    return r;
}

bool LocalizedElem::operator==(const LocalizedElem& o) const {
    // cross-multiply
    PolyForm a = num_, b = o.num_;
    for (auto& [f, k] : o.den_)
        for (int j = 0; j < k; ++j) a = a * f;
    for (auto& [f, k] : den_)
        for (int j = 0; j < k; ++j) b = b * f;
    return a == b;
}

LocalizedElem LocalizedElem::div_factored(
    const Rat& c, const std::vector<std::pair<PolyForm, int>>& factors) const {
    if (c == 0) throw MathError("division by zero");
    LocalizedElem r = *this;
    r.num_ = r.num_ * (Rat(1) / c);
    for (auto& fk : factors) r.den_.push_back(fk);
    r.reduce();
    return r;
}

namespace {
// Recognize p == c * L^k for a normalized linear form L; nullopt otherwise.
std::optional<std::pair<Rat, std::pair<PolyForm, int>>> as_linear_power(const PolyForm& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.is_constant()) return {{p.constant_term(), {PolyForm(p.nvars()), 0}}};
    long k = p.total_degree();
    if (!p.is_homogeneous(k)) return std::nullopt;
    // lex-leading term of c*L^k is c*a_m^k x_m^k where x_m is L's leading variable
    auto lead_it = std::prev(p.terms().end());
    const Expo& le = lead_it->first;
    int m = -1;
    for (int i = p.nvars() - 1; i >= 0; --i)
        if (le[i] != 0) {
            if (le[i] != (uint32_t)k) return std::nullopt;
            m = i;
            break;
        }
    for (int i = 0; i < m; ++i)
        if (le[i] != 0) return std::nullopt;
    // normalize L to have coefficient 1 at x_m, then c = leading coefficient
    Rat c = lead_it->second;
    PolyForm L = PolyForm::variable(p.nvars(), m);
    for (int i = 0; i < p.nvars(); ++i) {
        if (i == m) continue;
        Expo e(p.nvars(), 0);
        e[m] = (uint32_t)(k - 1);
        e[i] = 1;
        Rat ci = p.coeff(e) / (Rat(k) * c);
        if (ci != 0) L = L + PolyForm::variable(p.nvars(), i) * ci;
    }
    if (L.pow((unsigned)k) * c != p) return std::nullopt;
    return {{c, {L, (int)k}}};
}
}  // namespace

LocalizedElem LocalizedElem::div(const LocalizedElem& o) const {
    if (o.is_zero()) throw MathError("division by zero");
    auto fac = as_linear_power(o.num_);
    if (!fac) throw MathError("div: divisor numerator is not a linear-form power: " + o.num_.str());
    auto [c, lk] = *fac;
    std::vector<std::pair<PolyForm, int>> factors;
    if (lk.second > 0) factors.push_back(lk);
    LocalizedElem r = div_factored(c, factors);
    for (auto& [f, k] : o.den_)
        for (int j = 0; j < k; ++j) r.num_ = r.num_ * f;
    r.reduce();
    return r;
}

long LocalizedElem::valuation_at(const PolyForm& lin) const {
    if (is_zero()) throw MathError("valuation of 0 is infinite");
    PolyForm nf = lin.normalized_linear();
    long v = num_.valuation_at(nf);
    for (auto& [f, k] : den_)
        if (f == nf) v -= k;
    return v;
}

bool LocalizedElem::in_localization(const PolyForm& lin) const {
    if (is_zero()) return true;
    PolyForm nf = lin.normalized_linear();
    for (auto& [f, k] : den_)
        if (f == nf) return false;
    return true;
}

LocalizedElem LocalizedElem::specialize_delta_zero() const {
    LocalizedElem r;
    r.num_ = num_.specialize_delta_zero();
    for (auto& [f, k] : den_) {
        PolyForm f0 = f.specialize_delta_zero();
        if (f0.is_zero())
            throw MathError("specialize_delta_zero: denominator vanishes at d=0: " + f.str());
        r.den_.push_back({f0, k});
    }
    return LocalizedElem(r.num_, r.den_);
}

std::string LocalizedElem::str(const std::vector<std::string>& names) const {
    std::string s = num_.str(names);
    if (den_.empty()) return s;
    std::string d;
    for (auto& [f, k] : den_) {
        if (!d.empty()) d += "*";
        d += "(" + f.str(names) + ")";
        if (k > 1) d += "^" + std::to_string(k);
    }
    return "(" + s + ")/(" + d + ")";
}

std::string LocalizedElem::str() const { return str(PolyForm::default_names(nvars())); }

// ---------------------------------------------------------------------------

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                                             std::string* status) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        Rat inv = Rat(1) / A[r][c];
        for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back((int)c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) {
            if (status) *status = "inconsistent";
            return std::nullopt;
        }
    if (pivot_col.size() < cols) {
        if (status) *status = "underdetermined";
        return std::nullopt;
    }
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

PolyForm poly_det(std::vector<std::vector<PolyForm>> m) {
    size_t n = m.size();
    if (n == 0) throw MathError("det of empty matrix");
    int nv = m[0][0].nvars();
    PolyForm prev = PolyForm::constant(nv, Rat(1));
    Rat sign(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return PolyForm(nv);  // singular
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                PolyForm t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = t.divide_exact(prev);
                if (!q) throw MathError("Bareiss: non-exact division");
                m[i][j] = *q;
            }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * sign;
}

}  // namespace lweyl
