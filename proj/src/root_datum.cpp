#include "lweyl/root_datum.hpp"

#include "lweyl/polyform.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace lweyl {

namespace {

std::vector<std::vector<long long>> cartan_of_simple(char family, int n) {
    auto A = std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) A[i][i + 1] = A[i + 1][i] = -1;
    };
    switch (family) {
        case 'A':
            chain(n);
            break;
        case 'B':  // alpha_n short: <alpha_{n-1}-check, alpha_n> = -2
            if (n < 2) throw ConfigError("B_n needs n >= 2");
            chain(n);
            A[n - 1][n - 2] = -2;
            A[n - 2][n - 1] = -1;
            break;
        case 'C':  // alpha_n long
            if (n < 2) throw ConfigError("C_n needs n >= 2");
            chain(n);
            A[n - 1][n - 2] = -1;
            A[n - 2][n - 1] = -2;
            break;
        case 'D':
            if (n < 3) throw ConfigError("D_n needs n >= 3");
            chain(n - 1);
            A[n - 1][n - 3] = A[n - 3][n - 1] = -1;
            break;
        case 'E': {
            if (n < 6 || n > 8) throw ConfigError("E_n needs n in {6,7,8}");
            // Bourbaki: node 2 attached to node 4 of the A-chain 1-3-4-5-6(-7-8)
            std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            if (n >= 7) edges.push_back({5, 6});
            if (n == 8) edges.push_back({6, 7});
            for (auto [a, b] : edges) A[a][b] = A[b][a] = -1;
            break;
        }
        case 'F':
            if (n != 4) throw ConfigError("F needs rank 4");
            A[0][1] = A[1][0] = -1;
            A[2][3] = A[3][2] = -1;
            A[1][2] = -2;  // <a2-check, a3> = -2 (a3 short)
            A[2][1] = -1;
            break;
        case 'G':
            if (n != 2) throw ConfigError("G needs rank 2");
            A[0][1] = -1;
            A[1][0] = -3;
            break;
        default:
            throw ConfigError(std::string("unknown Cartan family '") + family + "'");
    }
    return A;
}

// integer determinant by rational elimination
long long int_det(std::vector<std::vector<long long>> m) {
    int n = (int)m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = to_rat(m[i][j]);
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return (long long)det.get_num().get_si();
}

}  // namespace

RootDatum RootDatum::build(const std::string& type_label, long long l) {
    RootDatum rd;
    rd.type_ = type_label;
    rd.l_ = l;

    // parse products like "A2xB2"
    std::vector<std::pair<char, int>> parts;
    size_t i = 0;
    while (i < type_label.size()) {
        char fam = (char)std::toupper((unsigned char)type_label[i++]);
        size_t j = i;
        while (j < type_label.size() && std::isdigit((unsigned char)type_label[j])) ++j;
        if (j == i) throw ConfigError("bad Cartan type '" + type_label + "'");
        parts.push_back({fam, std::stoi(type_label.substr(i, j - i))});
        i = j;
        if (i < type_label.size()) {
            if (type_label[i] != 'x' && type_label[i] != 'X')
                throw ConfigError("bad Cartan type '" + type_label + "'");
            ++i;
        }
    }
    if (parts.empty()) throw ConfigError("empty Cartan type");

    for (auto [fam, n] : parts) {
        if (n < 1) throw ConfigError("bad rank in Cartan type");
        auto A = cartan_of_simple(fam, n);
        int off = rd.rank_;
        rd.rank_ += n;
        rd.comps_.push_back({off, off + n});
        for (auto& row : rd.cartan_) row.resize(rd.rank_, 0);
        for (int r = 0; r < n; ++r) {
            std::vector<long long> row(rd.rank_, 0);
            for (int c = 0; c < n; ++c) row[off + c] = A[r][c];
            rd.cartan_.push_back(row);
        }
        if (fam == 'G') rd.has_g2_ = true;
        rd.e_ *= int_det(A);
    }
    if (rd.e_ < 0) rd.e_ = -rd.e_;

    // symmetrizers: propagate ratios d_i a_ij = d_j a_ji inside components
    std::vector<Rat> dq(rd.rank_, Rat(0));
    for (auto [s, e] : rd.comps_) {
        dq[s] = Rat(1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = s; a < e; ++a)
                for (int b = s; b < e; ++b) {
                    if (a == b || rd.cartan_[a][b] == 0) continue;
                    if (dq[a] != 0 && dq[b] == 0) {
                        // d_a * a_ab = d_b * a_ba
                        dq[b] = dq[a] * to_rat(rd.cartan_[a][b]) / to_rat(rd.cartan_[b][a]);
                        changed = true;
                    }
                }
        }
    }
    Int den(1);
    for (auto& q : dq) den = lcm(den, Int(q.get_den()));
    Int g(0);
    for (auto& q : dq) { Rat t = q * Rat(den); t.canonicalize(); g = gcd(g, t.get_num()); }
    rd.d_.resize(rd.rank_);
    for (int k = 0; k < rd.rank_; ++k) {
        Rat t = dq[k] * Rat(den) / Rat(g);
        t.canonicalize();
        rd.d_[k] = (long long)t.get_num().get_si();
    }
    for (int a = 0; a < rd.rank_; ++a)
        for (int b = 0; b < rd.rank_; ++b)
            if (rd.d_[a] * rd.cartan_[a][b] != rd.d_[b] * rd.cartan_[b][a])
                throw MathError("Cartan matrix not symmetrizable");

    rd.enumerate_roots();

    rd.h_ = 0;
    rd.highest_.resize(rd.comps_.size());
    for (size_t ci = 0; ci < rd.comps_.size(); ++ci) {
        long long best = -1;
        for (size_t k = 0; k < rd.pos_.size(); ++k) {
            const Root& r = rd.pos_[k].root;
            bool in_comp = false;
            for (int a = rd.comps_[ci].first; a < rd.comps_[ci].second; ++a)
                if (r.rc[a] != 0) in_comp = true;
            if (in_comp && r.height() > best) {
                best = r.height();
                rd.highest_[ci] = (int)k;
            }
        }
        rd.h_ = std::max(rd.h_, best + 1);
    }

    rd.validate_l();
    return rd;
}

void RootDatum::validate_l() const {
    if (l_ <= 0) throw ConfigError("l must be a positive integer");
    if (l_ % 2 == 0) throw ConfigError("l must be odd");
    if (l_ < h_)
        throw ConfigError("l must be at least the Coxeter number h = " + std::to_string(h_));
    if (std::gcd(l_, e_) != 1)
        throw ConfigError("l must be prime to e = |Lambda/Q| = " + std::to_string(e_));
    if (has_g2_ && l_ % 3 == 0) throw ConfigError("l must be prime to 3 for G2 components");
}

void RootDatum::enumerate_roots() {
    // closure algorithm: root strings from simple roots, by height
    std::set<Root> known;
    std::vector<Root> frontier;
    for (int i = 0; i < rank_; ++i) {
        Root a{Vec(rank_, 0)};
        a.rc[i] = 1;
        known.insert(a);
        frontier.push_back(a);
    }
    auto pair_with_simple_coroot = [&](const Root& b, int i) {
        long long s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * b.rc[j];
        return s;
    };
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const Root& b : frontier)
            for (int i = 0; i < rank_; ++i) {
                // alpha_i-string through b: b - p*a_i .. b + q*a_i, p - q = <b, a_i-check>
                long long p = 0;
                Root down = b;
                while (true) {
                    down.rc[i] -= 1;
                    bool neg = false;
                    for (auto x : down.rc)
                        if (x < 0) neg = true;
                    if (neg || !known.count(down)) break;
                    ++p;
                }
                long long q = p - pair_with_simple_coroot(b, i);
                if (q >= 1) {
                    Root up = b;
                    up.rc[i] += 1;
                    if (!known.count(up)) {
                        known.insert(up);
                        next.push_back(up);
                    }
                }
            }
        frontier = std::move(next);
    }
    std::vector<Root> roots(known.begin(), known.end());
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.rc < b.rc;
    });
    for (auto& r : roots) {
        // (beta,beta)/2 = sum_ij rc_i rc_j d_i a_ij / 2
        long long bb = 0;
        for (int a = 0; a < rank_; ++a)
            for (int b = 0; b < rank_; ++b) bb += r.rc[a] * r.rc[b] * d_[a] * cartan_[a][b];
        long long dbeta = bb / 2;
        Coroot cr{Vec(rank_, 0)};
        for (int a = 0; a < rank_; ++a) {
            long long num = r.rc[a] * d_[a];
            if (num % dbeta != 0) throw MathError("non-integral coroot");
            cr.cc[a] = num / dbeta;
        }
        pos_.push_back(PosRoot{r, cr, dbeta});
    }
    for (size_t k = 0; k < pos_.size(); ++k) {
        root_index_[pos_[k].root] = (int)k;
        coroot_index_[pos_[k].coroot] = (int)k;
    }
}

Weight RootDatum::root_to_weight(const Root& r) const {
    Weight w{Vec(rank_, 0)};
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) w.fw[i] += cartan_[i][j] * r.rc[j];
    return w;
}

Root RootDatum::simple_root(int i) const {
    Root r{Vec(rank_, 0)};
    r.rc[i] = 1;
    return r;
}

Coroot RootDatum::simple_coroot(int i) const {
    Coroot c{Vec(rank_, 0)};
    c.cc[i] = 1;
    return c;
}

const PosRoot& RootDatum::highest_root(int comp) const { return pos_[highest_[comp]]; }

const PosRoot* RootDatum::find_pos_root(const Root& r) const {
    auto it = root_index_.find(r);
    return it == root_index_.end() ? nullptr : &pos_[it->second];
}

const PosRoot* RootDatum::find_pos_coroot(const Coroot& c) const {
    auto it = coroot_index_.find(c);
    return it == coroot_index_.end() ? nullptr : &pos_[it->second];
}

long long RootDatum::d_of_coroot(const Coroot& c) const {
    if (auto* p = find_pos_coroot(c)) return p->d;
    Coroot n{vec_neg(c.cc)};
    if (auto* p = find_pos_coroot(n)) return p->d;
    throw MathError("not a real coroot: " + vec_str(c.cc));
}

std::optional<Vec> RootDatum::weight_to_root_coords(const Weight& w) const {
    std::vector<std::vector<Rat>> A(rank_, std::vector<Rat>(rank_));
    std::vector<Rat> b(rank_);
    for (int i = 0; i < rank_; ++i) {
        b[i] = to_rat(w.fw[i]);
        for (int j = 0; j < rank_; ++j) A[i][j] = to_rat(cartan_[i][j]);
    }
    auto x = solve_linear(A, b);
    if (!x) return std::nullopt;
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i) {
        if ((*x)[i].get_den() != 1) return std::nullopt;
        out[i] = (long long)(*x)[i].get_num().get_si();
    }
    return out;
}

bool RootDatum::dominance_leq(const Weight& lambda, const Weight& mu) const {
    Weight diff{vec_sub(mu.fw, lambda.fw)};
    auto rc = weight_to_root_coords(diff);
    if (!rc) return false;
    for (auto x : *rc)
        if (x < 0) return false;
    return true;
}

std::pair<Weight, Weight> RootDatum::restricted_decompose(const Weight& lambda) const {
    Weight l0{Vec(rank_)}, l1{Vec(rank_)};
    for (int i = 0; i < rank_; ++i) {
        l0.fw[i] = posmod(lambda.fw[i], l_);
        l1.fw[i] = (lambda.fw[i] - l0.fw[i]) / l_;
    }
    return {l0, l1};
}

bool RootDatum::is_l_restricted_dominant(const Weight& w) const {
    for (int i = 0; i < rank_; ++i)
        if (w.fw[i] < 0 || w.fw[i] >= l_) return false;
    return true;
}

bool RootDatum::in_xi_sc(const Weight& w) const {
    Weight sh{vec_add(w.fw, rho().fw)};
    for (auto& pr : pos_) {
        long long c = pairing(sh, pr.coroot);
        if (c < 0 || c > l_) return false;
    }
    return true;
}

std::vector<RootDatum::XiElement> RootDatum::xi_sc_enumerate() const {
    // box scan: 0 <= <omega+rho, alpha_i-check> <= l forces coords in [-1, l-1]
    std::vector<XiElement> out;
    Vec cur(rank_, -1);
    while (true) {
        Weight w{cur};
        if (in_xi_sc(w)) {
            bool regular = true;
            Weight sh{vec_add(cur, rho().fw)};
            for (auto& pr : pos_) {
                long long c = pairing(sh, pr.coroot);
                if (c == 0 || c == l_) regular = false;
            }
            out.push_back({w, regular});
        }
        int i = 0;
        while (i < rank_ && cur[i] == l_ - 1) cur[i++] = -1;
        if (i == rank_) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(),
              [](const XiElement& a, const XiElement& b) { return a.omega.fw < b.omega.fw; });
    return out;
}

std::vector<Weight> RootDatum::pi1_reps() const {
    // close {fundamental weights} under addition modulo Q
    auto cls = [&](const Weight& w) {
        // fractional part of the root coordinates, canonical in [0,1)
        std::vector<std::vector<Rat>> A(rank_, std::vector<Rat>(rank_));
        std::vector<Rat> b(rank_);
        for (int i = 0; i < rank_; ++i) {
            b[i] = to_rat(w.fw[i]);
            for (int j = 0; j < rank_; ++j) A[i][j] = to_rat(cartan_[i][j]);
        }
        auto x = solve_linear(A, b);
        std::vector<Rat> frac(rank_);
        for (int i = 0; i < rank_; ++i) {
            Rat v = (*x)[i];
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
            frac[i] = v - Rat(fl);
        }
        return frac;
    };
    std::map<std::vector<Rat>, Weight> seen;
    seen[cls(zero_weight())] = zero_weight();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Weight> cur;
        for (auto& [k, w] : seen) cur.push_back(w);
        for (auto& w : cur)
            for (int i = 0; i < rank_; ++i) {
                Weight nw{w.fw};
                nw.fw[i] += 1;  // + fundamental weight i
                auto key = cls(nw);
                if (!seen.count(key)) {
                    seen[key] = nw;
                    changed = true;
                }
            }
    }
    std::vector<Weight> out;
    for (auto& [k, w] : seen) out.push_back(w);
    std::sort(out.begin(), out.end());
    // put 0 first
    auto z = std::find(out.begin(), out.end(), zero_weight());
    std::iter_swap(out.begin(), z);
    return out;
}

}  // namespace lweyl
