#include "lweyl/jantzen.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace lweyl {

bool Character::in_window(const Weight& mu) const {
    if (!rd_->dominance_leq(mu, win_.top)) return false;
    auto rc = rd_->weight_to_root_coords(Weight{vec_sub(win_.top.fw, mu.fw)});
    return rc && vec_sum(*rc) <= win_.depth;
}

Int Character::coeff(const Weight& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void Character::add(const Weight& mu, const Int& c) {
    if (c == 0 || !in_window(mu)) return;
    Int& v = coeffs_[mu];
    v += c;
    if (v == 0) coeffs_.erase(mu);
}

Character Character::operator+(const Character& o) const {
    if (win_ != o.win_) throw MathError("character window mismatch");
    Character r = *this;
    for (auto& [w, c] : o.coeffs_) r.add(w, c);
    return r;
}

Character Character::operator-(const Character& o) const {
    if (win_ != o.win_) throw MathError("character window mismatch");
    Character r = *this;
    for (auto& [w, c] : o.coeffs_) r.add(w, -c);
    return r;
}

std::string Character::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : coeffs_) {
        if (!first) os << " ";
        first = false;
        os << vec_str(w.fw) << ":" << c.get_str();
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<KostantPartition> Jantzen::partitions(const Vec& eta) const {
    for (auto x : eta)
        if (x < 0) return {};
    const auto& pos = rd_->positive_roots();
    std::vector<KostantPartition> out;
    KostantPartition cur;
    std::function<void(size_t, Vec)> rec = [&](size_t k, Vec rest) {
        if (vec_zero(rest)) {
            out.push_back(cur);
            return;
        }
        if (k == pos.size()) return;
        const Vec& b = pos[k].root.rc;
        long long maxm = -1;
        for (int i = 0; i < rd_->rank(); ++i)
            if (b[i] > 0) {
                long long q = rest[i] / b[i];
                maxm = maxm < 0 ? q : std::min(maxm, q);
            }
        for (long long m = 0; m <= maxm; ++m) {
            if (m > 0)
                cur.mult[(int)k] = m;
            else
                cur.mult.erase((int)k);
            rec(k + 1, vec_sub(rest, vec_scale(m, b)));
        }
        cur.mult.erase((int)k);
    };
    rec(0, eta);
    return out;
}

Int Jantzen::partition_count(const Vec& eta) const {
    for (auto x : eta)
        if (x < 0) return 0;
    if (vec_zero(eta)) return 1;
    auto it = par_memo_.find(eta);
    if (it != par_memo_.end()) return it->second;
    const auto& pos = rd_->positive_roots();
    std::function<Int(size_t, const Vec&)> rec = [&](size_t k, const Vec& rest) -> Int {
        if (vec_zero(rest)) return 1;
        if (k == pos.size()) return 0;
        const Vec& b = pos[k].root.rc;
        Int total = 0;
        Vec r = rest;
        while (true) {
            total += rec(k + 1, r);
            r = vec_sub(r, b);
            bool neg = false;
            for (auto x : r)
                if (x < 0) neg = true;
            if (neg) break;
        }
        return total;
    };
    Int v = rec(0, eta);
    par_memo_[eta] = v;
    return v;
}

std::vector<ShapFactor> Jantzen::shapovalov_factors(const Weight& lambda, const Vec& eta) const {
    std::vector<ShapFactor> out;
    Weight sh{vec_add(lambda.fw, rd_->rho().fw)};
    long long L = rd_->l();
    for (auto& pr : rd_->positive_roots()) {
        long long cbase = rd_->pairing(sh, pr.coroot);
        for (long long m = 1;; ++m) {
            Vec rest = vec_sub(eta, vec_scale(m, pr.root.rc));
            bool neg = false;
            for (auto x : rest)
                if (x < 0) neg = true;
            if (neg) break;
            Int mult = partition_count(rest);
            if (mult == 0) continue;
            ShapFactor f;
            f.beta = pr.root;
            f.m = m;
            f.c = cbase - m;
            f.mult = mult;
            if (f.c % L == 0) f.vanishing = AffineCoroot{pr.coroot, f.c};
            out.push_back(std::move(f));
        }
    }
    return out;
}

namespace {
// height of top - lambda in the root lattice, nullopt if not in Q
std::optional<long long> drop_height(const RootDatum& rd, const CharWindow& win,
                                     const Weight& lambda) {
    auto rc = rd.weight_to_root_coords(Weight{vec_sub(win.top.fw, lambda.fw)});
    if (!rc) return std::nullopt;
    return vec_sum(*rc);
}
}  // namespace

Character Jantzen::verma_character(const Weight& lambda, const CharWindow& win) const {
    Character ch(*rd_, win);
    auto d0 = drop_height(*rd_, win, lambda);
    if (!d0) return ch;
    long long budget = win.depth - *d0;
    if (budget < 0) return ch;
    Vec eta(rd_->rank(), 0);
    std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == rd_->rank()) {
            ch.add(Weight{vec_sub(lambda.fw, rd_->root_to_weight(Root{eta}).fw)},
                   partition_count(eta));
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            eta[i] = v;
            rec(i + 1, left - v);
        }
        eta[i] = 0;
    };
    rec(0, budget);
    return ch;
}

Character Jantzen::jantzen_lhs(const Weight& lambda, const CharWindow& win) const {
    Character ch(*rd_, win);
    auto d0 = drop_height(*rd_, win, lambda);
    if (!d0) return ch;
    long long budget = win.depth - *d0;
    if (budget < 0) return ch;
    Vec eta(rd_->rank(), 0);
    std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == rd_->rank()) {
            if (vec_zero(eta)) return;
            Int val = 0;
            for (auto& f : shapovalov_factors(lambda, eta))
                if (f.vanishing) val += f.mult;
            ch.add(Weight{vec_sub(lambda.fw, rd_->root_to_weight(Root{eta}).fw)}, val);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            eta[i] = v;
            rec(i + 1, left - v);
        }
        eta[i] = 0;
    };
    rec(0, budget);
    return ch;
}

Character Jantzen::jantzen_rhs(const Weight& lambda, const CharWindow& win) const {
    Character ch(*rd_, win);
    auto d0 = drop_height(*rd_, win, lambda);
    if (!d0) return ch;
    Weight sh{vec_add(lambda.fw, rd_->rho().fw)};
    long long L = rd_->l();
    for (auto& pr : rd_->positive_roots()) {
        long long c = rd_->pairing(sh, pr.coroot);
        long long hb = pr.root.height();
        long long m0 = posmod(c, L);
        if (m0 == 0) m0 = L;
        for (long long m = m0; *d0 + m * hb <= win.depth; m += L) {
            Weight hw{vec_sub(lambda.fw, vec_scale(m, rd_->root_to_weight(pr.root).fw))};
            ch = ch + verma_character(hw, win);
        }
    }
    return ch;
}

Character Jantzen::jantzen_lhs_subgeneric(const Weight& lambda, const Root& alpha,
                                          const CharWindow& win) const {
    Character ch(*rd_, win);
    auto d0 = drop_height(*rd_, win, lambda);
    if (!d0) return ch;
    long long budget = win.depth - *d0;
    if (budget < 0) return ch;
    Vec eta(rd_->rank(), 0);
    std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == rd_->rank()) {
            if (vec_zero(eta)) return;
            Int val = 0;
            for (auto& f : shapovalov_factors(lambda, eta))
                if (f.vanishing && f.beta == alpha) val += f.mult;
            ch.add(Weight{vec_sub(lambda.fw, rd_->root_to_weight(Root{eta}).fw)}, val);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            eta[i] = v;
            rec(i + 1, left - v);
        }
        eta[i] = 0;
    };
    rec(0, budget);
    return ch;
}

Character Jantzen::jantzen_rhs_subgeneric(const Weight& lambda, const Root& alpha,
                                          const CharWindow& win) const {
    Character ch(*rd_, win);
    auto d0 = drop_height(*rd_, win, lambda);
    if (!d0) return ch;
    const PosRoot* pr = rd_->find_pos_root(alpha);
    if (!pr) throw MathError("subgeneric: alpha must be a positive root");
    Weight sh{vec_add(lambda.fw, rd_->rho().fw)};
    long long L = rd_->l();
    long long c = rd_->pairing(sh, pr->coroot);
    long long hb = alpha.height();
    long long m0 = posmod(c, L);
    if (m0 == 0) m0 = L;
    for (long long m = m0; *d0 + m * hb <= win.depth; m += L) {
        Weight hw{vec_sub(lambda.fw, vec_scale(m, rd_->root_to_weight(alpha).fw))};
        ch = ch + verma_character(hw, win);
    }
    return ch;
}

bool Jantzen::linkage_nonzero(const Weight& lambda, const Weight& mu, long long depth) const {
    return aw_->up_closure(lambda, depth).count(mu) > 0;
}

bool Jantzen::linkage_recursive(const Weight& lambda, const Weight& mu, long long depth) const {
    if (mu == lambda) return true;
    auto rc = rd_->weight_to_root_coords(Weight{vec_sub(lambda.fw, mu.fw)});
    if (!rc) return false;
    for (auto x : *rc)
        if (x < 0) return false;
    if (vec_sum(*rc) > depth) return false;
    Weight sh{vec_add(lambda.fw, rd_->rho().fw)};
    long long L = rd_->l();
    for (auto& pr : rd_->positive_roots()) {
        long long c = rd_->pairing(sh, pr.coroot);
        long long m0 = posmod(c, L);
        if (m0 == 0) m0 = L;
        // each m = c (mod l), m >= 1 is a vanishing Shapovalov factor; it lowers
        // lambda to the linked weight lambda - m*beta = s_{beta,c-m}.lambda
        for (long long m = m0; m * pr.root.height() <= depth; m += L) {
            Weight next{vec_sub(lambda.fw, vec_scale(m, rd_->root_to_weight(pr.root).fw))};
            if (linkage_recursive(next, mu, depth)) return true;
        }
    }
    return false;
}

Jantzen::BlockRep Jantzen::block_rep(const Weight& lambda) const {
    auto walk = [&](Weight cur) {
        long long guard = 0;
        while (true) {
            if (++guard > 1000000) throw MathError("block_rep: walk did not terminate");
            Weight sh{vec_add(cur.fw, rd_->rho().fw)};
            bool moved = false;
            for (auto& pr : rd_->positive_roots()) {
                long long c = rd_->pairing(sh, pr.coroot);
                Weight bw = rd_->root_to_weight(pr.root);
                if (c < 0) {  // s_beta raises: cur - c*beta > cur
                    cur = Weight{vec_sub(cur.fw, vec_scale(c, bw.fw))};
                    moved = true;
                    break;
                }
                if (c > rd_->l()) {  // s_{beta,l} lowers: cur - (c-l)*beta
                    cur = Weight{vec_sub(cur.fw, vec_scale(c - rd_->l(), bw.fw))};
                    moved = true;
                    break;
                }
            }
            if (!moved) return cur;
        }
    };
    BlockRep br;
    br.omega = walk(lambda);
    Weight best = br.omega;
    for (auto& nu : rd_->pi1_reps()) {
        Weight t{vec_add(br.omega.fw, vec_scale(rd_->l(), nu.fw))};
        Weight w = walk(t);
        if (w.fw < best.fw) best = w;
    }
    br.omega_extended = best;
    return br;
}

Weight Jantzen::antidominant_rep(const Weight& lambda) const {
    Weight cur = lambda;
    long long guard = 0;
    while (true) {
        if (++guard > 1000000) throw MathError("antidominant_rep: walk did not terminate");
        Weight sh{vec_add(cur.fw, rd_->rho().fw)};
        bool moved = false;
        for (auto& pr : rd_->positive_roots()) {
            long long c = rd_->pairing(sh, pr.coroot);
            Weight bw = rd_->root_to_weight(pr.root);
            if (c > 0) {  // s_beta lowers
                cur = Weight{vec_sub(cur.fw, vec_scale(c, bw.fw))};
                moved = true;
                break;
            }
            if (c < -rd_->l()) {  // reflection in the wall c = -l raises
                cur = Weight{vec_sub(cur.fw, vec_scale(c + rd_->l(), bw.fw))};
                moved = true;
                break;
            }
        }
        if (!moved) return cur;
    }
}

std::vector<Weight> Jantzen::translation_factors(const Weight& x_dot_omega1, const Weight& omega1,
                                                 const Weight& omega2) const {
    auto st1 = aw_->stabilizer_dot(omega1);
    // find x with x . omega1 = x_dot_omega1 by BFS through the dot-orbit
    std::optional<AffineElement> x;
    if (x_dot_omega1 == omega1) x = aw_->identity();
    std::set<Weight> seen{omega1};
    std::deque<AffineElement> bfs{aw_->identity()};
    long long guard = 0;
    while (!bfs.empty() && !x) {
        AffineElement cur = bfs.front();
        bfs.pop_front();
        if (++guard > 200000) break;
        for (size_t gi = 0; gi < aw_->simple_gens().size(); ++gi) {
            AffineElement nx = aw_->mult(aw_->gen_element((int)gi), cur);
            Weight w = aw_->dot_apply(nx, omega1);
            if (seen.count(w)) continue;
            seen.insert(w);
            bfs.push_back(nx);
            if (w == x_dot_omega1) {
                x = nx;
                break;
            }
        }
    }
    if (!x) throw MathError("translation_factors: weight not in the block of omega1");
    // transversal of W_{l,omega1} / (W_{l,omega1} cap W_{l,omega2})
    std::set<AffineElement> sub;
    for (auto& y : st1.elements)
        if (aw_->dot_apply(y, omega2) == omega2) sub.insert(y);
    std::vector<Weight> out;
    std::set<AffineElement> covered;
    for (auto& y : st1.elements) {
        if (covered.count(y)) continue;
        for (auto& s : sub) covered.insert(aw_->mult(y, s));
        out.push_back(aw_->dot_apply(aw_->mult(*x, y), omega2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> Jantzen::sl2_verma_flag(BlockKind kind, const Root& alpha, const Weight& omega,
                                            long long n, long long m) const {
    if (n > m) throw ConfigError("sl2_verma_flag: need n <= m");
    const PosRoot* pr = rd_->find_pos_root(alpha);
    if (!pr) throw ConfigError("sl2_verma_flag: alpha must be a positive root");
    Weight alpha_w = rd_->root_to_weight(alpha);
    long long L = rd_->l();
    std::vector<Weight> out;
    if (kind == BlockKind::singular) {
        for (long long j = n; j <= m; ++j)
            out.push_back(Weight{vec_add(omega.fw, vec_scale(L * j, alpha_w.fw))});
        return out;
    }
    // regular: indices 2n-1 .. 2m, bold 2j = omega + l j alpha, 2j-1 = s_a.omega + l j alpha
    long long c = rd_->pairing(Weight{vec_add(omega.fw, rd_->rho().fw)}, pr->coroot);
    Weight sa_omega{vec_sub(omega.fw, vec_scale(c, alpha_w.fw))};
    for (long long idx = 2 * n - 1; idx <= 2 * m; ++idx) {
        if (idx % 2 == 0) {
            long long j = idx / 2;
            out.push_back(Weight{vec_add(omega.fw, vec_scale(L * j, alpha_w.fw))});
        } else {
            long long j = (idx + 1) / 2;
            out.push_back(Weight{vec_add(sa_omega.fw, vec_scale(L * j, alpha_w.fw))});
        }
    }
    return out;
}

}  // namespace lweyl
