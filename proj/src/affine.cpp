#include "lweyl/affine.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace lweyl {

AffineWeyl::AffineWeyl(const RootDatum& rd, bool finite_mode)
    : rd_(&rd), W_(std::make_shared<WeylGroup>(rd)), finite_(finite_mode) {
    for (int i = 0; i < rd.rank(); ++i)
        gens_.push_back(SimpleGen{AffineCoroot{rd.simple_coroot(i), 0}, false});
    if (!finite_) {
        for (size_t c = 0; c < rd.components().size(); ++c) {
            const PosRoot& th = rd.highest_root((int)c);
            gens_.push_back(SimpleGen{AffineCoroot{Coroot{vec_neg(th.coroot.cc)}, rd.l()}, true});
        }
    }
}

AffineElement AffineWeyl::translation(const Weight& mu) const {
    return AffineElement{0, mu.fw};
}

AffineElement AffineWeyl::mult(const AffineElement& a, const AffineElement& b) const {
    // (w1,m1)*(w2,m2) = (w1 w2, w2^{-1}(m1) + m2)
    AffineElement r;
    r.w = W_->mult(a.w, b.w);
    Weight m1{a.mu};
    r.mu = vec_add(W_->act_weight(W_->inverse(b.w), m1).fw, b.mu);
    return r;
}

AffineElement AffineWeyl::inverse(const AffineElement& a) const {
    AffineElement r;
    r.w = W_->inverse(a.w);
    r.mu = vec_neg(W_->act_weight(a.w, Weight{a.mu}).fw);
    return r;
}

bool AffineWeyl::is_positive(const AffineCoroot& g) const {
    if (g.level != 0) return g.level > 0;
    return rd_->find_pos_coroot(g.beta) != nullptr;
}

bool AffineWeyl::in_l_af(const AffineElement& x) const {
    if (finite_) return vec_zero(x.mu);
    Vec m = x.mu;
    for (auto& v : m)
        if (v % rd_->l() != 0) return false;
    for (auto& v : m) v /= rd_->l();
    return rd_->weight_to_root_coords(Weight{m}).has_value();
}

Weight AffineWeyl::apply(const AffineElement& x, const Weight& w) const {
    return W_->act_weight(x.w, Weight{vec_add(w.fw, x.mu)});
}

Weight AffineWeyl::dot_apply(const AffineElement& x, const Weight& w) const {
    Vec shifted = vec_add(vec_add(w.fw, rd_->rho().fw), x.mu);
    return Weight{vec_sub(W_->act_weight(x.w, Weight{shifted}).fw, rd_->rho().fw)};
}

AffineCoroot AffineWeyl::linear_apply(const AffineElement& x, const AffineCoroot& g) const {
    // (w, mu): beta-check + n*delta -> w(beta-check) + (n + <mu, beta-check>) delta
    AffineCoroot r;
    r.beta = W_->act_coroot(x.w, g.beta);
    r.level = g.level + vec_dot(x.mu, g.beta.cc);
    return r;
}

AffineElement AffineWeyl::reflection_of(const AffineCoroot& g) const {
    if (!finite_ && g.level % rd_->l() != 0)
        throw MathError("reflection_of: level " + std::to_string(g.level) +
                        " not divisible by l = " + std::to_string(rd_->l()));
    if (finite_ && g.level != 0) throw MathError("reflection_of: nonzero level in finite mode");
    // locate the (+-) root beta with this coroot
    const PosRoot* pr = rd_->find_pos_coroot(g.beta);
    long long sign = 1;
    if (!pr) {
        pr = rd_->find_pos_coroot(Coroot{vec_neg(g.beta.cc)});
        sign = -1;
    }
    if (!pr) throw MathError("reflection_of: not a real coroot: " + g.str());
    // s_{beta,m} = (s_beta, -m*beta) with m = sign-adjusted level
    Root beta = pr->root;
    Weight bw = rd_->root_to_weight(beta);
    AffineElement r;
    r.w = W_->reflection(beta);
    r.mu = vec_scale(-sign * g.level, bw.fw);
    return r;
}

long long AffineWeyl::length(const AffineElement& x) const {
    auto memo = length_memo_.find(x);
    if (memo != length_memo_.end()) return memo->second;
    // inversions: positive gamma with x^{-1}(gamma) negative
    AffineElement xi = inverse(x);
    long long count = 0;
    long long L = finite_ ? 1 : rd_->l();
    for (auto& pr : rd_->positive_roots()) {
        for (int s = -1; s <= 1; s += 2) {
            Coroot b = s > 0 ? pr.coroot : Coroot{vec_neg(pr.coroot.cc)};
            long long t = vec_dot(xi.mu, b.cc);  // level shift under x^{-1}
            // positive levels n (multiples of L): n >= 0 if s>0 else n >= L
            long long n0 = s > 0 ? 0 : L;
            if (finite_ && n0 > 0) continue;
            long long hi = std::max(n0, -t) + (finite_ ? 0 : L);
            for (long long n = n0; n <= hi; n += std::max<long long>(L, 1)) {
                AffineCoroot img = linear_apply(xi, AffineCoroot{b, n});
                if (!is_positive(img)) ++count;
                if (finite_) break;
            }
        }
    }
    length_memo_[x] = count;
    return count;
}

AffineElement AffineWeyl::gen_element(int gi) const { return reflection_of(gens_[gi].coroot); }

std::vector<int> AffineWeyl::reduced_word(const AffineElement& x) const {
    std::vector<int> word;
    AffineElement cur = x;
    long long len = length(cur);
    while (len > 0) {
        bool found = false;
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            // right descent: x(gamma_s) < 0
            if (!is_positive(linear_apply(cur, gens_[gi].coroot))) {
                cur = mult(cur, gen_element((int)gi));
                word.push_back((int)gi);
                --len;
                found = true;
                break;
            }
        }
        if (!found) throw MathError("reduced_word: no descent (element outside W_{l,af}?)");
    }
    if (!(cur == identity())) throw MathError("reduced_word: did not reach identity");
    std::reverse(word.begin(), word.end());
    return word;
}

bool AffineWeyl::bruhat_leq(const AffineElement& x, const AffineElement& y) const {
    // subword recursion: pick s with ys < y; x <= y iff (xs < x ? xs <= ys : x <= ys)
    long long ly = length(y);
    long long lx = length(x);
    std::function<bool(const AffineElement&, long long, const AffineElement&, long long)> rec =
        [&](const AffineElement& a, long long la, const AffineElement& b, long long lb) -> bool {
        if (la > lb) return false;
        if (lb == 0) return la == 0;
        if (la == 0) return true;
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            if (is_positive(linear_apply(b, gens_[gi].coroot))) continue;  // not a descent
            AffineElement bs = mult(b, gen_element((int)gi));
            if (!is_positive(linear_apply(a, gens_[gi].coroot))) {
                AffineElement as = mult(a, gen_element((int)gi));
                return rec(as, la - 1, bs, lb - 1);
            }
            return rec(a, la, bs, lb - 1);
        }
        throw MathError("bruhat_leq: no descent");
    };
    return rec(x, lx, y, ly);
}

std::vector<AffineElement> AffineWeyl::elements_up_to(long long bound) const {
    auto key = std::make_pair(std::vector<int>{-1}, bound);
    auto memo = reps_memo_.find(key);
    if (memo != reps_memo_.end()) return memo->second;
    std::set<AffineElement> seen;
    std::deque<std::pair<AffineElement, long long>> bfs;
    seen.insert(identity());
    bfs.push_back({identity(), 0});
    while (!bfs.empty()) {
        auto [cur, len] = bfs.front();
        bfs.pop_front();
        if (len == bound) continue;
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            AffineElement nx = mult(cur, gen_element((int)gi));
            if (seen.count(nx)) continue;
            if (is_positive(linear_apply(cur, gens_[gi].coroot))) {  // length goes up
                seen.insert(nx);
                bfs.push_back({nx, len + 1});
            }
        }
    }
    std::vector<AffineElement> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [&](const AffineElement& a, const AffineElement& b) {
                         long long la = length(a), lb = length(b);
                         if (la != lb) return la < lb;
                         return a < b;
                     });
    reps_memo_[key] = out;
    return out;
}

AffineElement AffineWeyl::coset_minimize(AffineElement x, const std::vector<int>& J) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int gi : J) {
            if (!is_positive(linear_apply(x, gens_[gi].coroot))) {
                x = mult(x, gen_element(gi));
                changed = true;
            }
        }
    }
    return x;
}

std::vector<AffineElement> AffineWeyl::coset_min_reps(const std::vector<int>& J,
                                                      long long length_bound) const {
    auto key = std::make_pair(J, length_bound);
    auto memo = reps_memo_.find(key);
    if (memo != reps_memo_.end()) return memo->second;
    std::vector<AffineElement> out;
    for (auto& x : elements_up_to(length_bound)) {
        bool min = true;
        for (int gi : J)
            if (!is_positive(linear_apply(x, gens_[gi].coroot))) min = false;
        if (min) out.push_back(x);
    }
    reps_memo_[key] = out;
    return out;
}

std::vector<AffineCoroot> AffineWeyl::positive_coroots_up_to(long long level_bound) const {
    std::vector<AffineCoroot> out;
    long long L = finite_ ? 1 : rd_->l();
    for (auto& pr : rd_->positive_roots()) {
        out.push_back(AffineCoroot{pr.coroot, 0});
        if (finite_) continue;
        for (long long n = L; n <= level_bound; n += L) {
            out.push_back(AffineCoroot{pr.coroot, n});
            out.push_back(AffineCoroot{Coroot{vec_neg(pr.coroot.cc)}, n});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AffineWeyl::Stabilizer AffineWeyl::stabilizer_dot(const Weight& omega) const {
    if (!rd_->in_xi_sc(omega))
        throw MathError("stabilizer_dot: weight outside the fundamental domain Xi_sc: " +
                        vec_str(omega.fw));
    return stabilizer_dot_any(omega);
}

AffineWeyl::Stabilizer AffineWeyl::stabilizer_dot_any(const Weight& omega) const {
    Stabilizer st;
    st.omega = omega;
    Weight sh{vec_add(omega.fw, rd_->rho().fw)};
    long long L = finite_ ? 1 : rd_->l();
    for (auto& pr : rd_->positive_roots()) {
        long long c = rd_->pairing(sh, pr.coroot);
        if (c == 0) {
            st.pos_coroots.push_back(AffineCoroot{pr.coroot, 0});
        } else if (!finite_ && c % L == 0) {
            // positive representative of the fixing coroot beta-check + c*delta
            if (c > 0)
                st.pos_coroots.push_back(AffineCoroot{pr.coroot, c});
            else
                st.pos_coroots.push_back(AffineCoroot{Coroot{vec_neg(pr.coroot.cc)}, -c});
        }
    }
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
        AffineElement s = gen_element((int)gi);
        if (dot_apply(s, omega) == omega) st.simple_J.push_back((int)gi);
    }
    // closure
    std::set<AffineElement> group{identity()};
    std::deque<AffineElement> bfs{identity()};
    while (!bfs.empty()) {
        AffineElement cur = bfs.front();
        bfs.pop_front();
        for (auto& g : st.pos_coroots) {
            AffineElement nx = mult(cur, reflection_of(g));
            if (!group.count(nx)) {
                group.insert(nx);
                bfs.push_back(nx);
                if (group.size() > 100000) throw MathError("stabilizer not finite?");
            }
        }
    }
    st.elements.assign(group.begin(), group.end());
    std::stable_sort(st.elements.begin(), st.elements.end(),
                     [&](const AffineElement& a, const AffineElement& b) {
                         long long la = length(a), lb = length(b);
                         if (la != lb) return la < lb;
                         return a < b;
                     });
    return st;
}

std::set<Weight> AffineWeyl::up_closure(const Weight& lambda, long long depth) const {
    std::set<Weight> out{lambda};
    std::deque<std::pair<Weight, long long>> bfs{{lambda, 0}};
    long long L = rd_->l();
    while (!bfs.empty()) {
        auto [cur, used] = bfs.front();
        bfs.pop_front();
        Weight sh{vec_add(cur.fw, rd_->rho().fw)};
        for (auto& pr : rd_->positive_roots()) {
            long long c = rd_->pairing(sh, pr.coroot);
            long long hb = pr.root.height();
            // covers: s_{beta,kl} . cur = cur - m*beta, m = c - kl >= 1, within depth
            long long m0 = posmod(c, L);
            if (m0 == 0) m0 = L;
            for (long long m = m0; used + m * hb <= depth; m += L) {
                Weight nx{vec_sub(cur.fw, vec_scale(m, rd_->root_to_weight(pr.root).fw))};
                if (!out.count(nx)) {
                    out.insert(nx);
                    bfs.push_back({nx, used + m * hb});
                }
            }
        }
    }
    return out;
}

PolyForm AffineWeyl::linear_form(const AffineCoroot& g) const {
    int nv = nvars();
    PolyForm p(nv);
    for (int i = 0; i < rd_->rank(); ++i)
        if (g.beta.cc[i] != 0) p = p + PolyForm::variable(nv, i) * to_rat(g.beta.cc[i]);
    if (g.level != 0) p = p + PolyForm::variable(nv, nv - 1) * to_rat(g.level);
    return p;
}

PolyForm AffineWeyl::root_form(const Root& alpha) const {
    const PosRoot* pr = rd_->find_pos_root(alpha);
    long long sign = 1;
    if (!pr) {
        pr = rd_->find_pos_root(Root{vec_neg(alpha.rc)});
        sign = -1;
    }
    if (!pr) throw MathError("root_form: not a root");
    return linear_form(AffineCoroot{pr->coroot, 0}) * to_rat(sign * pr->d);
}

PolyForm AffineWeyl::weyl_act_poly(const AffineElement& x, const PolyForm& p) const {
    int nv = nvars();
    std::vector<PolyForm> images;
    for (int i = 0; i < rd_->rank(); ++i)
        images.push_back(linear_form(linear_apply(x, AffineCoroot{rd_->simple_coroot(i), 0})));
    images.push_back(PolyForm::variable(nv, nv - 1));  // d is fixed
    return p.substitute(images);
}

LocalizedElem AffineWeyl::weyl_act_localized(const AffineElement& x, const LocalizedElem& f) const {
    PolyForm num = weyl_act_poly(x, f.num());
    std::vector<std::pair<PolyForm, int>> den;
    for (auto& [g, k] : f.den()) den.push_back({weyl_act_poly(x, g), k});
    return LocalizedElem(num, den);
}

std::string AffineWeyl::el_str(const AffineElement& x) const {
    std::string s = "w[";
    auto& word = W_->word(x.w);
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += ".";
        s += "s" + std::to_string(word[i] + 1);
    }
    if (word.empty()) s += "e";
    s += "]t" + vec_str(x.mu);
    return s;
}

}  // namespace lweyl
