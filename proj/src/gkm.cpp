#include "lweyl/gkm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace lweyl {

std::string GkmReport::str() const {
    std::ostringstream os;
    os << (ok ? "PASS" : "FAIL");
    os << " violations=" << violations.size() << " skipped=" << skipped;
    for (auto& v : violations) os << "\n  " << v;
    return os.str();
}

LocalizedElem GkmFunction::value(const AffineElement& x) const {
    auto it = values.find(x);
    if (it == values.end()) throw MathError("GkmFunction: point outside window");
    return it->second;
}

long long Gkm::reflection_level_bound(long long window, const std::vector<int>& J) const {
    long long maxj = 0;
    if (!J.empty()) {
        std::set<AffineElement> sub{aw_->identity()};
        std::deque<AffineElement> bfs{aw_->identity()};
        while (!bfs.empty()) {
            AffineElement cur = bfs.front();
            bfs.pop_front();
            for (int gi : J) {
                AffineElement nx = aw_->mult(cur, aw_->gen_element(gi));
                if (!sub.count(nx)) {
                    sub.insert(nx);
                    bfs.push_back(nx);
                    if (sub.size() > 100000) throw ConfigError("parabolic W_J not finite");
                }
            }
        }
        for (auto& x : sub) maxj = std::max(maxj, aw_->length(x));
    }
    long long L = aw_->finite_mode() ? 1 : aw_->datum().l();
    return L * (window + maxj + 2);
}

std::vector<AffineCoroot> Gkm::reflections_for_window(long long window,
                                                      const std::vector<int>& J) const {
    auto key = std::make_pair(J, window);
    auto memo = refl_memo_.find(key);
    if (memo != refl_memo_.end()) return memo->second;
    auto out = aw_->positive_coroots_up_to(reflection_level_bound(window, J));
    refl_memo_[key] = out;
    return out;
}

GkmReport Gkm::check_big(const GkmFunction& f) const {
    GkmReport rep;
    auto gammas = reflections_for_window(f.window, f.J);
    for (auto& [y, fy] : f.values) {
        for (auto& g : gammas) {
            AffineElement t = aw_->mult(aw_->reflection_of(g), y);
            AffineElement z = aw_->coset_minimize(t, f.J);
            if (z == y) continue;
            if (!f.has(z)) {
                if (y < z) ++rep.skipped;
                continue;
            }
            if (!(y < z)) continue;  // each unordered pair once
            LocalizedElem diff = fy - f.values.at(z);
            if (diff.is_zero()) continue;
            if (diff.valuation_at(aw_->linear_form(g)) < 1) {
                rep.ok = false;
                rep.violations.push_back("edge " + aw_->el_str(y) + " -- " + aw_->el_str(z) +
                                         " fails divisibility by " + aw_->linear_form(g).str());
            }
        }
    }
    return rep;
}

namespace {
Rat binom(long long n, long long k) {
    Rat r(1);
    for (long long i = 0; i < k; ++i) r *= to_rat(n - i) / to_rat(i + 1);
    return r;
}

long long orbit_dmax(const SmallTorusOrbit& o) {
    long long d = 0;
    for (auto& [k, v] : o.values)
        if (!v.is_zero()) d = std::max(d, (long long)v.num().total_degree());
    return d + 1;
}
}  // namespace

GkmReport Gkm::check_small(const SmallTorusOrbit& o, long long d_max) {
    GkmReport rep;
    if (d_max < 0) d_max = orbit_dmax(o);
    PolyForm af = o.alpha_form.normalized_linear();
    auto val_ok = [&](const LocalizedElem& v, long long d) {
        if (v.is_zero()) return true;
        return v.valuation_at(af) >= d;
    };
    auto get = [&](long long n, int br) -> const LocalizedElem* {
        auto it = o.values.find({n, br});
        return it == o.values.end() ? nullptr : &it->second;
    };
    int branches = o.fl_like ? 2 : 1;
    // ring membership (d = 0 case of the divisibility families)
    for (auto& [k, v] : o.values)
        if (!v.in_localization(af)) {
            rep.ok = false;
            rep.violations.push_back("value at n=" + std::to_string(k.first) +
                                     " not in the localization");
        }
    // reflections: all cross-branch pairs (Fl-like) / all pairs (Gr-like)
    for (long long n = o.n_min; n <= o.n_max; ++n)
        for (long long m = o.n_min; m <= o.n_max; ++m) {
            const LocalizedElem *a = nullptr, *b = nullptr;
            if (o.fl_like) {
                a = get(n, 0);
                b = get(m, 1);
            } else {
                if (m <= n) continue;
                a = get(n, 0);
                b = get(m, 0);
            }
            if (!a || !b) continue;
            LocalizedElem diff = *a - *b;
            if (!val_ok(diff, 1)) {
                rep.ok = false;
                rep.violations.push_back("reflection pair (" + std::to_string(n) + "," +
                                         std::to_string(m) + ") difference not divisible");
            }
        }
    // (1 - tau)^d and (1 - tau)^{d-1}(1 - s_alpha), s_alpha: (n,br) -> (-n, 1-br)
    for (int br = 0; br < branches; ++br)
        for (long long n = o.n_min; n <= o.n_max; ++n)
            for (long long d = 1; d <= d_max; ++d) {
                {  // family 2
                    LocalizedElem acc = LocalizedElem::zero(o.alpha_form.nvars());
                    bool off = false;
                    for (long long i = 0; i <= d; ++i) {
                        const LocalizedElem* v = get(n + i, br);
                        if (!v) {
                            off = true;
                            break;
                        }
                        Rat c = binom(d, i) * ((i % 2) ? Rat(-1) : Rat(1));
                        acc = acc + *v * c;
                    }
                    if (off)
                        ++rep.skipped;
                    else if (!val_ok(acc, d)) {
                        rep.ok = false;
                        rep.violations.push_back("(1-tau)^" + std::to_string(d) + " at n=" +
                                                 std::to_string(n) + " branch " +
                                                 std::to_string(br) + " not divisible");
                    }
                }
                {  // family 3
                    int sbr = o.fl_like ? 1 - br : 0;
                    LocalizedElem acc = LocalizedElem::zero(o.alpha_form.nvars());
                    bool off = false;
                    for (long long i = 0; i <= d - 1; ++i) {
                        const LocalizedElem* v1 = get(n + i, br);
                        const LocalizedElem* v2 = get(-n + i, sbr);
                        if (!v1 || !v2) {
                            off = true;
                            break;
                        }
                        Rat c = binom(d - 1, i) * ((i % 2) ? Rat(-1) : Rat(1));
                        acc = acc + (*v1 - *v2) * c;
                    }
                    if (off)
                        ++rep.skipped;
                    else if (!val_ok(acc, d)) {
                        rep.ok = false;
                        rep.violations.push_back("(1-tau)^" + std::to_string(d - 1) +
                                                 "(1-s) at n=" + std::to_string(n) + " branch " +
                                                 std::to_string(br) + " not divisible");
                    }
                }
            }
    return rep;
}

namespace {
// exponent vectors of homogeneous degree d (optionally d-free)
void monomials_of_degree(int nvars, long d, bool no_delta, std::vector<Expo>& out) {
    Expo e(nvars, 0);
    int last = no_delta ? nvars - 1 : nvars;
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == last - 1) {
            e[i] = (uint32_t)left;
            out.push_back(e);
            e[i] = 0;
            return;
        }
        for (long v = 0; v <= left; ++v) {
            e[i] = (uint32_t)v;
            rec(i + 1, left - v);
        }
        e[i] = 0;
    };
    if (last == 0) throw MathError("no variables");
    rec(0, d);
}
}  // namespace

const SchubertClass& Gkm::schubert_class(const std::vector<int>& J, const AffineElement& x,
                                         long long window) const {
    auto key = std::make_tuple(J, x, window);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    for (int gi : J)
        if (!aw_->is_positive(aw_->linear_apply(x, aw_->simple_gens()[gi].coroot)))
            throw ConfigError("schubert_class: x is not J-minimal");
    long long lx = aw_->length(x);
    if (lx > window) throw ConfigError("schubert_class: length of x exceeds window");

    SchubertClass cls;
    cls.x = x;
    cls.body.J = J;
    cls.body.window = window;
    int nv = aw_->nvars();

    auto reps = aw_->coset_min_reps(J, window);
    auto gammas = reflections_for_window(window, J);

    // diagonal: product over left inversions of x
    cls.diag_scalar = Rat(1);
    AffineElement xinv = aw_->inverse(x);
    long long inv_count = 0;
    PolyForm diag = PolyForm::constant(nv, Rat(1));
    for (auto& g : gammas) {
        if (aw_->is_positive(aw_->linear_apply(xinv, g))) continue;
        ++inv_count;
        Rat unit;
        PolyForm nf = aw_->linear_form(g).normalized_linear(&unit);
        cls.diag_scalar *= unit;
        bool merged = false;
        for (auto& [f, k] : cls.diag_factors)
            if (f == nf) {
                ++k;
                merged = true;
            }
        if (!merged) cls.diag_factors.push_back({nf, 1});
        diag = diag * aw_->linear_form(g);
    }
    if (inv_count != lx)
        throw MathError("schubert_class: inversion count mismatch (level bound too small?)");

    std::vector<Expo> mono;
    monomials_of_degree(nv, lx, aw_->finite_mode(), mono);

    for (auto& y : reps) {
        if (y == x) {
            cls.body.values[y] = LocalizedElem(diag);
            continue;
        }
        if (!aw_->bruhat_leq(x, y)) {
            cls.body.values[y] = LocalizedElem::zero(nv);
            continue;
        }
        // solve for the degree-l(x) homogeneous value from the downward edges
        long long ly = aw_->length(y);
        std::vector<std::pair<PolyForm, PolyForm>> constraints;  // (form, known value)
        for (auto& g : gammas) {
            AffineElement t = aw_->mult(aw_->reflection_of(g), y);
            AffineElement z = aw_->coset_minimize(t, J);
            if (z == y || aw_->length(z) >= ly) continue;
            auto zt = cls.body.values.find(z);
            if (zt == cls.body.values.end())
                throw MathError("schubert_class: missing shorter representative");
            constraints.push_back({aw_->linear_form(g), zt->second.num()});
        }
        if (constraints.empty())
            throw MathError("schubert_class: no edge constraints at " + aw_->el_str(y));
        std::vector<std::vector<Rat>> A;
        std::vector<Rat> b;
        for (auto& [form, known] : constraints) {
            std::map<Expo, size_t> rows;  // per-constraint equation rows
            auto row_of = [&](const Expo& e) -> size_t {
                auto f = rows.find(e);
                if (f != rows.end()) return f->second;
                size_t r = A.size();
                rows[e] = r;
                A.push_back(std::vector<Rat>(mono.size(), Rat(0)));
                b.push_back(Rat(0));
                return r;
            };
            for (size_t mi = 0; mi < mono.size(); ++mi) {
                PolyForm xm(nv);
                xm.set_coeff(mono[mi], Rat(1));
                PolyForm red = xm.reduce_mod_linear(form);
                for (auto& [e, c] : red.terms()) A[row_of(e)][mi] = c;
            }
            PolyForm kred = known.reduce_mod_linear(form);
            for (auto& [e, c] : kred.terms()) b[row_of(e)] = c;
        }
        std::string status;
        auto sol = solve_linear(A, b, &status);
        if (!sol)
            throw MathError("schubert_class: characterization " + status + " at point " +
                            aw_->el_str(y) + " for x = " + aw_->el_str(x));
        PolyForm v(nv);
        for (size_t mi = 0; mi < mono.size(); ++mi) v.set_coeff(mono[mi], (*sol)[mi]);
        cls.body.values[y] = LocalizedElem(v);
    }
    auto [pos, ok] = cache_.emplace(key, std::move(cls));
    (void)ok;
    return pos->second;
}

Gkm::Expansion Gkm::expand_in_schubert(const GkmFunction& f, const std::vector<int>& J,
                                       CoeffRing ring, const PolyForm* local_form) const {
    Expansion out;
    std::map<AffineElement, LocalizedElem> rest;
    for (auto& [y, v] : f.values)
        if (!v.is_zero()) rest[y] = v;
    while (!rest.empty()) {
        // Bruhat-minimal support point, first in canonical order among minima
        const AffineElement* pick = nullptr;
        for (auto& [y, v] : rest) {
            bool minimal = true;
            for (auto& [z, w] : rest)
                if (!(z == y) && aw_->bruhat_leq(z, y)) {
                    minimal = false;
                    break;
                }
            if (minimal) {
                pick = &y;
                break;
            }
        }
        if (!pick) throw MathError("expand: no minimal support point");
        AffineElement x = *pick;
        const SchubertClass& cls = schubert_class(J, x, f.window);
        LocalizedElem c = rest.at(x).div_factored(cls.diag_scalar, cls.diag_factors);
        bool in_ring = ring == CoeffRing::polynomial
                           ? c.is_polynomial()
                           : c.in_localization(*local_form);
        if (!in_ring) {
            out.ok = false;
            out.witness = aw_->el_str(x);
            return out;
        }
        out.coeffs[x] = c;
        for (auto& [y, v] : cls.body.values) {
            auto it = rest.find(y);
            LocalizedElem nv = (it == rest.end() ? LocalizedElem::zero(c.nvars()) : it->second) -
                               c * v;
            if (nv.is_zero())
                rest.erase(y);
            else
                rest[y] = nv;
        }
        if (rest.count(x))
            throw MathError("expand: support did not shrink at " + aw_->el_str(x));
    }
    return out;
}

GkmFunction Gkm::evaluate_expansion(const std::map<AffineElement, LocalizedElem>& coeffs,
                                    const std::vector<int>& J, long long window) const {
    GkmFunction f;
    f.J = J;
    f.window = window;
    for (auto& y : aw_->coset_min_reps(J, window)) f.values[y] = LocalizedElem::zero(aw_->nvars());
    for (auto& [x, c] : coeffs) {
        const SchubertClass& cls = schubert_class(J, x, window);
        for (auto& [y, v] : cls.body.values) f.values[y] = f.values[y] + c * v;
    }
    return f;
}

GkmFunction Gkm::product(const GkmFunction& a, const GkmFunction& b) const {
    if (a.J != b.J || a.window != b.window) throw MathError("product: window/J mismatch");
    GkmFunction r;
    r.J = a.J;
    r.window = a.window;
    r.small_torus = a.small_torus && b.small_torus;
    for (auto& [y, v] : a.values) r.values[y] = v * b.values.at(y);
    return r;
}

std::string Gkm::dot_export(const GkmFunction& f) const {
    std::ostringstream os;
    os << "graph gkm {\n";
    std::map<AffineElement, int> id;
    int k = 0;
    for (auto& [y, v] : f.values) {
        id[y] = k;
        os << "  n" << k << " [label=\"" << aw_->el_str(y) << "\\n" << v.str() << "\"];\n";
        ++k;
    }
    auto gammas = reflections_for_window(f.window, f.J);
    for (auto& [y, v] : f.values)
        for (auto& g : gammas) {
            AffineElement z = aw_->coset_minimize(aw_->mult(aw_->reflection_of(g), y), f.J);
            if (!(y < z) || !f.has(z)) continue;
            os << "  n" << id.at(y) << " -- n" << id.at(z) << " [label=\""
               << aw_->linear_form(g).str() << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

// ---- SL2 model ----------------------------------------------------------------

AffineElement sl2_model_element(const AffineWeyl& aw, long long n, int branch) {
    const RootDatum& rd = aw.datum();
    if (rd.rank() != 1) throw ConfigError("sl2 model needs a rank-1 datum");
    Weight alpha_w = rd.root_to_weight(rd.simple_root(0));
    // model label tau_{n l alpha} corresponds to the group translation by -n l alpha
    AffineElement t = aw.translation(Weight{vec_scale(-n * rd.l(), alpha_w.fw)});
    if (branch == 0) return t;
    return aw.mult(t, aw.reflection_of(AffineCoroot{rd.simple_coroot(0), 0}));
}

SmallTorusOrbit sl2_class(const AffineWeyl& aw, Sl2ClassKind kind, long long N) {
    const RootDatum& rd = aw.datum();
    if (rd.rank() != 1) throw ConfigError("sl2_class needs a rank-1 datum");
    SmallTorusOrbit o;
    o.n_min = -N;
    o.n_max = N;
    o.alpha_form = aw.root_form(rd.simple_root(0));
    o.fl_like = kind != Sl2ClassKind::phi;
    for (long long n = -N; n <= N; ++n) {
        switch (kind) {
            case Sl2ClassKind::psi:
                o.values[{n, 0}] = LocalizedElem(o.alpha_form * to_rat(n));
                o.values[{n, 1}] = LocalizedElem(o.alpha_form * to_rat(n - 1));
                break;
            case Sl2ClassKind::phi_prime:
                o.values[{n, 0}] = LocalizedElem(o.alpha_form * to_rat(n));
                o.values[{n, 1}] = LocalizedElem(o.alpha_form * to_rat(n));
                break;
            case Sl2ClassKind::phi:
                o.values[{n, 0}] = LocalizedElem(o.alpha_form * to_rat(n));
                break;
        }
    }
    return o;
}

// ---- atlases ------------------------------------------------------------------

ZetaAtlas atlas_zeta(const AffineWeyl& aw, const Jantzen& jz, const std::vector<Weight>& window,
                     long long length_bound) {
    ZetaAtlas atlas;
    std::set<Weight> todo(window.begin(), window.end());
    std::map<Weight, std::vector<Weight>> blocks;  // omega -> members
    for (auto& w : window) blocks[jz.block_rep(w).omega].push_back(w);
    for (auto& [omega, members] : blocks) {
        Weight base = jz.antidominant_rep(omega);
        auto st = aw.stabilizer_dot_any(base);
        auto reps = aw.coset_min_reps(st.simple_J, length_bound);
        std::set<Weight> left(members.begin(), members.end());
        for (auto& r : reps) {
            Weight w = aw.dot_apply(r, base);
            if (left.count(w) && !atlas.points.count(w)) {
                atlas.points[w] = ZetaAtlas::Entry{omega, base, r};
                left.erase(w);
            }
        }
        if (!left.empty())
            throw ConfigError("atlas_zeta: length bound " + std::to_string(length_bound) +
                              " too small to reach the whole window");
    }
    return atlas;
}

SubtorusAtlas atlas_subtorus(const AffineWeyl& aw, const Root& alpha,
                             const std::vector<Weight>& window) {
    const RootDatum& rd = aw.datum();
    const PosRoot* pr = rd.find_pos_root(alpha);
    if (!pr) throw ConfigError("atlas_subtorus: alpha must be a positive root");
    long long L = rd.l();
    Weight alpha_w = rd.root_to_weight(alpha);
    SubtorusAtlas atlas;
    atlas.alpha = alpha;
    std::map<Weight, int> orbit_of;
    for (auto& lam : window) {
        long long c = rd.pairing(Weight{vec_add(lam.fw, rd.rho().fw)}, pr->coroot);
        long long r2 = posmod(c, 2 * L);
        SubtorusAtlas::Entry e;
        Weight omega_star{Vec{}};
        bool fl = (c % L) != 0;
        if (!fl || r2 < L) {
            e.branch = 0;
            e.n = (c - r2) / (2 * L);
            omega_star = Weight{vec_sub(lam.fw, vec_scale(L * e.n, alpha_w.fw))};
        } else {
            e.branch = 1;
            long long c0 = 2 * L - r2;
            e.n = (c + c0) / (2 * L);
            Weight base{vec_sub(lam.fw, vec_scale(L * e.n, alpha_w.fw))};
            // omega* = s_alpha . base
            long long cb = rd.pairing(Weight{vec_add(base.fw, rd.rho().fw)}, pr->coroot);
            omega_star = Weight{vec_sub(base.fw, vec_scale(cb, alpha_w.fw))};
        }
        auto it = orbit_of.find(omega_star);
        if (it == orbit_of.end()) {
            it = orbit_of.insert({omega_star, (int)atlas.orbits.size()}).first;
            atlas.orbits.push_back(SubtorusAtlas::Orbit{fl, omega_star});
        }
        if (atlas.orbits[it->second].fl_like != fl)
            throw MathError("atlas_subtorus: inconsistent orbit type");
        e.orbit = it->second;
        atlas.points[lam] = e;
    }
    return atlas;
}

std::vector<Weight> weight_box(const RootDatum& rd, long long box) {
    std::vector<Weight> out;
    Vec cur(rd.rank(), -box);
    while (true) {
        out.push_back(Weight{cur});
        int i = 0;
        while (i < rd.rank() && cur[i] == box) cur[i++] = -box;
        if (i == rd.rank()) break;
        ++cur[i];
    }
    return out;
}

}  // namespace lweyl
