#include "lweyl/center.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace lweyl {

namespace {

// scalar * prod num / prod den, all factors normalized linear forms
struct Factored {
    Rat s = Rat(1);
    std::vector<std::pair<PolyForm, int>> num, den;

    LocalizedElem to_localized(int nvars) const {
        PolyForm p = PolyForm::constant(nvars, s);
        for (auto& [f, k] : num) p = p * f.pow((unsigned)k);
        return LocalizedElem(p, den);
    }
    Factored mult(const Factored& o) const {
        Factored r = *this;
        r.s *= o.s;
        for (auto& f : o.num) r.num.push_back(f);
        for (auto& f : o.den) r.den.push_back(f);
        return r;
    }
    Factored twist(const AffineWeyl& aw, const AffineElement& g) const {
        Factored r;
        r.s = s;
        for (auto& [f, k] : num) {
            Rat u;
            PolyForm nf = aw.weyl_act_poly(g, f).normalized_linear(&u);
            r.num.push_back({nf, k});
            for (int i = 0; i < k; ++i) r.s *= u;
        }
        for (auto& [f, k] : den) {
            Rat u;
            PolyForm nf = aw.weyl_act_poly(g, f).normalized_linear(&u);
            r.den.push_back({nf, k});
            for (int i = 0; i < k; ++i) r.s /= u;
        }
        return r;
    }
};

LocalizedElem div_by_factored(const LocalizedElem& v, const Factored& f) {
    LocalizedElem r = v;
    for (auto& [g, k] : f.den)
        for (int i = 0; i < k; ++i) r = r * LocalizedElem(g);
    return r.div_factored(f.s, f.num);
}

}  // namespace

QRatFunc to_qratfunc(const LocalizedElem& v, const PolyForm& alpha_form) {
    PolyForm af = alpha_form.normalized_linear();
    auto poly_part = [&](PolyForm p) {
        QPoly out;
        long j = 0;
        while (!p.is_zero()) {
            PolyForm r = p.reduce_mod_linear(af);
            if (!r.is_constant())
                throw MathError("to_qratfunc: value not univariate in the localization form: " +
                                p.str());
            out.set((size_t)j, r.constant_term());
            auto q = (p - r).divide_exact(af);
            if (!q) throw MathError("to_qratfunc: division failed");
            p = *q;
            ++j;
        }
        return out;
    };
    QPoly num = poly_part(v.num());
    QPoly den(Rat(1));
    for (auto& [f, k] : v.den()) {
        if (!(f == af))
            throw MathError("to_qratfunc: denominator prime " + f.str() + " is not the form");
        for (int i = 0; i < k; ++i) den = den * QPoly::monomial(Rat(1), 1);
    }
    return QRatFunc(num, den);
}

// ---------------------------------------------------------------------------

GkmReport Center::check_S(const CenterFunction& f) const {
    GkmReport rep;
    const RootDatum& rd = aw_->datum();
    for (auto& [w, v] : f.values) {
        if (!v.is_polynomial()) {
            rep.ok = false;
            rep.violations.push_back("value at " + vec_str(w.fw) + " not polynomial");
        } else if (!(v.num().specialize_delta_zero() == v.num())) {
            rep.ok = false;
            rep.violations.push_back("value at " + vec_str(w.fw) + " involves d");
        }
    }
    if (!rep.ok) return rep;
    for (auto& pr : rd.positive_roots()) {
        auto orbits = subtorus_orbits(f, pr.root);
        for (auto& o : orbits) {
            auto r = Gkm::check_small(o);
            rep.skipped += r.skipped;
            if (!r.ok) {
                rep.ok = false;
                for (auto& viol : r.violations)
                    rep.violations.push_back("alpha=" + vec_str(pr.root.rc) + ": " + viol);
            }
        }
    }
    return rep;
}

std::vector<SmallTorusOrbit> Center::subtorus_orbits(const CenterFunction& f,
                                                     const Root& alpha) const {
    std::vector<Weight> window;
    for (auto& [w, v] : f.values) window.push_back(w);
    auto atlas = atlas_subtorus(*aw_, alpha, window);
    std::vector<SmallTorusOrbit> out(atlas.orbits.size());
    for (size_t i = 0; i < atlas.orbits.size(); ++i) {
        out[i].fl_like = atlas.orbits[i].fl_like;
        out[i].alpha_form = aw_->root_form(alpha);
        out[i].n_min = 1;
        out[i].n_max = 0;
    }
    for (auto& [w, e] : atlas.points) {
        auto& o = out[e.orbit];
        if (o.n_min > o.n_max) {
            o.n_min = o.n_max = e.n;
        } else {
            o.n_min = std::min(o.n_min, e.n);
            o.n_max = std::max(o.n_max, e.n);
        }
        o.values[{e.n, e.branch}] = f.values.at(w);
    }
    return out;
}

namespace {
long long weight_edge_level_bound(const RootDatum& rd, const CenterFunction& f) {
    long long maxc = 0;
    for (auto& [w, v] : f.values) {
        Weight sh{vec_add(w.fw, rd.rho().fw)};
        for (auto& pr : rd.positive_roots())
            maxc = std::max(maxc, std::abs(rd.pairing(sh, pr.coroot)));
    }
    return 2 * maxc + rd.l();
}
}  // namespace

GkmReport Center::check_Shat(const CenterFunction& f) const {
    GkmReport rep;
    const RootDatum& rd = aw_->datum();
    for (auto& [w, v] : f.values)
        if (!v.is_polynomial()) {
            rep.ok = false;
            rep.violations.push_back("value at " + vec_str(w.fw) + " not in Shat (denominator)");
        }
    if (!rep.ok) return rep;
    auto gammas = aw_->positive_coroots_up_to(weight_edge_level_bound(rd, f));
    for (auto& [w, v] : f.values) {
        for (auto& g : gammas) {
            Weight mu = aw_->dot_apply(aw_->reflection_of(g), w);
            if (mu == w) continue;
            auto it = f.values.find(mu);
            if (it == f.values.end()) continue;
            if (!(w < mu)) continue;
            LocalizedElem diff = v - it->second;
            if (diff.is_zero()) continue;
            if (diff.valuation_at(aw_->linear_form(g)) < 1) {
                rep.ok = false;
                rep.violations.push_back("edge " + vec_str(w.fw) + " -- " + vec_str(mu.fw) +
                                         " fails divisibility by " + aw_->linear_form(g).str());
            }
        }
    }
    return rep;
}

GkmReport Center::check_Shat_localized(const CenterFunction& f) const {
    GkmReport rep;
    const RootDatum& rd = aw_->datum();
    auto gammas = aw_->positive_coroots_up_to(weight_edge_level_bound(rd, f));
    for (auto& g : gammas) {
        PolyForm form = aw_->linear_form(g);
        for (auto& [w, v] : f.values) {
            Weight mu = aw_->dot_apply(aw_->reflection_of(g), w);
            if (mu == w || !(w < mu)) continue;
            auto it = f.values.find(mu);
            if (it == f.values.end()) continue;
            if (!v.in_localization(form) || !it->second.in_localization(form)) {
                rep.ok = false;
                rep.violations.push_back("value not in Shat_gamma for gamma = " + form.str());
                continue;
            }
            LocalizedElem diff = v - it->second;
            if (diff.is_zero()) continue;
            if (diff.valuation_at(form) < 1) {
                rep.ok = false;
                rep.violations.push_back("edge " + vec_str(w.fw) + " -- " + vec_str(mu.fw) +
                                         " fails localized divisibility by " + form.str());
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

EndLattice Center::end_lattice_singular(long long n, long long m, const Root& alpha) const {
    if (n > m) throw ConfigError("end_lattice: need n <= m");
    EndLattice lat;
    lat.n = n;
    lat.m = m;
    lat.kind = Jantzen::BlockKind::singular;
    lat.alpha = alpha;
    lat.omega = Weight{vec_neg(aw_->datum().rho().fw)};
    PolyForm af = aw_->root_form(alpha);
    int nv = af.nvars();
    size_t len = (size_t)(m - n + 1);
    for (long long j = 0; j <= m - n; ++j) {
        std::vector<LocalizedElem> t(len);
        for (long long k = n; k <= m; ++k) {
            PolyForm v = PolyForm::constant(nv, Rat(1));
            for (long long i = 0; i < j; ++i) v = v * (af * to_rat(k - n - i));
            t[(size_t)(k - n)] = LocalizedElem(v);
        }
        lat.basis.push_back(std::move(t));
        lat.labels.push_back("x~_" + std::to_string(j));
    }
    return lat;
}

EndLattice Center::end_lattice_regular(long long n, long long m, const Root& alpha,
                                       const Weight& omega) const {
    if (n > m) throw ConfigError("end_lattice: need n <= m");
    const PosRoot* pr = aw_->datum().find_pos_root(alpha);
    if (!pr) throw ConfigError("end_lattice: alpha must be a positive root");
    long long c = aw_->datum().pairing(Weight{vec_add(omega.fw, aw_->datum().rho().fw)},
                                       pr->coroot);
    if (c <= 0 || c >= aw_->datum().l())
        throw ConfigError("end_lattice_regular: need 0 < <omega+rho, alpha-check> < l");
    EndLattice lat;
    lat.n = n;
    lat.m = m;
    lat.kind = Jantzen::BlockKind::regular;
    lat.alpha = alpha;
    lat.omega = omega;
    PolyForm af = aw_->root_form(alpha);
    int nv = af.nvars();
    size_t len = (size_t)(2 * (m - n + 1));
    auto xj = [&](long long j, long long k) {  // x~_j value at flag step k
        PolyForm v = PolyForm::constant(nv, Rat(1));
        for (long long i = 0; i < j; ++i) v = v * (af * to_rat(k - n - i));
        return v;
    };
    auto slot = [&](long long idx) { return (size_t)(idx - (2 * n - 1)); };
    for (long long j = 0; j <= m - n; ++j) {
        std::vector<LocalizedElem> t(len), u(len);
        for (long long k = n; k <= m; ++k) {
            PolyForm x = xj(j, k);
            t[slot(2 * k)] = LocalizedElem(x);
            t[slot(2 * k - 1)] = LocalizedElem(x);
            u[slot(2 * k)] = LocalizedElem(x * af * to_rat(k));
            u[slot(2 * k - 1)] = LocalizedElem(x * af * to_rat(k - 1));
        }
        lat.basis.push_back(std::move(t));
        lat.labels.push_back("T'x~_" + std::to_string(j));
        lat.basis.push_back(std::move(u));
        lat.labels.push_back("psi.T'x~_" + std::to_string(j));
    }
    return lat;
}

GkmReport Center::end_lattice_sgkm_check(const EndLattice& lat) const {
    GkmReport rep;
    for (auto& t : lat.basis) {
        SmallTorusOrbit o;
        o.alpha_form = aw_->root_form(lat.alpha);
        o.fl_like = lat.kind == Jantzen::BlockKind::regular;
        o.n_min = lat.n;
        o.n_max = lat.m;
        if (lat.kind == Jantzen::BlockKind::singular) {
            for (long long k = lat.n; k <= lat.m; ++k)
                o.values[{k, 0}] = t[(size_t)(k - lat.n)];
        } else {
            for (long long k = lat.n; k <= lat.m; ++k) {
                o.values[{k, 0}] = t[(size_t)(2 * k - (2 * lat.n - 1))];
                o.values[{k, 1}] = t[(size_t)(2 * k - 1 - (2 * lat.n - 1))];
            }
        }
        auto r = Gkm::check_small(o);
        rep.skipped += r.skipped;
        if (!r.ok) {
            rep.ok = false;
            for (auto& v : r.violations) rep.violations.push_back(v);
        }
    }
    return rep;
}

std::vector<std::vector<LocalizedElem>> Center::sgkm_window_lattice(Jantzen::BlockKind kind,
                                                                    long long n,
                                                                    long long m) const {
    if (aw_->datum().rank() != 1)
        throw ConfigError("sgkm_window_lattice: rank-1 datum required");
    long long K = std::max(std::abs(n), std::abs(m)) + 1;
    long long window = 2 * K + 2;
    std::vector<int> J = kind == Jantzen::BlockKind::singular ? std::vector<int>{0}
                                                              : std::vector<int>{};
    std::vector<std::vector<LocalizedElem>> out;
    for (auto& x : aw_->coset_min_reps(J, window)) {
        const SchubertClass& cls = gk_->schubert_class(J, x, window);
        std::vector<LocalizedElem> t;
        bool nonzero = false;
        if (kind == Jantzen::BlockKind::singular) {
            for (long long k = n; k <= m; ++k) {
                AffineElement p = aw_->coset_minimize(sl2_model_element(*aw_, k, 0), J);
                LocalizedElem v = cls.body.value(p).specialize_delta_zero();
                nonzero |= !v.is_zero();
                t.push_back(v);
            }
        } else {
            for (long long idx = 2 * n - 1; idx <= 2 * m; ++idx) {
                long long k = idx % 2 == 0 ? idx / 2 : (idx + 1) / 2;
                int br = idx % 2 == 0 ? 0 : 1;
                AffineElement p = sl2_model_element(*aw_, k, br);
                LocalizedElem v = cls.body.value(p).specialize_delta_zero();
                nonzero |= !v.is_zero();
                t.push_back(v);
            }
        }
        if (nonzero) out.push_back(std::move(t));
    }
    return out;
}

bool Center::lattice_contains(const std::vector<std::vector<LocalizedElem>>& big,
                              const std::vector<std::vector<LocalizedElem>>& small,
                              const PolyForm& alpha_form) const {
    std::vector<std::vector<QRatFunc>> rows;
    for (auto& r : big) {
        std::vector<QRatFunc> q;
        for (auto& v : r) q.push_back(to_qratfunc(v, alpha_form));
        rows.push_back(std::move(q));
    }
    for (auto& t : small) {
        std::vector<QRatFunc> q;
        for (auto& v : t) q.push_back(to_qratfunc(v, alpha_form));
        if (!in_dvr_span(rows, q)) return false;
    }
    return true;
}

bool Center::lattice_equal(const std::vector<std::vector<LocalizedElem>>& a,
                           const std::vector<std::vector<LocalizedElem>>& b,
                           const PolyForm& alpha_form) const {
    return lattice_contains(a, b, alpha_form) && lattice_contains(b, a, alpha_form);
}

size_t Center::lattice_rank(const std::vector<std::vector<LocalizedElem>>& a,
                            const PolyForm& alpha_form) const {
    std::vector<std::vector<QRatFunc>> rows;
    for (auto& r : a) {
        std::vector<QRatFunc> q;
        for (auto& v : r) q.push_back(to_qratfunc(v, alpha_form));
        rows.push_back(std::move(q));
    }
    return qrf_rank(rows);
}

bool Center::generates_as_algebra(const std::vector<std::vector<LocalizedElem>>& gens,
                                  const std::vector<std::vector<LocalizedElem>>& full,
                                  const PolyForm& alpha_form, int max_power) const {
    // close {1} under multiplication by the generators, up to max_power rounds
    size_t len = full.empty() ? 0 : full[0].size();
    int nv = alpha_form.nvars();
    std::vector<std::vector<LocalizedElem>> span;
    std::vector<LocalizedElem> one(len, LocalizedElem::one(nv));
    span.push_back(one);
    std::vector<std::vector<LocalizedElem>> frontier{one};
    for (int round = 0; round < max_power; ++round) {
        std::vector<std::vector<LocalizedElem>> next;
        for (auto& f : frontier)
            for (auto& g : gens) {
                std::vector<LocalizedElem> prod(len);
                for (size_t i = 0; i < len; ++i) prod[i] = f[i] * g[i];
                next.push_back(std::move(prod));
            }
        for (auto& t : next) span.push_back(t);
        frontier = std::move(next);
    }
    return lattice_contains(span, full, alpha_form) && lattice_contains(full, span, alpha_form);
}

// ---------------------------------------------------------------------------

AffineWeyl::Stabilizer Center::parabolic_stabilizer(const Weight& base) const {
    auto st = aw_->stabilizer_dot_any(base);
    // the base must sit in the fundamental domain of the simple system: the
    // subgroup generated by the fixing simple reflections is the whole stabilizer
    std::set<AffineElement> sub{aw_->identity()};
    std::deque<AffineElement> bfs{aw_->identity()};
    while (!bfs.empty()) {
        AffineElement cur = bfs.front();
        bfs.pop_front();
        for (int gi : st.simple_J) {
            AffineElement nx = aw_->mult(cur, aw_->gen_element(gi));
            if (!sub.count(nx)) {
                sub.insert(nx);
                bfs.push_back(nx);
            }
        }
    }
    if (sub.size() != st.elements.size())
        throw MathError("stabilizer of " + vec_str(base.fw) + " is not standard parabolic");
    return st;
}

LocalizedElem Center::act_L_inverse(const AffineElement& g,
                                    const AffineWeyl::Stabilizer& st) const {
    std::vector<std::pair<PolyForm, int>> den;
    for (auto& gamma : st.pos_coroots)
        den.push_back({aw_->weyl_act_poly(g, aw_->linear_form(gamma)), 1});
    return LocalizedElem(PolyForm::constant(aw_->nvars(), Rat(1)), den);
}

TranslationMatrix Center::h_matrix(const Weight& omega, const AffineElement& z,
                                   long long window) const {
    Weight base = jz_->antidominant_rep(omega);
    auto st = parabolic_stabilizer(base);
    TranslationMatrix H;
    H.omega = omega;
    H.base = base;
    H.z = z;
    H.order = st.elements;
    size_t nn = st.elements.size();
    H.entries.assign(nn, std::vector<LocalizedElem>(nn));
    for (size_t i = 0; i < nn; ++i) {
        AffineElement zx = aw_->mult(z, st.elements[i]);
        if (aw_->length(zx) > window)
            throw ConfigError("h_matrix: window too small for z*x");
        LocalizedElem linv = act_L_inverse(zx, st);
        for (size_t j = 0; j < nn; ++j) {
            const SchubertClass& cls = gk_->schubert_class({}, st.elements[j], window);
            H.entries[i][j] = linv * cls.body.value(zx);
        }
    }
    return H;
}

std::vector<IdentityLine> Center::h_identities(const Weight& omega, const AffineElement& z,
                                               long long window) const {
    std::vector<IdentityLine> out;
    Weight base = jz_->antidominant_rep(omega);
    auto st = parabolic_stabilizer(base);
    size_t nn = st.elements.size();
    long long maxw = 0;
    for (auto& x : st.elements) maxw = std::max(maxw, aw_->length(x));
    // one shared window for every matrix in this run (including the congruence
    // family), so all Schubert classes are solved once
    Weight zo0 = aw_->dot_apply(z, base);
    long long maxc0 = 0;
    for (auto& pr : aw_->datum().positive_roots())
        maxc0 = std::max(maxc0, std::abs(aw_->datum().pairing(
                                    Weight{vec_add(zo0.fw, aw_->datum().rho().fw)}, pr.coroot)));
    long long win = std::max(window, aw_->length(z) + maxw);
    for (auto& g : aw_->positive_coroots_up_to(maxc0 + aw_->datum().l()))
        win = std::max(win, aw_->length(aw_->mult(aw_->reflection_of(g), z)) + maxw);
    win = ((win + 3) / 4) * 4;

    TranslationMatrix H1 = h_matrix(omega, aw_->identity(), win);
    TranslationMatrix Hz = h_matrix(omega, z, win);

    // factored diagonal of H_1: x(L^{-1}) * xi^x(x)
    std::vector<Factored> diag(nn);
    for (size_t i = 0; i < nn; ++i) {
        const SchubertClass& cls = gk_->schubert_class({}, st.elements[i], win);
        Factored d;
        d.s = cls.diag_scalar;
        d.num = cls.diag_factors;
        for (auto& gamma : st.pos_coroots) {
            Rat u;
            PolyForm nf = aw_->weyl_act_poly(st.elements[i], aw_->linear_form(gamma))
                              .normalized_linear(&u);
            d.den.push_back({nf, 1});
            d.s /= u;
        }
        diag[i] = d;
    }

    // (ii) triangularity + diagonal shape + determinant support
    {
        IdentityLine line{"H_1 triangular (entry(x,x') = 0 unless x >= x')", true, ""};
        for (size_t i = 0; i < nn; ++i)
            for (size_t j = 0; j < nn; ++j) {
                if (aw_->bruhat_leq(st.elements[j], st.elements[i])) continue;
                if (!H1.entries[i][j].is_zero()) {
                    line.ok = false;
                    line.witness = "entry (" + aw_->el_str(st.elements[i]) + "," +
                                   aw_->el_str(st.elements[j]) + ")";
                }
            }
        for (size_t i = 0; i < nn; ++i) {
            if (H1.entries[i][i].is_zero()) {
                line.ok = false;
                line.witness = "zero diagonal at " + aw_->el_str(st.elements[i]);
            }
            if (!(H1.entries[i][i] == diag[i].to_localized(aw_->nvars()))) {
                line.ok = false;
                line.witness = "diagonal mismatch at " + aw_->el_str(st.elements[i]);
            }
        }
        out.push_back(line);
    }
    {
        IdentityLine line{"det H_1 supported on L_omega factors, invertible after localization",
                          true, ""};
        Factored det;
        for (size_t i = 0; i < nn; ++i) det = det.mult(diag[i]);
        // every num/den factor must be a W_{l,omega}-image of a stabilizer coroot form
        std::set<PolyForm> allowed;
        for (auto& x : st.elements)
            for (auto& gamma : st.pos_coroots)
                allowed.insert(
                    aw_->weyl_act_poly(x, aw_->linear_form(gamma)).normalized_linear());
        for (auto& side : {det.num, det.den})
            for (auto& [f, k] : side)
                if (!allowed.count(f)) {
                    line.ok = false;
                    line.witness = "stray factor " + f.str();
                }
        if (det.s == 0) line.ok = false;
        out.push_back(line);
    }
    // (i) factorization H_z = z(H_1) H'_z with H'_z in GL(Shat)
    {
        IdentityLine line{"H'_z = z(H_1)^{-1} H_z has polynomial entries", true, ""};
        // z-twisted H_1 and its factored diagonal
        std::vector<std::vector<LocalizedElem>> zH1(nn, std::vector<LocalizedElem>(nn));
        for (size_t i = 0; i < nn; ++i)
            for (size_t j = 0; j < nn; ++j)
                zH1[i][j] = aw_->weyl_act_localized(z, H1.entries[i][j]);
        std::vector<Factored> zdiag(nn);
        for (size_t i = 0; i < nn; ++i) zdiag[i] = diag[i].twist(*aw_, z);
        // forward substitution: zH1 * Hp = Hz (zH1 lower-triangular)
        std::vector<std::vector<LocalizedElem>> Hp(nn, std::vector<LocalizedElem>(nn));
        for (size_t j = 0; j < nn; ++j)
            for (size_t i = 0; i < nn; ++i) {
                LocalizedElem acc = Hz.entries[i][j];
                for (size_t k = 0; k < i; ++k) acc = acc - zH1[i][k] * Hp[k][j];
                Hp[i][j] = div_by_factored(acc, zdiag[i]);
            }
        for (size_t i = 0; i < nn && line.ok; ++i)
            for (size_t j = 0; j < nn && line.ok; ++j)
                if (!Hp[i][j].is_polynomial()) {
                    line.ok = false;
                    line.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + Hp[i][j].str();
                }
        out.push_back(line);

        IdentityLine dline{"det H'_z is a unit of Shat", true, ""};
        // det H_z = prod_i zx_i(L^{-1}) * det(xi^{x_j}(z x_i)); divide by det z(H_1)
        std::vector<std::vector<PolyForm>> X(nn, std::vector<PolyForm>(nn));
        Factored cfac;
        for (size_t i = 0; i < nn; ++i) {
            AffineElement zx = aw_->mult(z, st.elements[i]);
            LocalizedElem linv = act_L_inverse(zx, st);
            for (auto& [f, k] : linv.den()) {
                cfac.den.push_back({f, k});
            }
            cfac.s *= linv.num().constant_term();
            for (size_t j = 0; j < nn; ++j) {
                const SchubertClass& cls = gk_->schubert_class({}, st.elements[j], win);
                LocalizedElem v = cls.body.value(zx);
                X[i][j] = v.num();  // classes are polynomial-valued
            }
        }
        Factored zdet;
        for (size_t i = 0; i < nn; ++i) zdet = zdet.mult(zdiag[i]);
        LocalizedElem detHz =
            LocalizedElem(poly_det(X)).div_factored(Rat(1) / cfac.s, cfac.den);
        LocalizedElem det = div_by_factored(detHz, zdet);
        if (!det.is_polynomial() || det.num().constant_term() == 0) {
            dline.ok = false;
            dline.witness = "det = " + det.str();
        }
        out.push_back(dline);
    }
    // (iii) congruence H_{s_g z} == H_z mod form(g), for g raising z.omega
    {
        IdentityLine line{"H_{s_g z} == H_z mod g for raising reflections g", true, ""};
        Weight zo = aw_->dot_apply(z, base);
        int tested = 0;
        for (auto& g : aw_->positive_coroots_up_to(maxc0 + aw_->datum().l())) {
            AffineElement sg = aw_->reflection_of(g);
            Weight up = aw_->dot_apply(sg, zo);
            if (up == zo) continue;
            if (!aw_->datum().dominance_leq(zo, up)) continue;  // s_g raises z.omega
            AffineElement sz = aw_->mult(sg, z);
            TranslationMatrix Hs = h_matrix(omega, sz, win);
            PolyForm form = aw_->linear_form(g);
            for (size_t i = 0; i < nn; ++i)
                for (size_t j = 0; j < nn; ++j) {
                    LocalizedElem diff = Hs.entries[i][j] - Hz.entries[i][j];
                    if (diff.is_zero()) continue;
                    if (diff.valuation_at(form) < 1) {
                        line.ok = false;
                        line.witness = "gamma " + g.str() + " entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")";
                    }
                }
            ++tested;
        }
        if (tested == 0) {
            line.ok = false;
            line.witness = "no raising reflection found in the level window";
        }
        out.push_back(line);
    }
    return out;
}

GkmFunction Center::pushforward(const GkmFunction& psi, const Weight& omega) const {
    if (!psi.J.empty()) throw ConfigError("pushforward: psi must live on the full flag (J empty)");
    Weight base = jz_->antidominant_rep(omega);
    auto st = parabolic_stabilizer(base);
    long long maxw = 0;
    for (auto& x : st.elements) maxw = std::max(maxw, aw_->length(x));
    GkmFunction out;
    out.J = st.simple_J;
    out.window = psi.window - maxw;
    if (out.window < 0) throw ConfigError("pushforward: window too small");
    for (auto& u : aw_->coset_min_reps(st.simple_J, out.window)) {
        LocalizedElem acc = LocalizedElem::zero(aw_->nvars());
        for (auto& x : st.elements) {
            AffineElement ux = aw_->mult(u, x);
            Rat sign = (aw_->length(x) % 2) ? Rat(-1) : Rat(1);
            acc = acc + psi.value(ux) * sign;
        }
        // divide by u(L_omega)
        Factored L;
        for (auto& gamma : st.pos_coroots) {
            Rat unitr;
            PolyForm nf =
                aw_->weyl_act_poly(u, aw_->linear_form(gamma)).normalized_linear(&unitr);
            L.num.push_back({nf, 1});
            L.s *= unitr;
        }
        LocalizedElem v = div_by_factored(acc, L);
        if (!v.is_polynomial())
            throw MathError("pushforward: alternating sum failed to cancel at " +
                            aw_->el_str(u) + ": " + v.str());
        out.values[u] = v;
    }
    return out;
}

IdentityLine Center::pushforward_row_identity(const Weight& omega, const AffineElement& z,
                                              long long window) const {
    IdentityLine line{"(1..1) H_z equals the pushforward row pi'_*", true, ""};
    Weight base = jz_->antidominant_rep(omega);
    auto st = parabolic_stabilizer(base);
    size_t nn = st.elements.size();
    long long maxw = 0;
    for (auto& x : st.elements) maxw = std::max(maxw, aw_->length(x));
    long long win = std::max(window, aw_->length(z) + maxw);
    TranslationMatrix Hz = h_matrix(omega, z, win);
    // z(L_omega) factored
    Factored L;
    for (auto& gamma : st.pos_coroots) {
        Rat unitr;
        PolyForm nf = aw_->weyl_act_poly(z, aw_->linear_form(gamma)).normalized_linear(&unitr);
        L.num.push_back({nf, 1});
        L.s *= unitr;
    }
    for (size_t j = 0; j < nn; ++j) {
        LocalizedElem colsum = LocalizedElem::zero(aw_->nvars());
        for (size_t i = 0; i < nn; ++i) colsum = colsum + Hz.entries[i][j];
        const SchubertClass& cls = gk_->schubert_class({}, st.elements[j], win);
        LocalizedElem alt = LocalizedElem::zero(aw_->nvars());
        for (auto& x : st.elements) {
            Rat sign = (aw_->length(x) % 2) ? Rat(-1) : Rat(1);
            alt = alt + cls.body.value(aw_->mult(z, x)) * sign;
        }
        LocalizedElem rhs = div_by_factored(alt, L);
        if (!(colsum == rhs)) {
            line.ok = false;
            line.witness = "column " + aw_->el_str(st.elements[j]);
        }
    }
    return line;
}

IdentityLine Center::module_action_identity(const GkmFunction& psi, const Weight& omega,
                                            const AffineElement& z) const {
    IdentityLine line{"H_z (psi_{x',x}(z)) == diag(psi(zx)) H_z", true, ""};
    auto pre = gk_->check_big(psi);
    if (!pre.ok) {
        line.ok = false;
        line.witness = "psi fails the GKM membership precondition";
        return line;
    }
    Weight base = jz_->antidominant_rep(omega);
    auto st = parabolic_stabilizer(base);
    size_t nn = st.elements.size();
    long long maxw = 0;
    for (auto& x : st.elements) maxw = std::max(maxw, aw_->length(x));
    long long win = psi.window;
    AffineElement u = aw_->coset_minimize(z, st.simple_J);
    if (aw_->length(u) + maxw > win) {
        line.ok = false;
        line.witness = "psi window too small for the coset of z";
        return line;
    }
    TranslationMatrix Hz = h_matrix(omega, z, win);
    // module coefficients at the coset of z: solve (xi^{x_j}(u x_i)) c = (psi*xi^x)(u x_i)
    std::vector<std::vector<PolyForm>> M(nn, std::vector<PolyForm>(nn));
    for (size_t i = 0; i < nn; ++i) {
        AffineElement ux = aw_->mult(u, st.elements[i]);
        for (size_t j = 0; j < nn; ++j)
            M[i][j] = gk_->schubert_class({}, st.elements[j], win).body.value(ux).num();
    }
    PolyForm detM = poly_det(M);
    if (detM.is_zero()) {
        line.ok = false;
        line.witness = "singular coset matrix";
        return line;
    }
    std::vector<std::vector<LocalizedElem>> coef(nn, std::vector<LocalizedElem>(nn));
    for (size_t xi = 0; xi < nn; ++xi) {
        std::vector<PolyForm> rhs(nn);
        for (size_t i = 0; i < nn; ++i) {
            AffineElement ux = aw_->mult(u, st.elements[i]);
            rhs[i] = (psi.value(ux) *
                      gk_->schubert_class({}, st.elements[xi], win).body.value(ux))
                         .num();
        }
        for (size_t j = 0; j < nn; ++j) {
            auto Mj = M;
            for (size_t i = 0; i < nn; ++i) Mj[i][j] = rhs[i];
            PolyForm dj = poly_det(Mj);
            auto q = dj.divide_exact(detM);
            if (!q) {
                line.ok = false;
                line.witness = "module coefficient psi_{" + std::to_string(xi) + "," +
                               std::to_string(j) + "} not polynomial";
                return line;
            }
            coef[xi][j] = LocalizedElem(*q);
        }
    }
    // P[i][j] = psi_{x_j, x_i}(z)
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = 0; j < nn; ++j) {
            // (H_z P)[i][j] = sum_k H[i][k] P[k][j] with P[k][j] = coef[x_j][x_k]
            LocalizedElem lhs = LocalizedElem::zero(aw_->nvars());
            for (size_t k = 0; k < nn; ++k) lhs = lhs + Hz.entries[i][k] * coef[j][k];
            AffineElement zx = aw_->mult(z, st.elements[i]);
            LocalizedElem rhs = psi.value(zx) * Hz.entries[i][j];
            if (!(lhs == rhs)) {
                line.ok = false;
                line.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return line;
            }
        }
    return line;
}

CenterFunction Center::transport_class(const ZetaAtlas& atlas, const Weight& omega,
                                       const AffineElement& x, long long class_window,
                                       bool small_torus) const {
    Weight base = jz_->antidominant_rep(omega);
    auto st = parabolic_stabilizer(base);
    const SchubertClass& cls = gk_->schubert_class(st.simple_J, x, class_window);
    CenterFunction f;
    f.ring = small_torus ? CenterFunction::Ring::S : CenterFunction::Ring::Shat;
    for (auto& [w, e] : atlas.points) {
        if (e.base == base) {
            LocalizedElem v = cls.body.value(e.coset);
            f.values[w] = small_torus ? v.specialize_delta_zero() : v;
        } else {
            f.values[w] = LocalizedElem::zero(aw_->nvars());
        }
    }
    return f;
}

}  // namespace lweyl
