// lweyl: exact combinatorics of l-dilated affine Weyl groups, Jantzen sums,
// GKM/Schubert calculus on fixed loci, and center/cohomology checks.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical identity failed
// (witness printed), 2 = usage or configuration error.

#include "lweyl/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace lweyl;

namespace {

struct Common {
    std::string type = "A1";
    long long l = 3;
    std::string format = "text";
    std::string config;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--type", c.type, "Cartan type (products allowed, e.g. A1, A2, A1xA1)");
    cmd->add_option("--l", c.l, "the odd dilation parameter l");
    cmd->add_option("--format", c.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
}

struct Session {
    RootDatum rd;
    AffineWeyl aw;
    Jantzen jz;
    Gkm gk;
    Center ct;
    explicit Session(const Common& c)
        : rd(RootDatum::build(c.type, c.l)), aw(rd), jz(aw), gk(aw), ct(aw, jz, gk) {}
};

AffineElement parse_element(const AffineWeyl& aw, const std::string& word) {
    // comma- or dot-separated generator tokens: s1..sn finite, s0 = first affine
    // generator (s0b, s0c... for further components); 'e' = identity
    AffineElement x = aw.identity();
    if (word.empty() || word == "e") return x;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        int gi = -1;
        if (tok[0] == 's') {
            std::string rest = tok.substr(1);
            if (rest == "0")
                gi = aw.datum().rank();
            else if (rest.size() == 2 && rest[0] == '0')
                gi = aw.datum().rank() + (rest[1] - 'a');
            else
                gi = std::stoi(rest) - 1;
        } else {
            gi = std::stoi(tok);
        }
        if (gi < 0 || gi >= (int)aw.simple_gens().size())
            throw ConfigError("unknown generator token '" + tok + "'");
        x = aw.mult(x, aw.gen_element(gi));
        tok.clear();
    };
    for (char ch : word) {
        if (ch == ',' || ch == '.' || ch == '*') {
            flush();
        } else {
            tok += ch;
        }
    }
    flush();
    return x;
}

Root parse_root(const RootDatum& rd, const std::string& s) {
    // either a simple-root index (1-based) or root coordinates 'c1,c2'
    if (s.find(',') == std::string::npos) {
        int i = std::stoi(s) - 1;
        if (i < 0 || i >= rd.rank()) throw ConfigError("bad simple root index");
        return rd.simple_root(i);
    }
    Weight w = parse_weight(s, rd.rank());
    return Root{w.fw};
}

int report_exit(const GkmReport& rep, const std::string& format, const std::string& label) {
    if (format == "json") {
        Json j = report_to_json(rep);
        j["check"] = label;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << label << ": " << rep.str() << "\n";
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lweyl: exact l-dilated affine Weyl / Jantzen / GKM / center toolkit"};
    app.require_subcommand(1);

    // ---- option state ----
    Common c;
    std::string lambda_s, mu_s, omega_s = "0", eta_s, x_s = "e", y_s = "e", z_s = "e";
    std::string alpha_s = "1", kind_s = "singular", psi_s = "1", dot_file, atlas_kind = "zeta";
    std::string ring_s = "S", violate_s;
    long long depth = 12, window = 6, box = 6, bound = 12, nn = 0, mm = 1, N = 5;
    bool do_row = false, compare_window = false, small = true;

    auto* roots = app.add_subcommand("roots", "build and print the root datum");
    add_common(roots, c);

    auto* xisc = app.add_subcommand("xi-sc", "enumerate the singular-type set Xi_sc");
    add_common(xisc, c);

    auto* orbit = app.add_subcommand("orbit", "block representative and linkage down-set");
    add_common(orbit, c);
    orbit->add_option("--lambda", lambda_s, "weight, fundamental coords")->required();
    orbit->add_option("--depth", depth, "height window depth");

    auto* linkage = app.add_subcommand("linkage", "linkage predicate with recursive cross-check");
    add_common(linkage, c);
    linkage->add_option("--lambda", lambda_s)->required();
    linkage->add_option("--mu", mu_s)->required();
    linkage->add_option("--depth", depth);

    auto* shap = app.add_subcommand("shapovalov", "Shapovalov factors of a weight space");
    add_common(shap, c);
    shap->add_option("--lambda", lambda_s)->required();
    shap->add_option("--eta", eta_s, "root-lattice element, simple-root coords")->required();

    auto* jcheck = app.add_subcommand("jantzen-check", "Jantzen sum formula, both routes");
    add_common(jcheck, c);
    jcheck->add_option("--lambda", lambda_s)->required();
    jcheck->add_option("--depth", depth);

    auto* scheck = app.add_subcommand("subgeneric-check", "single-root Jantzen sum formula");
    add_common(scheck, c);
    scheck->add_option("--lambda", lambda_s)->required();
    scheck->add_option("--alpha", alpha_s, "simple root index or root coords");
    scheck->add_option("--depth", depth);

    auto* schub = app.add_subcommand("schubert", "construct a Schubert class");
    add_common(schub, c);
    schub->add_option("--x", x_s, "reduced word, e.g. s1.s0")->required();
    schub->add_option("--j", y_s, "parabolic generators (word tokens), empty for the full flag")
        ->default_val("");
    schub->add_option("--window", window);
    schub->add_option("--dot", dot_file, "write the GKM graph in DOT format");

    auto* expand = app.add_subcommand("expand", "expand a product of classes in the basis");
    add_common(expand, c);
    expand->add_option("--x", x_s)->required();
    expand->add_option("--y", y_s)->required();
    expand->add_option("--window", window);

    auto* gcheck = app.add_subcommand("gkm-check", "GKM membership of a class (or violator)");
    add_common(gcheck, c);
    gcheck->add_option("--x", x_s)->required();
    gcheck->add_option("--window", window);
    gcheck->add_option("--perturb", z_s, "add 1 at this point to force a violation")
        ->default_val("");
    gcheck->add_option("--dot", dot_file);

    auto* atlas = app.add_subcommand("atlas", "fixed-locus atlases");
    add_common(atlas, c);
    atlas->add_option("--kind", atlas_kind)->check(CLI::IsMember({"zeta", "subtorus"}));
    atlas->add_option("--box", box, "weight box radius");
    atlas->add_option("--bound", bound, "length bound for coset representatives");
    atlas->add_option("--alpha", alpha_s);

    auto* ccheck = app.add_subcommand("center-check", "center membership of a transported class");
    add_common(ccheck, c);
    ccheck->add_option("--ring", ring_s)->check(CLI::IsMember({"S", "Shat"}));
    ccheck->add_option("--omega", omega_s, "block label");
    ccheck->add_option("--x", x_s, "class label (word)");
    ccheck->add_option("--box", box);
    ccheck->add_option("--bound", bound);
    ccheck->add_option("--window", window)->default_val(14);
    ccheck->add_option("--violate", violate_s, "perturb this weight by 1 before checking");

    auto* elat = app.add_subcommand("end-lattice", "endomorphism lattice of a big projective");
    add_common(elat, c);
    elat->add_option("--kind", kind_s)->check(CLI::IsMember({"singular", "regular"}));
    elat->add_option("--n", nn);
    elat->add_option("--m", mm);
    elat->add_option("--alpha", alpha_s);
    elat->add_option("--omega", omega_s);
    elat->add_flag("--compare-window", compare_window,
                   "verify equality with the windowed sGKM lattice (rank 1)");

    auto* hmat = app.add_subcommand("h-matrix", "translation matrix H_z");
    add_common(hmat, c);
    hmat->add_option("--omega", omega_s)->required();
    hmat->add_option("--z", z_s);
    hmat->add_option("--window", window)->default_val(8);

    auto* hid = app.add_subcommand("h-identities", "factorization/triangularity/congruence");
    add_common(hid, c);
    hid->add_option("--omega", omega_s)->required();
    hid->add_option("--z", z_s);
    hid->add_option("--window", window)->default_val(8);

    auto* push = app.add_subcommand("pushforward", "parahoric pushforward of a class");
    add_common(push, c);
    push->add_option("--omega", omega_s)->required();
    push->add_option("--x", x_s);
    push->add_option("--window", window)->default_val(8);
    push->add_flag("--row", do_row, "also verify the (1..1)H_z row identity");
    push->add_option("--z", z_s);

    auto* mact = app.add_subcommand("module-action", "H_z conjugation identity for psi");
    add_common(mact, c);
    mact->add_option("--omega", omega_s)->required();
    mact->add_option("--z", z_s);
    mact->add_option("--psi", psi_s, "1, a word w (= xi^w), or w*w for a product");
    mact->add_option("--window", window)->default_val(8);

    auto* sl2 = app.add_subcommand("sl2-tables", "psi/phi'/phi value tables from classes");
    add_common(sl2, c);
    sl2->add_option("--range", N, "positions |n| <= range");

    // ---- config file pre-pass: JSON mirroring long flags ----
    std::vector<std::string> args(argv + 1, argv + argc);
    for (size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            std::ifstream in(args[i + 1]);
            if (!in) {
                std::cerr << "cannot open config file " << args[i + 1] << "\n";
                return 2;
            }
            Json j;
            in >> j;
            args.erase(args.begin() + i, args.begin() + i + 2);
            for (auto& [k, v] : j.items()) {
                std::string flag = "--" + k;
                if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
                args.push_back(flag);
                if (v.is_string())
                    args.push_back(v.get<std::string>());
                else if (!v.is_boolean())
                    args.push_back(v.dump());
            }
            break;
        }
    }

    try {
        std::vector<const char*> cargs{argv[0]};
        for (auto& a : args) cargs.push_back(a.c_str());
        app.parse((int)cargs.size(), cargs.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        bool json = c.format == "json";
        if (roots->parsed()) {
            Session s(c);
            if (json) {
                std::cout << root_datum_to_json(s.rd).dump(2) << "\n";
            } else {
                std::cout << "type " << s.rd.type() << "  l=" << s.rd.l() << "  e=" << s.rd.e()
                          << "  h=" << s.rd.coxeter_number() << "\n";
                for (auto& pr : s.rd.positive_roots())
                    std::cout << "root " << vec_str(pr.root.rc) << "  coroot "
                              << vec_str(pr.coroot.cc) << "  d=" << pr.d << "\n";
            }
            return 0;
        }
        if (xisc->parsed()) {
            Session s(c);
            Json arr = Json::array();
            for (auto& xe : s.rd.xi_sc_enumerate()) {
                if (json)
                    arr.push_back({{"omega", xe.omega.fw}, {"regular", xe.regular}});
                else
                    std::cout << weight_str(xe.omega) << (xe.regular ? "  regular" : "  singular")
                              << "\n";
            }
            if (json) std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (orbit->parsed()) {
            Session s(c);
            Weight lam = parse_weight(lambda_s, s.rd.rank());
            auto br = s.jz.block_rep(lam);
            auto cl = s.aw.up_closure(lam, depth);
            if (json) {
                Json j;
                j["omega"] = br.omega.fw;
                j["omega_extended"] = br.omega_extended.fw;
                Json mems = Json::array();
                for (auto& w : cl) mems.push_back(w.fw);
                j["down_set"] = mems;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "block " << weight_str(br.omega) << "  class "
                          << weight_str(br.omega_extended) << "\n";
                for (auto& w : cl) std::cout << weight_str(w) << "\n";
            }
            return 0;
        }
        if (linkage->parsed()) {
            Session s(c);
            Weight lam = parse_weight(lambda_s, s.rd.rank());
            Weight mu = parse_weight(mu_s, s.rd.rank());
            bool a = s.jz.linkage_nonzero(lam, mu, depth);
            bool b = s.jz.linkage_recursive(lam, mu, depth);
            if (json)
                std::cout << Json{{"linked", a}, {"recursive", b}, {"agree", a == b}}.dump(2)
                          << "\n";
            else
                std::cout << "linked=" << (a ? "true" : "false") << " recursive="
                          << (b ? "true" : "false") << (a == b ? " PASS" : " FAIL") << "\n";
            return a == b ? 0 : 1;
        }
        if (shap->parsed()) {
            Session s(c);
            Weight lam = parse_weight(lambda_s, s.rd.rank());
            Weight eta = parse_weight(eta_s, s.rd.rank());
            auto fs = s.jz.shapovalov_factors(lam, eta.fw);
            Json arr = Json::array();
            for (auto& f : fs) {
                if (json)
                    arr.push_back({{"beta", f.beta.rc},
                                   {"m", f.m},
                                   {"c", f.c},
                                   {"mult", f.mult.get_str()},
                                   {"vanishing", f.vanishing ? f.vanishing->str() : ""}});
                else
                    std::cout << "beta=" << vec_str(f.beta.rc) << " m=" << f.m << " c=" << f.c
                              << " mult=" << f.mult.get_str()
                              << (f.vanishing ? "  vanishing " + f.vanishing->str() : "")
                              << "\n";
            }
            if (json) std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (jcheck->parsed()) {
            Session s(c);
            Weight lam = parse_weight(lambda_s, s.rd.rank());
            CharWindow win{lam, depth};
            auto lhs = s.jz.jantzen_lhs(lam, win);
            auto rhs = s.jz.jantzen_rhs(lam, win);
            bool ok = lhs == rhs;
            if (json) {
                Json j{{"status", ok ? "PASS" : "FAIL"},
                       {"lhs", character_to_json(lhs)},
                       {"rhs", character_to_json(rhs)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (ok ? "PASS" : "FAIL") << "\nlhs: " << lhs.str()
                          << "\nrhs: " << rhs.str() << "\n";
            }
            return ok ? 0 : 1;
        }
        if (scheck->parsed()) {
            Session s(c);
            Weight lam = parse_weight(lambda_s, s.rd.rank());
            Root alpha = parse_root(s.rd, alpha_s);
            CharWindow win{lam, depth};
            auto lhs = s.jz.jantzen_lhs_subgeneric(lam, alpha, win);
            auto rhs = s.jz.jantzen_rhs_subgeneric(lam, alpha, win);
            bool ok = lhs == rhs;
            if (json) {
                Json j{{"status", ok ? "PASS" : "FAIL"},
                       {"lhs", character_to_json(lhs)},
                       {"rhs", character_to_json(rhs)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (ok ? "PASS" : "FAIL") << "\nlhs: " << lhs.str()
                          << "\nrhs: " << rhs.str() << "\n";
            }
            return ok ? 0 : 1;
        }
        if (schub->parsed()) {
            Session s(c);
            AffineElement x = parse_element(s.aw, x_s);
            std::vector<int> J;
            if (!y_s.empty()) {
                // parse J as generator tokens
                std::string tok;
                for (char ch : y_s + ",") {
                    if (ch == ',' || ch == '.') {
                        if (!tok.empty()) {
                            AffineElement g = parse_element(s.aw, tok);
                            for (size_t gi = 0; gi < s.aw.simple_gens().size(); ++gi)
                                if (s.aw.gen_element((int)gi) == g) J.push_back((int)gi);
                            tok.clear();
                        }
                    } else
                        tok += ch;
                }
            }
            const auto& cls = s.gk.schubert_class(J, x, window);
            if (!dot_file.empty()) {
                std::ofstream out(dot_file);
                out << s.gk.dot_export(cls.body);
            }
            if (json)
                std::cout << gkm_function_to_json(s.aw, cls.body).dump(2) << "\n";
            else
                for (auto& [y, v] : cls.body.values)
                    std::cout << s.aw.el_str(y) << " : " << v.str() << "\n";
            return 0;
        }
        if (expand->parsed()) {
            Session s(c);
            AffineElement x = parse_element(s.aw, x_s);
            AffineElement y = parse_element(s.aw, y_s);
            auto p = s.gk.product(s.gk.schubert_class({}, x, window).body,
                                  s.gk.schubert_class({}, y, window).body);
            auto e = s.gk.expand_in_schubert(p, {});
            if (!e.ok) {
                std::cout << "FAIL not in the R-span, witness " << e.witness << "\n";
                return 1;
            }
            Json arr = Json::array();
            for (auto& [w, co] : e.coeffs) {
                if (json)
                    arr.push_back({{"x", s.aw.el_str(w)}, {"coeff", co.str()}});
                else
                    std::cout << s.aw.el_str(w) << " : " << co.str() << "\n";
            }
            if (json) std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (gcheck->parsed()) {
            Session s(c);
            AffineElement x = parse_element(s.aw, x_s);
            GkmFunction f = s.gk.schubert_class({}, x, window).body;
            if (!z_s.empty()) {
                AffineElement p = parse_element(s.aw, z_s);
                f.values[p] = f.values.at(p) + LocalizedElem::one(s.aw.nvars());
            }
            if (!dot_file.empty()) {
                std::ofstream out(dot_file);
                out << s.gk.dot_export(f);
            }
            return report_exit(s.gk.check_big(f), c.format, "gkm-check");
        }
        if (atlas->parsed()) {
            Session s(c);
            auto win = weight_box(s.rd, box);
            if (atlas_kind == "zeta") {
                auto at = atlas_zeta(s.aw, s.jz, win, bound);
                Json arr = Json::array();
                for (auto& [w, e] : at.points) {
                    if (json)
                        arr.push_back({{"weight", w.fw},
                                       {"omega", e.omega.fw},
                                       {"base", e.base.fw},
                                       {"coset", s.aw.el_str(e.coset)}});
                    else
                        std::cout << weight_str(w) << " -> omega " << weight_str(e.omega)
                                  << " base " << weight_str(e.base) << " coset "
                                  << s.aw.el_str(e.coset) << "\n";
                }
                if (json) std::cout << arr.dump(2) << "\n";
            } else {
                Root alpha = parse_root(s.rd, alpha_s);
                auto at = atlas_subtorus(s.aw, alpha, win);
                Json arr = Json::array();
                for (auto& [w, e] : at.points) {
                    bool fl = at.orbits[e.orbit].fl_like;
                    if (json)
                        arr.push_back({{"weight", w.fw},
                                       {"orbit", e.orbit},
                                       {"type", fl ? "Fl" : "Gr"},
                                       {"n", e.n},
                                       {"branch", e.branch}});
                    else
                        std::cout << weight_str(w) << " -> orbit " << e.orbit
                                  << (fl ? " Fl" : " Gr") << " n=" << e.n
                                  << " branch=" << e.branch << "\n";
                }
                if (json) std::cout << arr.dump(2) << "\n";
            }
            return 0;
        }
        if (ccheck->parsed()) {
            Session s(c);
            auto win = weight_box(s.rd, box);
            auto at = atlas_zeta(s.aw, s.jz, win, bound);
            Weight omega = parse_weight(omega_s, s.rd.rank());
            AffineElement x = parse_element(s.aw, x_s);
            small = ring_s == "S";
            auto f = s.ct.transport_class(at, s.jz.block_rep(omega).omega, x, window, small);
            if (!violate_s.empty()) {
                Weight vw = parse_weight(violate_s, s.rd.rank());
                f.values[vw] = f.values.at(vw) + LocalizedElem::one(s.aw.nvars());
            }
            auto rep = small ? s.ct.check_S(f) : s.ct.check_Shat(f);
            return report_exit(rep, c.format, "center-check-" + ring_s);
        }
        if (elat->parsed()) {
            Session s(c);
            Root alpha = parse_root(s.rd, alpha_s);
            EndLattice lat =
                kind_s == "singular"
                    ? s.ct.end_lattice_singular(nn, mm, alpha)
                    : s.ct.end_lattice_regular(nn, mm, alpha,
                                               parse_weight(omega_s, s.rd.rank()));
            Json arr = Json::array();
            for (size_t i = 0; i < lat.basis.size(); ++i) {
                Json row = Json::array();
                std::string line = lat.labels[i] + " : (";
                for (size_t k = 0; k < lat.basis[i].size(); ++k) {
                    row.push_back(lat.basis[i][k].str());
                    if (k) line += ", ";
                    line += lat.basis[i][k].str();
                }
                line += ")";
                if (json)
                    arr.push_back({{"label", lat.labels[i]}, {"tuple", row}});
                else
                    std::cout << line << "\n";
            }
            if (json) std::cout << arr.dump(2) << "\n";
            int rc = 0;
            auto rep = s.ct.end_lattice_sgkm_check(lat);
            if (!rep.ok) rc = 1;
            std::cout << "sgkm-membership: " << (rep.ok ? "PASS" : "FAIL") << "\n";
            if (compare_window) {
                if (s.rd.rank() != 1) throw ConfigError("--compare-window needs rank 1");
                auto winlat = s.ct.sgkm_window_lattice(lat.kind, nn, mm);
                bool eq = s.ct.lattice_equal(lat.basis, winlat, s.aw.root_form(alpha));
                std::cout << "window-lattice-equality: " << (eq ? "PASS" : "FAIL") << "\n";
                if (!eq) rc = 1;
            }
            return rc;
        }
        if (hmat->parsed()) {
            Session s(c);
            Weight omega = parse_weight(omega_s, s.rd.rank());
            AffineElement z = parse_element(s.aw, z_s);
            auto H = s.ct.h_matrix(omega, z, window);
            if (json) {
                std::cout << matrix_to_json(s.aw, H).dump(2) << "\n";
            } else {
                std::cout << "omega " << weight_str(H.omega) << " base " << weight_str(H.base)
                          << " order:";
                for (auto& x : H.order) std::cout << " " << s.aw.el_str(x);
                std::cout << "\n";
                for (auto& row : H.entries) {
                    for (size_t k = 0; k < row.size(); ++k)
                        std::cout << (k ? " | " : "") << row[k].str();
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (hid->parsed()) {
            Session s(c);
            Weight omega = parse_weight(omega_s, s.rd.rank());
            AffineElement z = parse_element(s.aw, z_s);
            auto lines = s.ct.h_identities(omega, z, window);
            bool ok = true;
            if (json) {
                std::cout << identity_lines_to_json(lines).dump(2) << "\n";
                for (auto& line : lines) ok &= line.ok;
            } else {
                for (auto& line : lines) {
                    ok &= line.ok;
                    std::cout << (line.ok ? "PASS " : "FAIL ") << line.name
                              << (line.ok ? "" : "  [" + line.witness + "]") << "\n";
                }
            }
            return ok ? 0 : 1;
        }
        if (push->parsed()) {
            Session s(c);
            Weight omega = parse_weight(omega_s, s.rd.rank());
            AffineElement x = parse_element(s.aw, x_s);
            const auto& cls = s.gk.schubert_class({}, x, window);
            auto out = s.ct.pushforward(cls.body, omega);
            if (json)
                std::cout << gkm_function_to_json(s.aw, out).dump(2) << "\n";
            else
                for (auto& [y, v] : out.values)
                    std::cout << s.aw.el_str(y) << " : " << v.str() << "\n";
            if (do_row) {
                AffineElement z = parse_element(s.aw, z_s);
                auto line = s.ct.pushforward_row_identity(omega, z, window);
                std::cout << (line.ok ? "PASS " : "FAIL ") << line.name << "\n";
                return line.ok ? 0 : 1;
            }
            return 0;
        }
        if (mact->parsed()) {
            Session s(c);
            Weight omega = parse_weight(omega_s, s.rd.rank());
            AffineElement z = parse_element(s.aw, z_s);
            GkmFunction psi;
            if (psi_s == "1") {
                psi.J = {};
                psi.window = window;
                for (auto& y : s.aw.elements_up_to(window))
                    psi.values[y] = LocalizedElem::one(s.aw.nvars());
            } else if (psi_s.find('*') != std::string::npos) {
                auto pos = psi_s.find('*');
                AffineElement a = parse_element(s.aw, psi_s.substr(0, pos));
                AffineElement b = parse_element(s.aw, psi_s.substr(pos + 1));
                psi = s.gk.product(s.gk.schubert_class({}, a, window).body,
                                   s.gk.schubert_class({}, b, window).body);
            } else {
                psi = s.gk.schubert_class({}, parse_element(s.aw, psi_s), window).body;
            }
            auto line = s.ct.module_action_identity(psi, omega, z);
            std::cout << (line.ok ? "PASS " : "FAIL ") << line.name
                      << (line.ok ? "" : "  [" + line.witness + "]") << "\n";
            return line.ok ? 0 : 1;
        }
        if (sl2->parsed()) {
            Session s(c);
            if (s.rd.rank() != 1) throw ConfigError("sl2-tables needs a rank-1 type");
            for (auto [kind, name] :
                 {std::pair<Sl2ClassKind, const char*>{Sl2ClassKind::psi, "psi"},
                  {Sl2ClassKind::phi_prime, "phi'"},
                  {Sl2ClassKind::phi, "phi"}}) {
                auto t = sl2_class(s.aw, kind, N);
                std::cout << name << ":";
                for (auto& [k, v] : t.values)
                    std::cout << " (" << k.first << (k.second ? "s" : "") << ")" << v.str();
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
