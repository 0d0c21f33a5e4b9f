#pragma once

// Desk-scale center machinery: membership tests for Z(O_S) and Z(O_Shat),
// truncated endomorphism lattices of big projectives, the translation matrices
// H_z with their identities, and the parahoric pushforward.

#include "lweyl/gkm.hpp"
#include "lweyl/qpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lweyl {

struct CenterFunction {
    enum class Ring { S, S_alpha, Shat, Shat_alpha };
    Ring ring = Ring::S;
    std::optional<Root> alpha;  // localization root for the *_alpha rings
    std::map<Weight, LocalizedElem> values;
};

struct EndLattice {
    long long n = 0, m = 0;
    Jantzen::BlockKind kind = Jantzen::BlockKind::singular;
    Root alpha;
    Weight omega;  // block base weight (singular weight / regular omega)
    // value-tuples under End(Q^{<=m}) -> prod_j End(M(j)_K); indices are the
    // flag positions (singular: n..m; regular: 2n-1..2m), in order
    std::vector<std::vector<LocalizedElem>> basis;
    std::vector<std::string> labels;
    size_t tuple_len() const { return basis.empty() ? 0 : basis[0].size(); }
};

struct TranslationMatrix {
    Weight omega;  // caller's block label
    Weight base;   // antidominant base the matrix is computed at
    AffineElement z;
    std::vector<AffineElement> order;  // W_{l,omega}, Bruhat-compatible (length-sorted)
    std::vector<std::vector<LocalizedElem>> entries;  // rows x, cols x'
};

struct IdentityLine {
    std::string name;
    bool ok = true;
    std::string witness;
};

class Center {
  public:
    Center(const AffineWeyl& aw, const Jantzen& jz, const Gkm& gk)
        : aw_(&aw), jz_(&jz), gk_(&gk) {}

    // Z(O_S) membership: polynomial values + per-alpha small-torus GKM over S_alpha
    GkmReport check_S(const CenterFunction& f) const;
    // Z(O_Shat) membership: f(lam) - f(s_g . lam) in form(g) * Shat for all edges
    GkmReport check_Shat(const CenterFunction& f) const;
    // same divisibilities read in the localizations Shat_gamma (Lemma 6.19 route)
    GkmReport check_Shat_localized(const CenterFunction& f) const;

    // transported small-torus orbits of a center function along alpha
    std::vector<SmallTorusOrbit> subtorus_orbits(const CenterFunction& f,
                                                 const Root& alpha) const;

    EndLattice end_lattice_singular(long long n, long long m, const Root& alpha) const;
    EndLattice end_lattice_regular(long long n, long long m, const Root& alpha,
                                   const Weight& omega) const;
    // read a basis tuple as a function on the block's weights and check Eq. B.0
    GkmReport end_lattice_sgkm_check(const EndLattice& lat) const;

    // window restriction of the sGKM lattice of the SL2 model (rank-1 datum only)
    std::vector<std::vector<LocalizedElem>> sgkm_window_lattice(Jantzen::BlockKind kind,
                                                                long long n, long long m) const;

    // exact S_alpha-lattice comparison of tuple families (entries in Q[alpha-form])
    bool lattice_contains(const std::vector<std::vector<LocalizedElem>>& big,
                          const std::vector<std::vector<LocalizedElem>>& small,
                          const PolyForm& alpha_form) const;
    bool lattice_equal(const std::vector<std::vector<LocalizedElem>>& a,
                       const std::vector<std::vector<LocalizedElem>>& b,
                       const PolyForm& alpha_form) const;
    size_t lattice_rank(const std::vector<std::vector<LocalizedElem>>& a,
                        const PolyForm& alpha_form) const;

    // multiplicative closure check: the span of products of the given tuples
    // equals the full lattice (Prop 6.9 / its regular analogue)
    bool generates_as_algebra(const std::vector<std::vector<LocalizedElem>>& gens,
                              const std::vector<std::vector<LocalizedElem>>& full,
                              const PolyForm& alpha_form, int max_power) const;

    TranslationMatrix h_matrix(const Weight& omega, const AffineElement& z,
                               long long window) const;
    std::vector<IdentityLine> h_identities(const Weight& omega, const AffineElement& z,
                                           long long window) const;

    // pi'_*: alternating sum over the stabilizer divided by z(L_omega)
    GkmFunction pushforward(const GkmFunction& psi, const Weight& omega) const;
    IdentityLine pushforward_row_identity(const Weight& omega, const AffineElement& z,
                                          long long window) const;

    IdentityLine module_action_identity(const GkmFunction& psi, const Weight& omega,
                                        const AffineElement& z) const;

    // transport a (small- or big-torus) Schubert class to a center function
    CenterFunction transport_class(const ZetaAtlas& atlas, const Weight& omega,
                                   const AffineElement& x, long long class_window,
                                   bool small_torus) const;

  private:
    const AffineWeyl* aw_;
    const Jantzen* jz_;
    const Gkm* gk_;

    LocalizedElem act_L_inverse(const AffineElement& g,
                                const AffineWeyl::Stabilizer& st) const;  // g(L^{-1})
    AffineWeyl::Stabilizer parabolic_stabilizer(const Weight& base) const;
};

// entries must be polynomials/fractions in the single linear form; exact converter
QRatFunc to_qratfunc(const LocalizedElem& v, const PolyForm& alpha_form);

}  // namespace lweyl
