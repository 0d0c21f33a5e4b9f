#pragma once

// The groups W_{l,af} = W x lQ and W_{l,ex} = W x lLambda, the dot action,
// affine real coroots, reflections, length, Bruhat order, parabolic quotients
// and dot-stabilizers.

#include "lweyl/polyform.hpp"
#include "lweyl/weyl.hpp"

#include <memory>
#include <optional>
#include <set>

namespace lweyl {

// beta-check + level*delta with beta a real (finite) root
struct AffineCoroot {
    Coroot beta;
    long long level = 0;
    auto operator<=>(const AffineCoroot&) const = default;
    std::string str() const { return vec_str(beta.cc) + "+" + std::to_string(level) + "d"; }
};

// (w, mu) acting on weights by lambda -> w(lambda + mu)
struct AffineElement {
    int w = 0;    // index into WeylGroup
    Vec mu;       // translation, fundamental-weight coordinates (element of lQ or lLambda)
    auto operator<=>(const AffineElement&) const = default;
};

// A simple affine generator: finite s_i, or the extra reflection per component.
struct SimpleGen {
    AffineCoroot coroot;  // the simple affine coroot it reflects
    bool affine;          // true for the s_0 of a component
};

class AffineWeyl {
  public:
    // finite_mode: no translations, coroot levels 0 (classical GKM contexts)
    AffineWeyl(const RootDatum& rd, bool finite_mode = false);

    const RootDatum& datum() const { return *rd_; }
    const WeylGroup& finite() const { return *W_; }
    bool finite_mode() const { return finite_; }
    long long l() const { return finite_ ? 0 : rd_->l(); }

    AffineElement identity() const { return AffineElement{0, Vec(rd_->rank(), 0)}; }
    AffineElement translation(const Weight& mu) const;  // tau_mu
    AffineElement mult(const AffineElement& a, const AffineElement& b) const;
    AffineElement inverse(const AffineElement& a) const;

    bool is_positive(const AffineCoroot& g) const;
    bool in_l_af(const AffineElement& x) const;  // translation in lQ?

    // group actions
    Weight apply(const AffineElement& x, const Weight& w) const;      // linear-affine
    Weight dot_apply(const AffineElement& x, const Weight& w) const;  // rho-shifted
    AffineCoroot linear_apply(const AffineElement& x, const AffineCoroot& g) const;

    // s_{beta,kl}: the reflection negating gamma; level must be in lZ (or 0 in finite mode)
    AffineElement reflection_of(const AffineCoroot& g) const;

    long long length(const AffineElement& x) const;
    std::vector<int> reduced_word(const AffineElement& x) const;  // indices into simple_gens()
    const std::vector<SimpleGen>& simple_gens() const { return gens_; }
    AffineElement gen_element(int gi) const;  // the reflection of gens_[gi]
    bool bruhat_leq(const AffineElement& x, const AffineElement& y) const;

    // all x in W_{l,af} with length <= bound (canonically sorted by (length, key))
    std::vector<AffineElement> elements_up_to(long long bound) const;
    // minimal-length coset representatives x W_J, l(x s) > l(x) for s in J
    std::vector<AffineElement> coset_min_reps(const std::vector<int>& J,
                                              long long length_bound) const;
    AffineElement coset_minimize(AffineElement x, const std::vector<int>& J) const;

    // positive affine real coroots with |level| <= level_bound (level in lZ)
    std::vector<AffineCoroot> positive_coroots_up_to(long long level_bound) const;

    struct Stabilizer {
        Weight omega;
        std::vector<AffineCoroot> pos_coroots;  // Phi-check^+_{l,omega}
        std::vector<AffineElement> elements;    // full finite group W_{l,omega}
        std::vector<int> simple_J;              // indices of simple gens fixing omega
    };
    Stabilizer stabilizer_dot(const Weight& omega) const;  // omega must lie in Xi_sc
    Stabilizer stabilizer_dot_any(const Weight& omega) const;  // no domain restriction

    // {mu : mu up-arrow lambda}, intersected with {mu : ht(lambda-mu) <= depth}
    std::set<Weight> up_closure(const Weight& lambda, long long depth) const;

    // realization of affine coroots as linear forms in y_1..y_rank, d
    PolyForm linear_form(const AffineCoroot& g) const;
    // the root alpha as a ring element (image d_alpha * alpha-check of beta -> d_beta beta-check)
    PolyForm root_form(const Root& alpha) const;
    // ring automorphism of S'-hat extending linear_apply
    PolyForm weyl_act_poly(const AffineElement& x, const PolyForm& p) const;
    LocalizedElem weyl_act_localized(const AffineElement& x, const LocalizedElem& f) const;

    int nvars() const { return rd_->rank() + 1; }

    std::string el_str(const AffineElement& x) const;

  private:
    const RootDatum* rd_;
    std::shared_ptr<WeylGroup> W_;
    bool finite_;
    std::vector<SimpleGen> gens_;
    mutable std::map<AffineElement, long long> length_memo_;
    mutable std::map<std::pair<std::vector<int>, long long>, std::vector<AffineElement>>
        reps_memo_;
};

}  // namespace lweyl
