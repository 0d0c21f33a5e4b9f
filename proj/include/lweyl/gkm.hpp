#pragma once

// GKM and small-torus-GKM function spaces on (quotients of) W_{l,af} and on
// weight-lattice blocks; Schubert classes, the expansion algorithm, the
// explicit SL2 classes, and fixed-locus indexing atlases.

#include "lweyl/affine.hpp"
#include "lweyl/jantzen.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace lweyl {

struct GkmReport {
    bool ok = true;
    std::vector<std::string> violations;
    long long skipped = 0;  // pairs with an endpoint outside the window
    std::string str() const;
};

// function on J-minimal coset representatives, length-bounded window
struct GkmFunction {
    std::vector<int> J;  // simple-generator indices (sorted)
    long long window = 0;
    bool small_torus = false;  // values must be d-free
    std::map<AffineElement, LocalizedElem> values;

    LocalizedElem value(const AffineElement& x) const;
    bool has(const AffineElement& x) const { return values.count(x) > 0; }
};

struct SchubertClass {
    AffineElement x;
    GkmFunction body;
    // diagonal value xi(x) kept factored: scalar * prod forms^k
    Rat diag_scalar;
    std::vector<std::pair<PolyForm, int>> diag_factors;
};

// small-torus orbit in the rank-1 pattern: positions n (branch 0 = translation
// points, branch 1 = reflected points; Gr-like orbits have branch 0 only).
struct SmallTorusOrbit {
    bool fl_like = false;
    long long n_min = 0, n_max = 0;
    PolyForm alpha_form;  // d-free linear form of the coroot
    std::map<std::pair<long long, int>, LocalizedElem> values;
};

struct ZetaAtlas {
    struct Entry {
        Weight omega;          // Xi_sc block representative
        Weight base;           // antidominant block base (standard parabolic stabilizer)
        AffineElement coset;   // minimal-length x with x . base = lambda
    };
    std::map<Weight, Entry> points;
};

struct SubtorusAtlas {
    Root alpha;
    struct Entry {
        int orbit = 0;
        long long n = 0;  // position in the SL2 model
        int branch = 0;   // 0: omega* + l n alpha; 1: s_alpha . omega* + l n alpha
    };
    struct Orbit {
        bool fl_like = false;  // iff weights are alpha-regular
        Weight omega_star;     // canonical base point
    };
    std::map<Weight, Entry> points;
    std::vector<Orbit> orbits;
};

class Gkm {
  public:
    explicit Gkm(const AffineWeyl& aw) : aw_(&aw) {}

    const AffineWeyl& group() const { return *aw_; }

    // Eq. A.2 check: f(x) - f(s_g x) divisible by the form of g, all edges in window
    GkmReport check_big(const GkmFunction& f) const;

    // Eq. B.0 check on a rank-1 orbit; d_max < 0 means (max value degree) + 1
    static GkmReport check_small(const SmallTorusOrbit& o, long long d_max = -1);

    // the unique class satisfying (B.3)(1)-(3); throws MathError when the
    // window-truncated characterization is inconsistent or underdetermined
    const SchubertClass& schubert_class(const std::vector<int>& J, const AffineElement& x,
                                        long long window) const;

    enum class CoeffRing { polynomial, local };
    struct Expansion {
        std::map<AffineElement, LocalizedElem> coeffs;
        bool ok = true;
        std::string witness;  // failure point when not in the R-span
    };
    // greedy minimal-support expansion (Lemma B.5 proof); when ring == local,
    // coefficients must lie in the localization at local_form
    Expansion expand_in_schubert(const GkmFunction& f, const std::vector<int>& J,
                                 CoeffRing ring = CoeffRing::polynomial,
                                 const PolyForm* local_form = nullptr) const;
    GkmFunction evaluate_expansion(const std::map<AffineElement, LocalizedElem>& coeffs,
                                   const std::vector<int>& J, long long window) const;

    // pointwise product (same J/window)
    GkmFunction product(const GkmFunction& a, const GkmFunction& b) const;

    std::string dot_export(const GkmFunction& f) const;

    // level bound used when enumerating reflections against a length window
    long long reflection_level_bound(long long window, const std::vector<int>& J) const;
    std::vector<AffineCoroot> reflections_for_window(long long window,
                                                     const std::vector<int>& J) const;

  private:
    const AffineWeyl* aw_;
    mutable std::map<std::tuple<std::vector<int>, AffineElement, long long>, SchubertClass>
        cache_;
    mutable std::map<std::pair<std::vector<int>, long long>, std::vector<AffineCoroot>>
        refl_memo_;
};

// ---- SL2 model (rank-1 datum) ------------------------------------------------

// model point "tau_{n l alpha}" (branch 0) / "tau_{n l alpha} s_alpha" (branch 1)
AffineElement sl2_model_element(const AffineWeyl& aw, long long n, int branch);

enum class Sl2ClassKind { psi, phi_prime, phi };

// exact value tables of §-style psi/phi'/phi on model positions [-N, N];
// values are d-free multiples of the alpha-form of the ambient datum
SmallTorusOrbit sl2_class(const AffineWeyl& aw, Sl2ClassKind kind, long long N);

// ---- atlases ------------------------------------------------------------------

ZetaAtlas atlas_zeta(const AffineWeyl& aw, const Jantzen& jz, const std::vector<Weight>& window,
                     long long length_bound);
SubtorusAtlas atlas_subtorus(const AffineWeyl& aw, const Root& alpha,
                             const std::vector<Weight>& window);

// all weights mu with |<mu, alpha_i-check>| <= box for every i
std::vector<Weight> weight_box(const RootDatum& rd, long long box);

}  // namespace lweyl
