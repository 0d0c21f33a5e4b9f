#pragma once

// Kostant partitions, Verma characters, Shapovalov factors, the Jantzen sum
// formulas, linkage, block decomposition, translation bookkeeping and the
// explicit rank-1 Verma flags.

#include "lweyl/affine.hpp"
#include "lweyl/character.hpp"

#include <map>
#include <vector>

namespace lweyl {

struct KostantPartition {
    std::map<int, long long> mult;  // index into positive_roots() -> multiplicity
};

struct ShapFactor {
    Root beta;
    long long m = 0;     // factor [K_beta; <lambda+rho, beta-check> - m]
    long long c = 0;     // <lambda+rho, beta-check> - m
    Int mult;            // |Par(eta - m*beta)|
    std::optional<AffineCoroot> vanishing;  // beta-check + c*delta, present iff l | c
};

class Jantzen {
  public:
    explicit Jantzen(const AffineWeyl& aw) : aw_(&aw), rd_(&aw.datum()) {}

    // complete enumeration of Par(eta); eta in simple-root coordinates
    std::vector<KostantPartition> partitions(const Vec& eta) const;
    Int partition_count(const Vec& eta) const;  // memoized

    std::vector<ShapFactor> shapovalov_factors(const Weight& lambda, const Vec& eta) const;

    Character verma_character(const Weight& lambda, const CharWindow& win) const;
    // coefficient at lambda-eta = number of vanishing Shapovalov factors (Eq. 3.10 route)
    Character jantzen_lhs(const Weight& lambda, const CharWindow& win) const;
    // sum of Verma characters over the reflection index set (Eq. 3.9 route)
    Character jantzen_rhs(const Weight& lambda, const CharWindow& win) const;
    // single-root (subgeneric) variants, Eq. 6.2
    Character jantzen_lhs_subgeneric(const Weight& lambda, const Root& alpha,
                                     const CharWindow& win) const;
    Character jantzen_rhs_subgeneric(const Weight& lambda, const Root& alpha,
                                     const CharWindow& win) const;

    bool linkage_nonzero(const Weight& lambda, const Weight& mu, long long depth) const;
    // independent recursive criterion: descent through vanishing Shapovalov factors
    bool linkage_recursive(const Weight& lambda, const Weight& mu, long long depth) const;

    struct BlockRep {
        Weight omega;           // Xi_sc representative of W_{l,af}.lambda
        Weight omega_extended;  // canonical representative of the pi_1-class [omega]
    };
    BlockRep block_rep(const Weight& lambda) const;
    // representative in the closed fundamental domain {-l <= <w+rho, b> <= 0} of the
    // simple system; its dot-stabilizer is a standard parabolic subgroup
    Weight antidominant_rep(const Weight& lambda) const;

    // Verma factors of T M(x.omega1) under translation omega1 -> omega2 (Lemma 5.0(2))
    std::vector<Weight> translation_factors(const Weight& x_dot_omega1, const Weight& omega1,
                                            const Weight& omega2) const;

    enum class BlockKind { singular, regular };
    // ordered Verma flag of the truncated big projective in the rank-1 model:
    //   singular: weights of M(n_a)..M(m_a); regular: M(2n-1)..M(2m)
    std::vector<Weight> sl2_verma_flag(BlockKind kind, const Root& alpha, const Weight& omega,
                                       long long n, long long m) const;

  private:
    const AffineWeyl* aw_;
    const RootDatum* rd_;
    mutable std::map<Vec, Int> par_memo_;
};

}  // namespace lweyl
