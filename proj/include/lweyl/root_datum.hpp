#pragma once
#include <optional>

// Root systems, weight/coroot lattices, pairings, the parameter l, and the
// singular-type index set Xi_sc.

#include "lweyl/intrat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lweyl {

struct Weight {
    Vec fw;  // fundamental-weight coordinates
    auto operator<=>(const Weight&) const = default;
};

struct Root {
    Vec rc;  // simple-root coordinates
    long long height() const { return vec_sum(rc); }
    auto operator<=>(const Root&) const = default;
};

struct Coroot {
    Vec cc;  // simple-coroot coordinates
    long long height() const { return vec_sum(cc); }
    auto operator<=>(const Coroot&) const = default;
};

struct PosRoot {
    Root root;
    Coroot coroot;
    long long d;  // d_beta, constant on W-orbits
};

class RootDatum {
  public:
    static RootDatum build(const std::string& type_label, long long l);

    const std::string& type() const { return type_; }
    int rank() const { return rank_; }
    long long l() const { return l_; }
    long long e() const { return e_; }
    long long coxeter_number() const { return h_; }
    const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
    const std::vector<long long>& symmetrizers() const { return d_; }
    const std::vector<PosRoot>& positive_roots() const { return pos_; }
    const std::vector<std::pair<int, int>>& components() const { return comps_; }
    bool has_g2_component() const { return has_g2_; }

    Weight rho() const { return Weight{Vec(rank_, 1)}; }
    Weight zero_weight() const { return Weight{Vec(rank_, 0)}; }

    // canonical pairing <lambda, beta-check>
    long long pairing(const Weight& w, const Coroot& c) const { return vec_dot(w.fw, c.cc); }

    Weight root_to_weight(const Root& r) const;         // fundamental coords of a root
    Root simple_root(int i) const;
    Coroot simple_coroot(int i) const;
    const PosRoot& highest_root(int comp) const;        // per component
    const PosRoot* find_pos_root(const Root& r) const;  // nullptr if not positive
    const PosRoot* find_pos_coroot(const Coroot& c) const;
    long long d_of_coroot(const Coroot& c) const;  // d_beta for +-beta-check

    // mu - lambda in Z_{>=0} Sigma?
    bool dominance_leq(const Weight& lambda, const Weight& mu) const;
    // exact root coordinates of a weight, if integral
    std::optional<Vec> weight_to_root_coords(const Weight& w) const;

    // lambda = lambda0 + l*lambda1 with lambda0 l-restricted dominant
    std::pair<Weight, Weight> restricted_decompose(const Weight& lambda) const;
    bool is_l_restricted_dominant(const Weight& w) const;

    struct XiElement {
        Weight omega;
        bool regular;  // trivial dot-stabilizer
    };
    // all omega with 0 <= <omega+rho, beta-check> <= l, flagged by regularity
    std::vector<XiElement> xi_sc_enumerate() const;
    bool in_xi_sc(const Weight& w) const;

    // representatives of Lambda/Q (the finite group pi_1), first entry 0
    std::vector<Weight> pi1_reps() const;

  private:
    std::string type_;
    int rank_ = 0;
    long long l_ = 0, e_ = 1, h_ = 0;
    bool has_g2_ = false;
    std::vector<std::vector<long long>> cartan_;
    std::vector<long long> d_;
    std::vector<PosRoot> pos_;
    std::vector<std::pair<int, int>> comps_;  // [start, end) index ranges
    std::map<Root, int> root_index_;
    std::map<Coroot, int> coroot_index_;
    std::vector<int> highest_;  // per-component index into pos_

    void enumerate_roots();
    void validate_l() const;
};

}  // namespace lweyl
