#pragma once

// Finite Weyl group, fully enumerated: action matrices on weight (fundamental)
// and coroot (simple-coroot) coordinates, reduced words, multiplication.

#include "lweyl/root_datum.hpp"

#include <map>
#include <vector>

namespace lweyl {

class WeylGroup {
  public:
    explicit WeylGroup(const RootDatum& rd);

    const RootDatum& datum() const { return *rd_; }
    size_t size() const { return els_.size(); }
    int identity() const { return 0; }
    int simple_reflection(int i) const { return simple_[i]; }
    int mult(int a, int b) const;  // element a*b (maps: apply b first)
    int inverse(int a) const { return els_[a].inv; }
    int length(int a) const { return (int)els_[a].word.size(); }
    const std::vector<int>& word(int a) const { return els_[a].word; }

    // row-major action matrix on fundamental-weight coordinates
    const std::vector<long long>& fund_matrix(int a) const { return els_[a].mfw; }
    Weight act_weight(int a, const Weight& w) const;
    Coroot act_coroot(int a, const Coroot& c) const;
    Root act_root(int a, const Root& r) const;

    // reflection s_beta for a (+-)root beta, as a group element
    int reflection(const Root& beta) const;

  private:
    struct Elem {
        std::vector<long long> mfw;   // rank x rank, row-major, on fundamental coords
        std::vector<long long> mcor;  // on simple-coroot coords
        std::vector<long long> mrt;   // on simple-root coords
        std::vector<int> word;
        int inv = 0;
    };
    const RootDatum* rd_;
    int n_;
    std::vector<Elem> els_;
    std::vector<int> simple_;
    std::map<std::vector<long long>, int> index_;  // keyed by mfw
    mutable std::map<Root, int> refl_cache_;

    std::vector<long long> matmul(const std::vector<long long>& a,
                                  const std::vector<long long>& b) const;
};

}  // namespace lweyl
