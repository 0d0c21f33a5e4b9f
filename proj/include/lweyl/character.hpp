#pragma once

// Window-truncated integer-valued formal sums over the weight lattice.

#include "lweyl/root_datum.hpp"

#include <map>

namespace lweyl {

struct CharWindow {
    Weight top;
    long long depth = 0;  // support: mu <= top with ht(top - mu) <= depth
    auto operator<=>(const CharWindow&) const = default;
};

class Character {
  public:
    Character(const RootDatum& rd, CharWindow win) : rd_(&rd), win_(win) {}

    const CharWindow& window() const { return win_; }
    const std::map<Weight, Int>& coeffs() const { return coeffs_; }
    bool in_window(const Weight& mu) const;
    Int coeff(const Weight& mu) const;
    void add(const Weight& mu, const Int& c);  // drops terms outside the window

    Character operator+(const Character& o) const;  // windows must agree
    Character operator-(const Character& o) const;
    bool operator==(const Character& o) const { return win_ == o.win_ && coeffs_ == o.coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    std::string str() const;

  private:
    const RootDatum* rd_;
    CharWindow win_;
    std::map<Weight, Int> coeffs_;
};

}  // namespace lweyl
