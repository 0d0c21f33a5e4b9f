#pragma once

// Exact sparse polynomials in the coroot variables y_1..y_rank and the affine
// variable d (one variable serves the loop direction and the equivariant
// parameter), plus fractions whose denominators are products of linear forms.

#include "lweyl/intrat.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lweyl {

using Expo = std::vector<uint32_t>;  // length nvars; last slot is the d-exponent

class PolyForm {
  public:
    PolyForm() : nvars_(0) {}
    explicit PolyForm(int nvars) : nvars_(nvars) {}
    static PolyForm constant(int nvars, const Rat& c);
    static PolyForm variable(int nvars, int i);  // i in [0, nvars)

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    long total_degree() const;          // -1 for zero
    bool is_homogeneous(long d) const;  // zero counts as homogeneous of any degree
    bool is_linear() const { return !is_zero() && total_degree() == 1 && is_homogeneous(1); }

    const std::map<Expo, Rat>& terms() const { return terms_; }
    Rat coeff(const Expo& e) const;
    void set_coeff(const Expo& e, const Rat& c);

    PolyForm operator-() const;
    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    PolyForm operator*(const PolyForm& o) const;
    PolyForm operator*(const Rat& c) const;
    bool operator==(const PolyForm& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const PolyForm& o) const { return !(*this == o); }
    bool operator<(const PolyForm& o) const;  // canonical total order (for map keys)

    PolyForm pow(unsigned k) const;

    // Substitute each variable by the given image polynomial (ring hom).
    PolyForm substitute(const std::vector<PolyForm>& images) const;
    // d -> 0
    PolyForm specialize_delta_zero() const;

    // Exact division: returns quotient iff divisor divides exactly.
    std::optional<PolyForm> divide_exact(const PolyForm& divisor) const;
    // Remainder of division by a *linear* form (kills its lex-leading variable).
    PolyForm reduce_mod_linear(const PolyForm& lin) const;
    // Largest k with lin^k | p; p must be nonzero, lin linear.
    long valuation_at(const PolyForm& lin) const;

    // Primitive normalization of a linear form: integer coprime coefficients,
    // lex-leading coefficient positive. Returns the unit u with *this == u * result.
    PolyForm normalized_linear(Rat* unit = nullptr) const;

    // Canonical ordered-monomial text form; parse accepts the same grammar.
    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;  // default names y1..yn, d
    static PolyForm parse(int nvars, const std::string& text);

    static std::vector<std::string> default_names(int nvars);

  private:
    int nvars_;
    std::map<Expo, Rat> terms_;  // no zero coefficients
    void trim(const Expo& e);
};

// A fraction num / (scalar-free product of normalized linear forms), reduced.
class LocalizedElem {
  public:
    LocalizedElem() = default;
    explicit LocalizedElem(PolyForm num) : num_(std::move(num)) {}
    LocalizedElem(PolyForm num, std::vector<std::pair<PolyForm, int>> den);

    static LocalizedElem zero(int nvars) { return LocalizedElem(PolyForm(nvars)); }
    static LocalizedElem one(int nvars) {
        return LocalizedElem(PolyForm::constant(nvars, Rat(1)));
    }

    const PolyForm& num() const { return num_; }
    const std::vector<std::pair<PolyForm, int>>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    int nvars() const { return num_.nvars(); }

    LocalizedElem operator-() const;
    LocalizedElem operator+(const LocalizedElem& o) const;
    LocalizedElem operator-(const LocalizedElem& o) const;
    LocalizedElem operator*(const LocalizedElem& o) const;
    LocalizedElem operator*(const Rat& c) const;
    bool operator==(const LocalizedElem& o) const;  // cross-multiplication
    bool operator!=(const LocalizedElem& o) const { return !(*this == o); }

    // Divide by a factored element c * prod lin_i^k_i (c != 0).
    LocalizedElem div_factored(const Rat& c,
                               const std::vector<std::pair<PolyForm, int>>& factors) const;
    // Divide by another element whose numerator is constant or a single linear form power.
    LocalizedElem div(const LocalizedElem& o) const;

    // Order of vanishing along the prime (lin): val(num) - multiplicity in den.
    long valuation_at(const PolyForm& lin) const;
    // Member of the localization at (lin): denominator prime to lin.
    bool in_localization(const PolyForm& lin) const;

    LocalizedElem specialize_delta_zero() const;  // requires denominator d-free after reduce

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;

  private:
    PolyForm num_;                                 // carries the scalar
    std::vector<std::pair<PolyForm, int>> den_;    // normalized linear forms, sorted
    void reduce();
};

// Exact rational linear solve (Gaussian elimination).
// Returns solution of A x = b if it exists and is unique; nullopt with
// *status = "inconsistent" / "underdetermined" otherwise.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A,
                                             std::vector<Rat> b, std::string* status = nullptr);

// Fraction-free (Bareiss) determinant of a PolyForm matrix.
PolyForm poly_det(std::vector<std::vector<PolyForm>> m);

}  // namespace lweyl
