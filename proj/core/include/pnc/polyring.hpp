#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnc/field.hpp"

namespace pnc {

/// Dense exponent vector t_0^{e_0} ... t_n^{e_n}.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; the caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const;

    /// Paper-style rendering, highest variable first: `t2^3*t1*t0`, `1`.
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Graded lex with t_0 < t_1 < ... < t_n: total degree first, then the
/// exponent of t_n, t_{n-1}, ... Throws DimensionMismatch.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Every monomial of total degree `degree` in `nvars` variables, descending grlex.
std::vector<Monomial> all_monomials(std::size_t nvars, std::uint64_t degree);

struct Term {
    Monomial monomial;
    FieldElement coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in t_0..t_{nvars-1} over a shared field. Terms are kept sorted
/// descending in grlex with no zero coefficients, so terms().front() is the
/// leading term.
class Polynomial {
  public:
    Polynomial(FieldPtr field, std::size_t nvars);

    static Polynomial constant(FieldPtr field, std::size_t nvars, FieldElement c);
    static Polynomial variable(FieldPtr field, std::size_t nvars, std::size_t i);
    static Polynomial monomial(FieldPtr field, Monomial m, FieldElement c);
    /// Combines like terms and drops zeros; input order is irrelevant.
    static Polynomial from_terms(FieldPtr field, std::size_t nvars, std::vector<Term> terms);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Maximum total degree; 0 for the zero polynomial.
    std::uint64_t degree() const noexcept;
    bool is_homogeneous() const noexcept;
    const Term& leading_term() const;
    FieldElement coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(FieldElement c) const;
    Polynomial pow(std::uint64_t e) const;

    FieldElement evaluate(std::span<const FieldElement> coords) const;

    std::string to_string() const;
    /// Grammar: terms joined by `+`/`-`; each term a `*`-product of integers,
    /// `a^k`, parenthesised field elements and variables `tI^k`.
    static Polynomial parse(FieldPtr field, std::size_t nvars, std::string_view text);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    void check_compatible(const Polynomial& other) const;

    FieldPtr field_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// t_i <- t_i - shifts[i-pivot-1] * t_pivot for i > pivot. shifts.size() must
/// equal nvars - pivot - 1.
Polynomial linear_substitute(const Polynomial& f, std::size_t pivot, std::span<const FieldElement> shifts);

}  // namespace pnc
