#pragma once

#include <cstdint>
#include <vector>

#include "pnc/polyring.hpp"
#include "pnc/variety.hpp"

namespace pnc {

inline constexpr std::uint64_t kFootprintSliceCap = 1'000'000;

/// One binomial t_i t_j^{d_j} - t_i^{d_j} t_j of the closed-form basis.
struct GroebnerElement {
    std::size_t i;
    std::size_t j;
    Polynomial poly;
    Monomial leading;  // t_i t_j^{d_j}
};

/// The Gröbner basis {t_i t_j (t_j^{d_j-1} - t_i^{d_j-1}) : i < j} of I_X under
/// grlex with t_0 < ... < t_n, in (i, j) lexicographic order.
class GroebnerBasis {
  public:
    explicit GroebnerBasis(const Variety& x);

    const NestedSequence& sequence() const noexcept { return seq_; }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<GroebnerElement>& elements() const noexcept { return elements_; }

    /// Remainder on division by the basis. Always rewrites the grlex-largest
    /// non-standard monomial first, using the lexicographically smallest
    /// divisor (i, j).
    Polynomial normal_form(const Polynomial& f) const;

  private:
    NestedSequence seq_;
    FieldPtr field_;
    std::vector<GroebnerElement> elements_;
};

inline GroebnerBasis groebner_basis(const Variety& x) { return GroebnerBasis(x); }

inline Polynomial normal_form(const GroebnerBasis& gb, const Polynomial& f) { return gb.normal_form(f); }

/// True iff no t_i t_j^{d_j} (i < j) divides m: beyond the least-index
/// variable of the support every exponent is at most d_k - 1.
bool is_standard(const NestedSequence& seq, const Monomial& m);

struct FootprintSlice {
    std::uint64_t degree = 0;
    std::vector<Monomial> monomials;  // descending grlex

    std::uint64_t count() const noexcept { return monomials.size(); }
};

/// Δ_d(I_X). Throws DimensionTooLarge when the slice would exceed `cap`
/// monomials.
FootprintSlice standard_monomials(const NestedSequence& seq, std::uint64_t degree,
                                  std::uint64_t cap = kFootprintSliceCap);

/// H_X(d) via the pivot decomposition and bounded-composition counting; no
/// enumeration.
std::uint64_t hilbert_function(const NestedSequence& seq, std::uint64_t degree);

}  // namespace pnc
