#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pnc {

/// An element of F_{p^s} in polynomial-basis form. `code` packs the
/// coefficient vector as sum c_k p^k, so numeric order of codes is the
/// canonical element order (lexicographic, high-degree coefficient first).
struct FieldElement {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// F_p[x]/(modulus). `modulus` lists the s+1 coefficients of a monic
/// irreducible polynomial, highest degree first (so modulus.front() == 1).
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t s = 1;
    std::vector<std::uint32_t> modulus;

    std::uint64_t order() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

bool is_prime(std::uint64_t n);

/// Shipped default moduli: Conway polynomials for p = 2, the first primitive
/// polynomial in coefficient order otherwise. Covers p in {2,3,5,7}, s <= 8,
/// p^s <= 2^16.
std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t s);

/// Validates (p, s, modulus) and returns the spec. Throws
/// NonPrimeCharacteristic, ReducibleModulus, NoDefaultModulus or FieldTooLarge.
FieldSpec build_field(std::uint32_t p, std::uint32_t s,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Monic polynomial over F_p (coefficients highest degree first) irreducible?
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// Immutable arithmetic context for one finite field.
class Field {
  public:
    explicit Field(FieldSpec spec);

    static std::shared_ptr<const Field> make(FieldSpec spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t characteristic() const noexcept { return spec_.p; }
    std::uint32_t degree() const noexcept { return spec_.s; }
    std::uint32_t order() const noexcept { return q_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// The class of x modulo the modulus, printed as `a`.
    FieldElement generator() const noexcept { return gen_; }
    /// A generator of the multiplicative group (equals generator() when the
    /// modulus is primitive, which every default modulus is).
    FieldElement primitive_element() const noexcept { return primitive_; }

    FieldElement add(FieldElement x, FieldElement y) const noexcept;
    FieldElement sub(FieldElement x, FieldElement y) const noexcept;
    FieldElement neg(FieldElement x) const noexcept;
    FieldElement mul(FieldElement x, FieldElement y) const noexcept {
        if (x.code == 0 || y.code == 0) return {0};
        return {exp_[log_[x.code] + log_[y.code]]};
    }
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const;
    FieldElement pow(FieldElement x, std::uint64_t e) const noexcept;

    /// Schoolbook multiplication in the polynomial basis, reduced by the
    /// modulus. Used to build the log tables; exposed for cross-checking.
    FieldElement mul_reference(FieldElement x, FieldElement y) const;

    FieldElement from_int(std::int64_t v) const noexcept;
    std::vector<std::uint32_t> coefficients(FieldElement x) const;  // low degree first
    FieldElement from_coefficients(std::span<const std::uint32_t> low_first) const;

    std::uint64_t multiplicative_order(FieldElement x) const;

    /// All q elements in canonical order.
    std::vector<FieldElement> elements() const;
    /// {x : x^size = x}, canonical order. Throws NotASubfieldSize.
    std::vector<FieldElement> subfield_elements(std::uint64_t size) const;
    bool is_subfield_size(std::uint64_t size) const noexcept;
    bool in_subfield(FieldElement x, std::uint64_t size) const noexcept {
        return pow(x, size) == x;
    }

    /// `0`, `1`, `a`, `a+1`, `2*a^2+a` ... For s = 1 the plain residue.
    std::string to_string(FieldElement x) const;
    /// Inverse of to_string; also accepts any sum of `c`, `c*a^k`, `a^k`.
    FieldElement parse(std::string_view text) const;

  private:
    FieldSpec spec_;
    std::uint32_t q_;
    FieldElement gen_;
    FieldElement primitive_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> log_;  // length q
    std::vector<std::uint32_t> pow_p_;
    std::vector<std::uint16_t> add_table_;  // q*q when q <= 256 and p != 2
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace pnc
