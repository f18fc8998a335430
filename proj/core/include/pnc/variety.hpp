#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnc/field.hpp"

namespace pnc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Defining sequence d = (d_0, ..., d_n) of a projective nested product of
/// fields: d_i = p^{a_i}, 2 <= d_i <= d_{i+1}, a_i | a_{i+1}, a_n | s where
/// q = p^s is the ambient field.
struct NestedSequence {
    std::uint32_t p = 2;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> exponents;  // a_i
    std::uint64_t q = 0;
    std::uint32_t ambient_degree = 0;  // s

    std::size_t n() const noexcept { return sizes.size() - 1; }
    std::size_t nvars() const noexcept { return sizes.size(); }
    std::uint64_t operator[](std::size_t i) const noexcept { return sizes[i]; }

    std::string to_string() const;  // "(2,2,4)"

    friend bool operator==(const NestedSequence&, const NestedSequence&) = default;
};

/// Validates and returns the sequence; q defaults to d_n. Throws
/// NonPrimeCharacteristic, SizeOne, NotPrimePower, NonMonotone, BrokenTower or
/// AmbientTooSmall (checked in that order).
NestedSequence validate_sequence(std::uint32_t p, std::vector<std::uint64_t> sizes,
                                 std::optional<std::uint64_t> q = std::nullopt);

/// 1 + sum_{i=1}^n d_i d_{i+1} ... d_n, without enumeration.
std::uint64_t cardinality(const NestedSequence& seq);

/// A point of X in standard representation: coords[pivot] == 1 and all
/// earlier coordinates zero.
struct ProjectivePoint {
    std::vector<FieldElement> coords;
    std::size_t pivot = 0;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Least index with a nonzero coordinate. Throws ZeroPoint.
std::size_t pivot(std::span<const FieldElement> coords);

/// X = [K_0 x ... x K_n] inside P^n(F_q) with its ambient field and the
/// materialized subfield levels.
class Variety {
  public:
    explicit Variety(NestedSequence seq, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    const NestedSequence& sequence() const noexcept { return seq_; }
    const FieldPtr& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return seq_.n(); }
    std::size_t nvars() const noexcept { return seq_.nvars(); }
    const std::vector<FieldElement>& level(std::size_t i) const { return levels_.at(i); }
    std::uint64_t cardinality() const { return pnc::cardinality(seq_); }

    bool contains(const ProjectivePoint& point) const;
    /// Validates coordinates. Throws NotStandardRep or PointNotInX.
    ProjectivePoint point(std::vector<FieldElement> coords) const;
    ProjectivePoint unit_point(std::size_t j) const;
    /// Shifts (a_{j+1}, ..., a_n) of a point with pivot j.
    std::vector<FieldElement> shifts(const ProjectivePoint& point) const;

    /// Ascending pivot, then lexicographic on coordinates in canonical element
    /// order. Throws TooManyPoints when |X| exceeds `cap`.
    std::vector<ProjectivePoint> enumerate_points(std::uint64_t cap = kDefaultEnumerationCap) const;

    std::string to_string(const ProjectivePoint& point) const;  // "(1:0:a)"
    /// Parses `(c0:...:cn)`; validates like point().
    ProjectivePoint parse_point(std::string_view text) const;

  private:
    NestedSequence seq_;
    FieldPtr field_;
    std::vector<std::vector<FieldElement>> levels_;
};

}  // namespace pnc
