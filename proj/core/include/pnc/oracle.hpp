#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pnc/polyring.hpp"
#include "pnc/variety.hpp"

namespace pnc {

// Brute-force linear algebra over F_q. Nothing here calls the closed-form
// invariants, the Hilbert-function count or the footprint description; rows
// are built from all monomials of each degree.

inline constexpr std::uint64_t kOracleCap = 2000;

/// Least d >= 1 such that the unit vector at P lies in the evaluation code of
/// degree d. Throws TooManyPoints.
std::uint64_t v_point_oracle(const Variety& x, const ProjectivePoint& point, std::uint64_t cap = kOracleCap);

/// v_point_oracle for every point, aligned with Variety::enumerate_points().
std::vector<std::uint64_t> v_point_oracle_all(const Variety& x, std::uint64_t cap = kOracleCap,
                                              unsigned threads = 1);

/// Rank of the evaluation matrix of all degree-d monomials on X.
std::uint64_t hilbert_oracle(const Variety& x, std::uint64_t degree, std::uint64_t cap = kOracleCap);

/// min over P of v_point_oracle.
std::uint64_t reg_delta_oracle(const Variety& x, std::uint64_t cap = kOracleCap, unsigned threads = 1);

/// True iff no degree 1 <= d <= sum_{i != pivot}(d_i - 1) admits a polynomial
/// vanishing on X \ {P} but not at P.
bool zero_function_check(const Variety& x, const ProjectivePoint& point, std::uint64_t cap = kOracleCap);

/// At d = v_point_oracle(P): the standard-monomial coefficient vectors whose
/// evaluation is supported exactly on {P} form one projective class. Standard
/// here means not divisible by any leading monomial t_i t_j^{d_j}.
bool uniqueness_check(const Variety& x, const ProjectivePoint& point, std::uint64_t cap = kOracleCap);

/// The kernel solution behind uniqueness_check as a polynomial with leading
/// coefficient 1; nullopt when the class is not unique.
std::optional<Polynomial> standard_indicator_oracle(const Variety& x, const ProjectivePoint& point,
                                                    std::uint64_t cap = kOracleCap);

}  // namespace pnc
