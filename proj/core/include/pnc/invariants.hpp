#pragma once

#include <cstdint>
#include <vector>

#include "pnc/ideal.hpp"
#include "pnc/polyring.hpp"
#include "pnc/variety.hpp"

namespace pnc {

/// Least positive m with m (d_j - 1) > sum_{i=1}^{j-1} (d_i - 1), for
/// 1 <= j <= n. Throws IndexOutOfRange.
std::uint64_t m_value(const NestedSequence& seq, std::size_t j);

/// v_{e_j}(I_X), the least degree of an indicator function of e_j.
std::uint64_t v_unit(const NestedSequence& seq, std::size_t j);

/// v_P(I_X) = v_{e_pivot(P)}. Throws PointNotInX.
std::uint64_t v_point(const Variety& x, const ProjectivePoint& point);

/// Regularity index of the minimum distance function, m_n (d_n - 1) + 1.
std::uint64_t reg_delta(const NestedSequence& seq);

/// Regularity of the Hilbert function, 1 + sum_{i=1}^n (d_i - 1).
std::uint64_t reg_hilbert(const NestedSequence& seq);

bool cayley_bacharach(const NestedSequence& seq);

struct InvariantReport {
    NestedSequence sequence;
    std::uint64_t cardinality = 0;
    std::uint64_t reg_hilbert = 0;
    std::uint64_t reg_delta = 0;
    std::vector<std::uint64_t> m_values;  // m_1 .. m_n
    std::vector<std::uint64_t> v_units;   // v_{e_0} .. v_{e_n}
    bool cayley_bacharach = false;
};

InvariantReport invariant_report(const NestedSequence& seq);

/// Closed-form indicator function of a point in standard representation:
/// products of linear forms (t_l - λ t_j) over λ in K_l \ {a_l}, times
/// t_0 (pivot 0) or t_j (f_1 - f_2) (pivot j >= 1). Throws PointNotInX or
/// NotStandardRep.
Polynomial indicator_raw(const Variety& x, const ProjectivePoint& point);

/// indicator_raw(e_j) pushed through t_i <- t_i - a_i t_j (i > j). Indicator
/// of `point` of degree v_{e_j}.
Polynomial indicator_shifted(const Variety& x, const ProjectivePoint& point);

struct IndicatorResult {
    ProjectivePoint point;
    Polynomial raw;       // the closed form that was reduced
    Polynomial standard;  // NF, leading coefficient 1
    std::uint64_t degree = 0;
    std::uint64_t v = 0;
};

/// The unique standard indicator of minimal degree, normalised so its
/// grlex-leading coefficient is 1.
IndicatorResult standard_indicator(const Variety& x, const GroebnerBasis& gb, const ProjectivePoint& point);
IndicatorResult standard_indicator(const Variety& x, const ProjectivePoint& point);

/// f homogeneous, f(P) != 0 and f(Q) == 0 for every other Q in X. Throws
/// TooManyPoints when |X| exceeds `cap`.
bool verify_indicator(const Variety& x, const Polynomial& f, const ProjectivePoint& point,
                      std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace pnc
