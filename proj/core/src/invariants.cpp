#include "pnc/invariants.hpp"

#include <algorithm>

#include "pnc/error.hpp"

namespace pnc {

namespace {

std::uint64_t tail_sum(const NestedSequence& seq, std::size_t from) {
    std::uint64_t s = 0;
    for (std::size_t i = from; i <= seq.n(); ++i) s = checked_add(s, seq[i] - 1);
    return s;
}

void require_member(const Variety& x, const ProjectivePoint& point) {
    if (point.coords.size() != x.nvars())
        fail(Errc::PointNotInX, "point has " + std::to_string(point.coords.size()) + " coordinates, X lives in P^" +
                                    std::to_string(x.n()));
    // Re-validating through Variety::point() yields NotStandardRep or
    // PointNotInX with a precise message.
    if (!x.contains(point)) (void)x.point(point.coords);
    if (!x.contains(point)) fail(Errc::PointNotInX, x.to_string(point) + " is not a point of X");
}

Polynomial var_power(const FieldPtr& field, std::size_t nvars, std::size_t i, std::uint64_t e) {
    return Polynomial::monomial(field, Monomial::variable(nvars, i, static_cast<std::uint32_t>(e)), field->one());
}

}  // namespace

std::uint64_t m_value(const NestedSequence& seq, std::size_t j) {
    if (j < 1 || j > seq.n())
        fail(Errc::IndexOutOfRange, "m_j is defined for 1 <= j <= n = " + std::to_string(seq.n()));
    std::uint64_t below = 0;
    for (std::size_t i = 1; i < j; ++i) below = checked_add(below, seq[i] - 1);
    return below / (seq[j] - 1) + 1;
}

std::uint64_t reg_hilbert(const NestedSequence& seq) { return checked_add(tail_sum(seq, 1), 1); }

std::uint64_t v_unit(const NestedSequence& seq, std::size_t j) {
    if (j > seq.n()) fail(Errc::IndexOutOfRange, "unit point index exceeds n = " + std::to_string(seq.n()));
    if (j == 0) return reg_hilbert(seq);
    // For j = 1 this reproduces reg_hilbert since m_1 = 1.
    const std::uint64_t lead = checked_mul(m_value(seq, j), seq[j] - 1);
    return checked_add(checked_add(lead, 1), tail_sum(seq, j + 1));
}

std::uint64_t v_point(const Variety& x, const ProjectivePoint& point) {
    require_member(x, point);
    return v_unit(x.sequence(), point.pivot);
}

std::uint64_t reg_delta(const NestedSequence& seq) {
    return checked_add(checked_mul(m_value(seq, seq.n()), seq[seq.n()] - 1), 1);
}

bool cayley_bacharach(const NestedSequence& seq) { return reg_delta(seq) == reg_hilbert(seq); }

InvariantReport invariant_report(const NestedSequence& seq) {
    InvariantReport r;
    r.sequence = seq;
    r.cardinality = cardinality(seq);
    r.reg_hilbert = reg_hilbert(seq);
    r.reg_delta = reg_delta(seq);
    for (std::size_t j = 1; j <= seq.n(); ++j) r.m_values.push_back(m_value(seq, j));
    for (std::size_t j = 0; j <= seq.n(); ++j) r.v_units.push_back(v_unit(seq, j));
    r.cayley_bacharach = r.reg_delta == r.reg_hilbert;
    return r;
}

Polynomial indicator_raw(const Variety& x, const ProjectivePoint& point) {
    require_member(x, point);
    const auto& seq = x.sequence();
    const auto& field = x.field();
    const std::size_t nv = x.nvars();
    const std::size_t j = point.pivot;
    const auto tj = Polynomial::variable(field, nv, j);

    // prod_{l > j} prod_{λ in K_l \ {a_l}} (t_l - λ t_j)
    Polynomial linear = Polynomial::constant(field, nv, field->one());
    for (std::size_t l = j + 1; l < nv; ++l) {
        const auto tl = Polynomial::variable(field, nv, l);
        for (auto lambda : x.level(l)) {
            if (lambda == point.coords[l]) continue;
            linear = linear * (tl - tj.scaled(lambda));
        }
    }
    if (j == 0) return tj * linear;

    const std::uint64_t big = checked_mul(m_value(seq, j), seq[j] - 1);
    const std::uint64_t below = tail_sum(seq, 1) - tail_sum(seq, j);  // sum_{i=1}^{j-1} (d_i - 1)

    // f_1 = t_j^M + sum over nonempty S ⊆ {1..j-1} of
    //       (-1)^|S| t_{min S}^{M - sum_{k in S \ min}(d_k - 1)} prod_{k in S \ min} t_k^{d_k - 1}
    std::vector<Term> f1_terms;
    f1_terms.push_back({Monomial::variable(nv, j, static_cast<std::uint32_t>(big)), field->one()});
    const std::size_t width = j - 1;
    const FieldElement minus_one = field->neg(field->one());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
        std::vector<std::uint32_t> e(nv, 0);
        std::size_t first = 0;
        std::uint64_t used = 0;
        std::size_t size = 0;
        for (std::size_t b = 0; b < width; ++b) {
            if (!(mask >> b & 1)) continue;
            const std::size_t k = b + 1;
            if (size++ == 0) {
                first = k;
            } else {
                e[k] = static_cast<std::uint32_t>(seq[k] - 1);
                used += seq[k] - 1;
            }
        }
        e[first] = static_cast<std::uint32_t>(big - used);
        f1_terms.push_back({Monomial(std::move(e)), size % 2 ? minus_one : field->one()});
    }
    Polynomial f1 = Polynomial::from_terms(field, nv, std::move(f1_terms));

    // f_2 = t_0^{M - sum_{i<j}(d_i - 1)} prod_{i=1}^{j-1} (t_0^{d_i - 1} - t_i^{d_i - 1})
    Polynomial f2 = var_power(field, nv, 0, big - below);
    for (std::size_t i = 1; i < j; ++i)
        f2 = f2 * (var_power(field, nv, 0, seq[i] - 1) - var_power(field, nv, i, seq[i] - 1));

    return tj * (f1 - f2) * linear;
}

Polynomial indicator_shifted(const Variety& x, const ProjectivePoint& point) {
    require_member(x, point);
    const std::size_t j = point.pivot;
    Polynomial unit = indicator_raw(x, x.unit_point(j));
    if (j == x.n()) return unit;
    const auto shifts = x.shifts(point);
    return linear_substitute(unit, j, shifts);
}

IndicatorResult standard_indicator(const Variety& x, const GroebnerBasis& gb, const ProjectivePoint& point) {
    Polynomial raw = indicator_shifted(x, point);
    Polynomial nf = gb.normal_form(raw);
    if (nf.is_zero()) fail(Errc::InvalidArgument, "indicator reduced to zero; basis does not match X");
    nf = nf.scaled(x.field()->inv(nf.leading_term().coeff));
    IndicatorResult r{point, std::move(raw), std::move(nf), 0, v_point(x, point)};
    r.degree = r.standard.degree();
    return r;
}

IndicatorResult standard_indicator(const Variety& x, const ProjectivePoint& point) {
    return standard_indicator(x, GroebnerBasis(x), point);
}

bool verify_indicator(const Variety& x, const Polynomial& f, const ProjectivePoint& point, std::uint64_t cap) {
    const auto points = x.enumerate_points(cap);
    if (f.is_zero() || !f.is_homogeneous()) return false;
    for (const auto& q : points) {
        const bool nonzero = f.evaluate(q.coords).code != 0;
        if (nonzero != (q == point)) return false;
    }
    return std::find(points.begin(), points.end(), point) != points.end();
}

}  // namespace pnc
