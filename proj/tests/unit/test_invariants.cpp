#include <doctest.h>

#include <random>

#include "pnc/ideal.hpp"
#include "pnc/invariants.hpp"
#include "testing.hpp"

using namespace pnc;
using pnc::testing::poly;

namespace {

// Least positive m with m (d_j - 1) > sum_{i=1}^{j-1} (d_i - 1), by scanning.
std::uint64_t m_scan(const NestedSequence& seq, std::size_t j) {
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i < j; ++i) sum += seq[i] - 1;
    std::uint64_t m = 1;
    while (m * (seq[j] - 1) <= sum) ++m;
    return m;
}

struct TableRow {
    std::uint32_t p;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> v;
    std::uint64_t card, reg_h, reg_d;
};

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        {2, {2, 2, 4, 4, 16, 16}, {38, 38, 37, 37, 31, 31}, 13585, 38, 31},
        {2, {2, 2, 2, 4, 4, 4}, {12, 12, 12, 10, 10, 10}, 469, 12, 10},
        {2, {2, 2, 2, 2, 4, 4}, {10, 10, 10, 10, 10, 10}, 245, 10, 10},
        {2, {2, 2, 2, 2, 2, 4}, {8, 8, 8, 8, 8, 7}, 125, 8, 7},
        {2, {2, 2, 4, 16, 256, 256}, {530, 530, 529, 526, 511, 511}, 13697281, 530, 511},
        {3, {3, 3, 3, 3, 9, 81}, {95, 95, 95, 95, 89, 81}, 29242, 95, 81},
        {2, {2, 2, 4}, {5, 5, 4}, 13, 5, 4},
    };
    return rows;
}

}  // namespace

TEST_CASE("m values") {
    const auto s = validate_sequence(2, {2, 2, 4, 4, 16, 16});
    CHECK(m_value(s, 1) == 1);
    CHECK(m_value(s, 5) == 2);
    CHECK(m_value(validate_sequence(2, {2, 2, 2, 2, 2, 4}), 5) == 2);
    PNC_CHECK_ERRC(m_value(s, 0), Errc::IndexOutOfRange);
    PNC_CHECK_ERRC(m_value(s, 6), Errc::IndexOutOfRange);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
        std::uniform_int_distribution<std::size_t> len(1, 8);
        const auto seq = testing::random_sequence(rng, p, len(rng), 4);
        for (std::size_t j = 1; j <= seq.n(); ++j) CHECK(m_value(seq, j) == m_scan(seq, j));
    }
}

TEST_CASE("closed-form invariants reproduce the tables") {
    for (const auto& row : table_rows()) {
        const auto seq = validate_sequence(row.p, row.sizes);
        CAPTURE(seq.to_string());
        std::vector<std::uint64_t> v;
        for (std::size_t j = 0; j <= seq.n(); ++j) v.push_back(v_unit(seq, j));
        CHECK(v == row.v);
        CHECK(cardinality(seq) == row.card);
        CHECK(reg_hilbert(seq) == row.reg_h);
        CHECK(reg_delta(seq) == row.reg_d);
        CHECK(cayley_bacharach(seq) == (row.reg_h == row.reg_d));
        const auto report = invariant_report(seq);
        CHECK(report.v_units == row.v);
        CHECK(report.m_values.size() == seq.n());
        CHECK(report.cardinality == row.card);
    }
    CHECK(reg_hilbert(validate_sequence(2, {2, 2})) == 2);
    CHECK_FALSE(cayley_bacharach(validate_sequence(2, {2, 2, 4})));
    CHECK(cayley_bacharach(validate_sequence(2, {2, 2, 2, 2, 4, 4})));
    PNC_CHECK_ERRC(v_unit(validate_sequence(2, {2, 2}), 2), Errc::IndexOutOfRange);
}

TEST_CASE("monotone chain and its endpoints on random sequences") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
        std::uniform_int_distribution<std::size_t> len(1, 8);
        const auto seq = testing::random_sequence(rng, p, len(rng), 6);
        CAPTURE(seq.to_string());
        for (std::size_t j = 0; j < seq.n(); ++j) CHECK(v_unit(seq, j) >= v_unit(seq, j + 1));
        CHECK(v_unit(seq, 0) == reg_hilbert(seq));
        CHECK(v_unit(seq, seq.n()) == reg_delta(seq));
        CHECK(cayley_bacharach(seq) == (reg_delta(seq) == reg_hilbert(seq)));
    }
}

TEST_CASE("projective space is Cayley-Bacharach") {
    for (std::uint64_t q : {2, 3, 4}) {
        const std::uint32_t p = q == 3 ? 3 : 2;
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto seq = validate_sequence(p, std::vector<std::uint64_t>(n + 1, q));
            CHECK(reg_delta(seq) == n * (q - 1) + 1);
            CHECK(reg_hilbert(seq) == n * (q - 1) + 1);
            CHECK(cayley_bacharach(seq));
        }
    }
}

TEST_CASE("v_point follows the pivot") {
    const auto x = testing::make(2, {2, 2, 4});
    CHECK(v_point(x, x.parse_point("(1:0:a)")) == 5);
    CHECK(v_point(x, x.parse_point("(0:0:1)")) == 4);
    CHECK(v_point(x, x.parse_point("(0:1:a+1)")) == 5);
    ProjectivePoint bogus{{x.field()->zero(), x.field()->parse("a"), x.field()->one()}, 1};
    PNC_CHECK_ERRC(v_point(x, bogus), Errc::PointNotInX);
}

TEST_CASE("worked-example indicators") {
    const auto x = testing::make(2, {2, 2, 4});
    const GroebnerBasis gb(x);

    const auto raw0 = indicator_raw(x, x.unit_point(0));
    CHECK(raw0 == poly(x, "t0") * poly(x, "t1+t0") * poly(x, "t2+t0") * poly(x, "t2+a*t0") *
                      poly(x, "t2+(a+1)*t0"));
    CHECK(raw0.degree() == 5);

    const auto raw1 = indicator_raw(x, x.unit_point(1));
    CHECK(raw1 == poly(x, "t1") * poly(x, "t1-t0") * poly(x, "t2^3-t1^3"));
    CHECK(raw1.degree() == 5);
    CHECK(raw1.coefficient(Monomial({1, 4, 0})) != x.field()->zero());

    const auto raw2 = indicator_raw(x, x.unit_point(2));
    CHECK(raw2.degree() == 4);
    CHECK(gb.normal_form(raw2).to_string() == "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3");

    CHECK(standard_indicator(x, x.unit_point(0)).standard.to_string() == "t2^3*t1*t0+t2^3*t0^2+t1*t0^4+t0^5");
    CHECK(standard_indicator(x, gb, x.unit_point(1)).standard.to_string() == "t2^3*t1^2+t2^3*t1*t0+t1^5+t1*t0^4");
    const auto r2 = standard_indicator(x, gb, x.unit_point(2));
    CHECK(r2.standard.to_string() == "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3");
    CHECK(r2.degree == 4);
    CHECK(r2.v == 4);
}

TEST_CASE("verify_indicator") {
    const auto x = testing::make(2, {2, 2, 4});
    const auto f_e2 = poly(x, "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3");
    CHECK(verify_indicator(x, f_e2, x.unit_point(2)));
    CHECK_FALSE(verify_indicator(x, f_e2, x.unit_point(1)));
    CHECK_FALSE(verify_indicator(x, Polynomial(x.field(), 3), x.unit_point(2)));
    CHECK_FALSE(verify_indicator(x, poly(x, "t2^4+t0"), x.unit_point(2)));
    PNC_CHECK_ERRC(verify_indicator(x, f_e2, x.unit_point(2), 5), Errc::TooManyPoints);
}

TEST_CASE("shifted indicator of a non-unit point") {
    const auto x = testing::make(2, {2, 2, 4});
    const auto pt = x.parse_point("(0:1:a)");
    const auto h = indicator_shifted(x, pt);
    CHECK(h.degree() == 5);
    CHECK(verify_indicator(x, h, pt));
    CHECK(indicator_shifted(x, x.unit_point(1)) == indicator_raw(x, x.unit_point(1)));
    CHECK(indicator_shifted(x, x.unit_point(2)) == indicator_raw(x, x.unit_point(2)));
}

TEST_CASE("indicator constructions on the oracle suite") {
    for (const auto& [p, sizes] : testing::oracle_suite()) {
        const auto x = testing::make(p, sizes);
        const GroebnerBasis gb(x);
        const auto& seq = x.sequence();
        const auto& f = *x.field();
        CAPTURE(seq.to_string());
        for (const auto& pt : x.enumerate_points()) {
            CAPTURE(x.to_string(pt));
            const auto j = pt.pivot;
            const auto v = v_point(x, pt);

            const auto raw = indicator_raw(x, pt);
            CHECK(raw.is_homogeneous());
            CHECK(raw.degree() == v);
            CHECK(verify_indicator(x, raw, pt));

            const auto res = standard_indicator(x, gb, pt);
            CHECK(res.degree == v);
            CHECK(res.standard.degree() == v);
            CHECK(res.standard.leading_term().coeff == f.one());
            CHECK(verify_indicator(x, res.standard, pt));
            CHECK(verify_indicator(x, res.raw, pt));

            std::uint64_t bound = 0;
            for (std::size_t i = 0; i < seq.nvars(); ++i)
                if (i != j) bound += seq[i] - 1;
            CHECK(v > bound);

            for (const auto& t : res.standard.terms()) {
                CHECK(is_standard(seq, t.monomial));
                CHECK(t.monomial[j] >= 1);
            }
            bool all_squared = true;
            for (const auto& t : res.standard.terms()) all_squared = all_squared && t.monomial[j] >= 2;
            CHECK_FALSE(all_squared);

            // Scalar freedom: any nonzero multiple normalises to the same thing.
            for (auto c : f.elements()) {
                if (c == f.zero()) continue;
                auto scaled = gb.normal_form(indicator_shifted(x, pt).scaled(c));
                scaled = scaled.scaled(f.inv(scaled.leading_term().coeff));
                CHECK(scaled == res.standard);
            }
        }
        for (std::size_t j = 0; j < seq.nvars(); ++j) {
            // In the normal form of the unit indicator every t_j exponent is 1
            // or exceeds d_j - 1.
            const auto nf = gb.normal_form(indicator_raw(x, x.unit_point(j)));
            for (const auto& t : nf.terms()) CHECK((t.monomial[j] == 1 || t.monomial[j] > seq[j] - 1));
        }
    }
}

TEST_CASE("degree chain inequality between consecutive pivots") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> len(2, 8);
        const auto seq = testing::random_sequence(rng, trial % 2 ? 2 : 3, len(rng), 6);
        for (std::size_t j = 1; j + 1 <= seq.n(); ++j) {
            std::uint64_t tail_j = 0, tail_next = 0;
            for (std::size_t i = j + 1; i <= seq.n(); ++i) tail_j += seq[i] - 1;
            for (std::size_t i = j + 2; i <= seq.n(); ++i) tail_next += seq[i] - 1;
            CHECK(m_value(seq, j + 1) * (seq[j + 1] - 1) + 1 + tail_next <=
                  m_value(seq, j) * (seq[j] - 1) + 1 + tail_j);
        }
    }
}
