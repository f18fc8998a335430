#include <doctest.h>

#include <algorithm>
#include <set>

#include "pnc/ideal.hpp"
#include "pnc/invariants.hpp"
#include "pnc/oracle.hpp"
#include "testing.hpp"

using namespace pnc;

TEST_CASE("v_point_oracle") {
    const auto x = testing::make(2, {2, 2, 4});
    CHECK(v_point_oracle(x, x.unit_point(2)) == 4);
    CHECK(v_point_oracle(x, x.parse_point("(1:1:a)")) == 5);
    const auto x2 = testing::make(2, {2, 2});
    CHECK(v_point_oracle(x2, x2.unit_point(1)) == 2);
    PNC_CHECK_ERRC(v_point_oracle(x, x.unit_point(2), 12), Errc::TooManyPoints);
    const auto all = v_point_oracle_all(x, kOracleCap, 3);
    CHECK(all.size() == 13);
    CHECK(all == v_point_oracle_all(x));
}

TEST_CASE("hilbert_oracle") {
    const auto x = testing::make(2, {2, 2, 4});
    CHECK(hilbert_oracle(x, 4) == 12);
    CHECK(hilbert_oracle(x, 6) == 13);
    CHECK(hilbert_oracle(x, 0) == 1);
    CHECK(hilbert_oracle(testing::make(3, {3, 3, 9}), 0) == 1);
    PNC_CHECK_ERRC(hilbert_oracle(testing::make(2, {2, 2, 4, 16, 16}), 1), Errc::TooManyPoints);
}

TEST_CASE("reg_delta_oracle") {
    CHECK(reg_delta_oracle(testing::make(2, {2, 2, 4})) == 4);
    CHECK(reg_delta_oracle(testing::make(2, {2, 2, 2, 2, 2, 4}), kOracleCap, 4) == 7);
    CHECK(reg_delta_oracle(testing::make(2, {2, 2})) == 2);
}

TEST_CASE("zero_function_check") {
    const auto x = testing::make(2, {2, 2, 4});
    CHECK(zero_function_check(x, x.unit_point(2)));
    CHECK(zero_function_check(x, x.unit_point(0)));
    const auto x2 = testing::make(2, {2, 2});
    CHECK(zero_function_check(x2, x2.unit_point(0)));
}

TEST_CASE("uniqueness_check") {
    const auto x = testing::make(2, {2, 2, 4});
    for (std::size_t j = 0; j < 3; ++j) CHECK(uniqueness_check(x, x.unit_point(j)));
    const auto x2 = testing::make(2, {2, 2});
    CHECK(uniqueness_check(x2, x2.unit_point(0)));
    const auto x222 = testing::make(2, {2, 2, 2});
    for (const auto& pt : x222.enumerate_points()) CHECK(uniqueness_check(x222, pt));
}

TEST_CASE("oracle agrees with the closed forms on the suite") {
    for (const auto& [p, sizes] : testing::oracle_suite()) {
        const auto x = testing::make(p, sizes);
        const auto& seq = x.sequence();
        CAPTURE(seq.to_string());
        const auto pts = x.enumerate_points();
        const auto v = v_point_oracle_all(x, kOracleCap, 4);
        std::set<std::uint64_t> seen, units;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            CHECK(v[k] == v_point(x, pts[k]));
            seen.insert(v[k]);
        }
        for (std::size_t j = 0; j <= seq.n(); ++j) units.insert(v_unit(seq, j));
        CHECK(seen == units);
        CHECK(*std::min_element(v.begin(), v.end()) == reg_delta(seq));
        for (std::uint64_t d = 0; d <= reg_hilbert(seq) + 2; ++d) CHECK(hilbert_oracle(x, d) == hilbert_function(seq, d));

        // The brute-force kernel solution is the closed-form standard indicator.
        const GroebnerBasis gb(x);
        for (std::size_t j = 0; j <= seq.n(); ++j) {
            const auto sol = standard_indicator_oracle(x, x.unit_point(j));
            REQUIRE(sol.has_value());
            CHECK(*sol == standard_indicator(x, gb, x.unit_point(j)).standard);
            CHECK(zero_function_check(x, x.unit_point(j)));
        }
    }
}
