#include <doctest.h>

#include <random>

#include "pnc/ideal.hpp"
#include "pnc/invariants.hpp"
#include "testing.hpp"

using namespace pnc;
using pnc::testing::poly;

namespace {

// Literal definition: no leading monomial t_i t_j^{d_j} (i < j) divides m.
bool divisible_by_some_leader(const NestedSequence& seq, const Monomial& m) {
    for (std::size_t i = 0; i < seq.nvars(); ++i)
        for (std::size_t j = i + 1; j < seq.nvars(); ++j)
            if (m[i] >= 1 && m[j] >= seq[j]) return true;
    return false;
}

std::uint64_t brute_footprint_count(const NestedSequence& seq, std::uint64_t d) {
    std::uint64_t count = 0;
    for (const auto& m : all_monomials(seq.nvars(), d))
        if (!divisible_by_some_leader(seq, m)) ++count;
    return count;
}

}  // namespace

TEST_CASE("closed-form Groebner basis") {
    const auto x = testing::make(2, {2, 2, 4});
    const GroebnerBasis gb(x);
    std::vector<std::string> text;
    for (const auto& g : gb.elements()) text.push_back(g.poly.to_string());
    CHECK(text == std::vector<std::string>{"t1^2*t0+t1*t0^2", "t2^4*t0+t2*t0^4", "t2^4*t1+t2*t1^4"});
    for (const auto& g : gb.elements()) CHECK(g.poly.leading_term().monomial == g.leading);

    CHECK(groebner_basis(testing::make(2, {2, 2})).elements().size() == 1);
    CHECK(groebner_basis(testing::make(2, {2, 2})).elements()[0].poly.to_string() == "t1^2*t0+t1*t0^2");

    const auto g339 = groebner_basis(testing::make(3, {3, 3, 9}));
    CHECK(g339.elements().size() == 3);
    CHECK(g339.elements()[0].poly.to_string() == "t1^3*t0-t1*t0^3");
}

TEST_CASE("every basis element vanishes on X") {
    std::mt19937_64 rng(43);
    int checked = 0;
    for (int trial = 0; trial < 100 && checked < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> len(1, 4);
        const auto seq = testing::random_sequence(rng, trial % 2 ? 2 : 3, len(rng), 4);
        if (cardinality(seq) > 10000 || seq.q > 256) continue;
        ++checked;
        const Variety x(seq);
        const auto pts = x.enumerate_points();
        const auto gb = groebner_basis(x);
        for (const auto& g : gb.elements()) {
            CHECK(g.poly.is_homogeneous());
            for (const auto& p : pts) CHECK(g.poly.evaluate(p.coords) == x.field()->zero());
        }
    }
}

TEST_CASE("is_standard") {
    const auto s = validate_sequence(2, {2, 2, 4});
    CHECK(is_standard(s, Monomial({5, 0, 0})));
    CHECK_FALSE(is_standard(s, Monomial({1, 2, 0})));
    CHECK(is_standard(s, Monomial({2, 1, 1})));
    CHECK(is_standard(s, Monomial({0, 0, 9})));
    CHECK_FALSE(is_standard(s, Monomial({0, 1, 4})));

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const auto seq = testing::random_sequence(rng, 2, 3, 3);
        for (std::uint64_t d = 0; d <= 6; ++d)
            for (const auto& m : all_monomials(seq.nvars(), d))
                CHECK(is_standard(seq, m) == !divisible_by_some_leader(seq, m));
    }
}

TEST_CASE("standard monomials of (2,2,4)") {
    const auto seq = validate_sequence(2, {2, 2, 4});
    const auto d4 = standard_monomials(seq, 4);
    std::vector<std::string> text;
    for (const auto& m : d4.monomials) text.push_back(m.to_string());
    // The twelve-element basis of the degree-4 slice, compared as a set.
    const std::vector<std::string> expect = {"t0^4",    "t1*t0^3",   "t2*t0^3",   "t2^2*t0^2",
                                             "t2^3*t0", "t1^4",      "t2*t1^3",   "t2^2*t1^2",
                                             "t2^3*t1", "t2^4",      "t2^2*t1*t0", "t2*t1*t0^2"};
    CHECK(d4.count() == 12);
    std::vector<std::string> sorted_text = text, sorted_expect = expect;
    std::sort(sorted_text.begin(), sorted_text.end());
    std::sort(sorted_expect.begin(), sorted_expect.end());
    CHECK(sorted_text == sorted_expect);
    for (std::size_t k = 1; k < d4.monomials.size(); ++k)
        CHECK(grlex_compare(d4.monomials[k - 1], d4.monomials[k]) > 0);

    CHECK(standard_monomials(seq, 5).count() == 13);
    CHECK(standard_monomials(seq, 0).count() == 1);
    CHECK(standard_monomials(seq, 0).monomials[0].to_string() == "1");
    PNC_CHECK_ERRC(standard_monomials(seq, 4, 11), Errc::DimensionTooLarge);
}

TEST_CASE("hilbert function") {
    const auto seq = validate_sequence(2, {2, 2, 4});
    CHECK(hilbert_function(seq, 0) == 1);
    CHECK(hilbert_function(seq, 1) == 3);
    CHECK(hilbert_function(seq, 4) == 12);
    for (std::uint64_t d = 5; d < 40; ++d) CHECK(hilbert_function(seq, d) == 13);

    const auto big = validate_sequence(2, {2, 2, 4, 16, 256, 256});
    CHECK(hilbert_function(big, reg_hilbert(big)) == cardinality(big));
    CHECK(hilbert_function(big, reg_hilbert(big) - 1) < cardinality(big));
}

TEST_CASE("hilbert function agrees with footprint counts and stabilises at reg H") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> len(1, 4);
        const std::uint32_t p = trial % 3 == 0 ? 3 : 2;
        const auto seq = testing::random_sequence(rng, p, len(rng), 3);
        const auto reg = reg_hilbert(seq);
        if (reg > 40) continue;
        CAPTURE(seq.to_string());
        std::uint64_t first_full = 0;
        std::uint64_t prev = 0;
        for (std::uint64_t d = 0; d <= reg + 2; ++d) {
            const auto h = hilbert_function(seq, d);
            CHECK(h == brute_footprint_count(seq, d));
            if (seq.nvars() <= 4) CHECK(h == standard_monomials(seq, d).count());
            CHECK(h >= prev);
            prev = h;
            if (first_full == 0 && h == cardinality(seq)) first_full = d;
        }
        CHECK(first_full == reg);
    }
}

TEST_CASE("normal form") {
    const auto x = testing::make(2, {2, 2, 4});
    const GroebnerBasis gb(x);
    CHECK(gb.normal_form(poly(x, "t0*t1^4")).to_string() == "t1*t0^4");
    CHECK(normal_form(gb, poly(x, "t1^2*t2^3-t1^5-t0*t1*t2^3+t0*t1^4")).to_string() ==
          "t2^3*t1^2+t2^3*t1*t0+t1^5+t1*t0^4");
    for (const auto& m : standard_monomials(x.sequence(), 4).monomials) {
        const auto f = Polynomial::monomial(x.field(), m, x.field()->one());
        CHECK(gb.normal_form(f) == f);
    }
    CHECK(gb.normal_form(Polynomial(x.field(), 3)).is_zero());
}

TEST_CASE("normal form is idempotent, linear and evaluation-preserving") {
    std::mt19937_64 rng(59);
    for (const auto& [p, sizes] : testing::oracle_suite()) {
        const auto x = testing::make(p, sizes);
        const GroebnerBasis gb(x);
        const auto pts = x.enumerate_points();
        const auto& f = *x.field();
        std::uniform_int_distribution<std::uint32_t> coeff(0, f.order() - 1);
        std::uniform_int_distribution<std::uint64_t> deg(1, 9);
        for (int trial = 0; trial < 20; ++trial) {
            const auto d = deg(rng);
            const auto mons = all_monomials(x.nvars(), d);
            std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
            std::vector<Term> ta, tb;
            for (int k = 0; k < 5; ++k) {
                ta.push_back({mons[pick(rng)], {coeff(rng)}});
                tb.push_back({mons[pick(rng)], {coeff(rng)}});
            }
            const auto a = Polynomial::from_terms(x.field(), x.nvars(), ta);
            const auto b = Polynomial::from_terms(x.field(), x.nvars(), tb);
            const auto na = gb.normal_form(a);
            CHECK(gb.normal_form(na) == na);
            const FieldElement c{coeff(rng)};
            CHECK(gb.normal_form(a + b.scaled(c)) == na + gb.normal_form(b).scaled(c));
            CHECK(na.is_homogeneous());
            for (const auto& t : na.terms()) CHECK(is_standard(x.sequence(), t.monomial));
            for (const auto& pt : pts) CHECK(na.evaluate(pt.coords) == a.evaluate(pt.coords));
        }
    }
}
