#include <doctest.h>

#include <random>

#include "pnc/polyring.hpp"
#include "testing.hpp"

using namespace pnc;
using pnc::testing::poly;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, std::uint64_t degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    for (std::uint64_t k = 0; k < degree; ++k) ++e[var(rng)];
    return Monomial(e);
}

Polynomial random_homogeneous(std::mt19937_64& rng, const FieldPtr& f, std::size_t nvars, std::uint64_t degree,
                              std::size_t terms) {
    std::uniform_int_distribution<std::uint32_t> coeff(0, f->order() - 1);
    std::vector<Term> t;
    for (std::size_t k = 0; k < terms; ++k) t.push_back({random_monomial(rng, nvars, degree), {coeff(rng)}});
    return Polynomial::from_terms(f, nvars, std::move(t));
}

}  // namespace

TEST_CASE("grlex compares degree first, then t_n downwards") {
    CHECK(grlex_compare(mono({1, 2}), mono({2, 1})) > 0);
    CHECK(grlex_compare(mono({2}), mono({3})) < 0);
    CHECK(grlex_compare(mono({0, 1, 4}), mono({0, 4, 1})) > 0);
    CHECK(grlex_compare(mono({1, 1, 1}), mono({1, 1, 1})) == 0);
    // The leading monomial of t_i t_j (t_j^{d-1} - t_i^{d-1}) is t_i t_j^d.
    CHECK(grlex_compare(mono({1, 0, 4}), mono({4, 0, 1})) > 0);
    PNC_CHECK_ERRC(grlex_compare(mono({1, 0}), mono({1, 0, 0})), Errc::DimensionMismatch);
}

TEST_CASE("grlex is a total order compatible with multiplication") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> deg(0, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_monomial(rng, 4, deg(rng));
        const auto b = random_monomial(rng, 4, deg(rng));
        const auto c = random_monomial(rng, 4, deg(rng));
        const auto ab = grlex_compare(a, b);
        CHECK(grlex_compare(b, a) == (0 <=> ab));
        CHECK(grlex_compare(c * a, c * b) == ab);
        if (ab < 0 && grlex_compare(b, c) < 0) CHECK(grlex_compare(a, c) < 0);
        CHECK((ab == 0) == (a == b));
    }
}

TEST_CASE("all_monomials lists each degree slice in descending order") {
    const auto ms = all_monomials(3, 2);
    REQUIRE(ms.size() == 6);
    CHECK(ms.front().to_string() == "t2^2");
    CHECK(ms.back().to_string() == "t0^2");
    for (std::size_t k = 1; k < ms.size(); ++k) CHECK(grlex_compare(ms[k - 1], ms[k]) > 0);
    CHECK(all_monomials(4, 5).size() == 56);  // C(8, 3)
    CHECK(all_monomials(3, 0).size() == 1);
}

TEST_CASE("polynomial arithmetic") {
    const auto x = testing::make(2, {2, 2, 4});
    const auto f = x.field();
    const auto t0 = Polynomial::variable(f, 3, 0);
    const auto t1 = Polynomial::variable(f, 3, 1);
    const auto t2 = Polynomial::variable(f, 3, 2);

    CHECK(((t1 + t0) * (t1 + t0)).to_string() == "t1^2+t0^2");

    const auto f_e2 = t2 * poly(x, "t2^3+t1^3+t1*t0^2+t0^3");
    CHECK(f_e2.to_string() == "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3");
    CHECK(f_e2.is_homogeneous());
    CHECK(f_e2.degree() == 4);

    CHECK((f_e2 + f_e2.scaled(f->neg(f->one()))).is_zero());
    CHECK((f_e2 - f_e2).is_zero());
    CHECK((f_e2 + (-f_e2)).is_zero());
    CHECK(t1.pow(4) == t1 * t1 * t1 * t1);
    CHECK(f_e2.scaled(f->zero()).is_zero());

    const Polynomial other(Field::make(build_field(2, 2)), 2);
    PNC_CHECK_ERRC(t0 + other, Errc::DimensionMismatch);
}

TEST_CASE("evaluation") {
    const auto x = testing::make(2, {2, 2, 4});
    const auto& f = *x.field();
    const auto f_e2 = poly(x, "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3");
    const auto a = f.parse("a");
    CHECK(f_e2.evaluate(std::vector<FieldElement>{f.zero(), f.zero(), f.one()}) == f.one());
    CHECK(f_e2.evaluate(std::vector<FieldElement>{f.one(), f.one(), a}) == f.zero());
    PNC_CHECK_ERRC(f_e2.evaluate(std::vector<FieldElement>{f.one(), f.one()}), Errc::DimensionMismatch);

    // Homogeneity: f(λ P) = λ^d f(P).
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint32_t> pick(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<FieldElement> p{{pick(rng)}, {pick(rng)}, {pick(rng)}};
        const FieldElement lambda{pick(rng)};
        std::vector<FieldElement> scaled;
        for (auto c : p) scaled.push_back(f.mul(lambda, c));
        CHECK(f_e2.evaluate(scaled) == f.mul(f.pow(lambda, 4), f_e2.evaluate(p)));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(17);
    const auto f = Field::make(build_field(3, 2));
    std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
    std::uniform_int_distribution<std::uint64_t> deg(0, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = random_homogeneous(rng, f, 3, deg(rng), 4);
        const auto h = random_homogeneous(rng, f, 3, deg(rng), 4);
        const std::vector<FieldElement> p{{pick(rng)}, {pick(rng)}, {pick(rng)}};
        CHECK((g * h).evaluate(p) == f->mul(g.evaluate(p), h.evaluate(p)));
        CHECK((g + h).evaluate(p) == f->add(g.evaluate(p), h.evaluate(p)));
        if (!g.is_zero() && !h.is_zero()) CHECK((g * h).degree() == g.degree() + h.degree());
    }
}

TEST_CASE("linear_substitute") {
    const auto x = testing::make(2, {2, 2, 4});
    const auto& f = *x.field();
    const auto g = poly(x, "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3");
    const std::vector<FieldElement> zero{f.zero(), f.zero()};
    CHECK(linear_substitute(g, 0, zero) == g);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint32_t> pick(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = random_homogeneous(rng, x.field(), 3, 5, 6);
        const std::vector<FieldElement> shifts{{pick(rng)}, {pick(rng)}};
        const std::vector<FieldElement> back{f.neg(shifts[0]), f.neg(shifts[1])};
        const auto s = linear_substitute(h, 0, shifts);
        CHECK(linear_substitute(s, 0, back) == h);
        CHECK(s.is_homogeneous());
        if (!h.is_zero()) CHECK(s.degree() == h.degree());
        const std::vector<FieldElement> one_shift{{pick(rng)}};
        CHECK(linear_substitute(linear_substitute(h, 1, one_shift), 1,
                                std::vector<FieldElement>{f.neg(one_shift[0])}) == h);
    }
    PNC_CHECK_ERRC(linear_substitute(g, 0, std::vector<FieldElement>{f.one()}), Errc::DimensionMismatch);
}

TEST_CASE("text round-trips") {
    const auto x9 = testing::make(3, {3, 3, 9});
    const auto g = poly(x9, "t1^3*t0-t1*t0^3");
    CHECK(g.to_string() == "t1^3*t0-t1*t0^3");
    CHECK(poly(x9, "2*t0*t1").to_string() == "-t1*t0");
    CHECK(poly(x9, "(a+1)*t2^2 + a*t0^2").to_string() == "(a+1)*t2^2+a*t0^2");
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = random_homogeneous(rng, x9.field(), 3, 4, 5);
        CHECK(Polynomial::parse(x9.field(), 3, h.to_string()) == h);
    }
    CHECK(poly(x9, "0").is_zero());
    CHECK(poly(x9, "1").to_string() == "1");
    PNC_CHECK_ERRC(poly(x9, "t3"), Errc::ParseError);
    PNC_CHECK_ERRC(poly(x9, "t0^"), Errc::ParseError);
    PNC_CHECK_ERRC(poly(x9, "t0 ++ t1"), Errc::ParseError);
}
