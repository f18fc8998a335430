#include "pnc/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "pnc/error.hpp"

namespace pnc {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
    if (i >= nvars) fail(Errc::DimensionMismatch, "variable index out of range");
    std::vector<std::uint32_t> e(nvars, 0);
    e[i] = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) fail(Errc::DimensionMismatch, "monomials in different rings");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (nvars() != other.nvars()) fail(Errc::DimensionMismatch, "monomials in different rings");
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (nvars() != other.nvars()) fail(Errc::DimensionMismatch, "monomials in different rings");
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = exps_.size(); i-- > 0;) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 't' + std::to_string(i);
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) fail(Errc::DimensionMismatch, "monomials in different rings");
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::vector<Monomial> all_monomials(std::size_t nvars, std::uint64_t degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    // Fill from the highest variable down: lexicographically largest t_n
    // exponent first gives descending grlex directly.
    auto rec = [&](auto&& self, std::size_t var, std::uint64_t left) -> void {
        if (var == 0) {
            e[0] = static_cast<std::uint32_t>(left);
            out.emplace_back(e);
            return;
        }
        for (std::uint64_t k = left + 1; k-- > 0;) {
            e[var] = static_cast<std::uint32_t>(k);
            self(self, var - 1, left - k);
        }
        e[var] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(e);
        return out;
    }
    rec(rec, nvars - 1, degree);
    return out;
}

Polynomial::Polynomial(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

Polynomial Polynomial::constant(FieldPtr field, std::size_t nvars, FieldElement c) {
    return monomial(std::move(field), Monomial(nvars), c);
}

Polynomial Polynomial::variable(FieldPtr field, std::size_t nvars, std::size_t i) {
    auto one = field->one();
    return monomial(std::move(field), Monomial::variable(nvars, i), one);
}

Polynomial Polynomial::monomial(FieldPtr field, Monomial m, FieldElement c) {
    Polynomial out(std::move(field), m.nvars());
    if (c.code != 0) out.terms_.push_back({std::move(m), c});
    return out;
}

Polynomial Polynomial::from_terms(FieldPtr field, std::size_t nvars, std::vector<Term> terms) {
    std::map<Monomial, FieldElement, GrlexGreater> acc;
    for (auto& t : terms) {
        if (t.monomial.nvars() != nvars) fail(Errc::DimensionMismatch, "term has wrong variable count");
        auto [it, inserted] = acc.try_emplace(std::move(t.monomial), t.coeff);
        if (!inserted) it->second = field->add(it->second, t.coeff);
    }
    Polynomial out(std::move(field), nvars);
    for (auto& [m, c] : acc)
        if (c.code != 0) out.terms_.push_back({m, c});
    return out;
}

std::uint64_t Polynomial::degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) fail(Errc::InvalidArgument, "zero polynomial has no leading term");
    return terms_.front();
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return grlex_compare(t.monomial, key) > 0;
    });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return field_->zero();
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_) fail(Errc::DimensionMismatch, "polynomials in different variable counts");
    if (field_ != other.field_ && field_->spec() != other.field_->spec())
        fail(Errc::DimensionMismatch, "polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_compatible(other);
    Polynomial out(field_, nvars_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && grlex_compare(a->monomial, b->monomial) > 0)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || grlex_compare(a->monomial, b->monomial) < 0) {
            out.terms_.push_back(*b++);
        } else {
            auto c = field_->add(a->coeff, b->coeff);
            if (c.code != 0) out.terms_.push_back({a->monomial, c});
            ++a;
            ++b;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const { return scaled(field_->neg(field_->one())); }

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::scaled(FieldElement c) const {
    Polynomial out(field_, nvars_);
    if (c.code == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, field_->mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_compatible(other);
    std::map<Monomial, FieldElement, GrlexGreater> acc;
    for (const auto& x : terms_) {
        for (const auto& y : other.terms_) {
            auto [it, inserted] = acc.try_emplace(x.monomial * y.monomial, field_->mul(x.coeff, y.coeff));
            if (!inserted) it->second = field_->add(it->second, field_->mul(x.coeff, y.coeff));
        }
    }
    Polynomial out(field_, nvars_);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c.code != 0) out.terms_.push_back({m, c});
    return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = constant(field_, nvars_, field_->one());
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> coords) const {
    if (coords.size() != nvars_) fail(Errc::DimensionMismatch, "point has wrong number of coordinates");
    FieldElement acc = field_->zero();
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (std::size_t i = 0; i < nvars_ && v.code != 0; ++i) {
            if (t.monomial[i] != 0) v = field_->mul(v, field_->pow(coords[i], t.monomial[i]));
        }
        acc = field_->add(acc, v);
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const std::uint32_t p = field_->characteristic();
    std::string out;
    for (const auto& t : terms_) {
        FieldElement c = t.coeff;
        bool negative = false;
        // Prime-field coefficients above p/2 print as negatives.
        if (p > 2 && c.code < p && c.code > p / 2) {
            negative = true;
            c = field_->neg(c);
        }
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        const bool constant_term = t.monomial.degree() == 0;
        if (c != field_->one() || constant_term) {
            std::string cs = field_->to_string(c);
            if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
            out += cs;
            if (!constant_term) out += '*';
        }
        if (!constant_term) out += t.monomial.to_string();
    }
    return out;
}

Polynomial Polynomial::parse(FieldPtr field, std::size_t nvars, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail(Errc::ParseError, "empty polynomial");

    std::vector<Term> terms;
    std::size_t i = 0;
    auto read_int = [&]() -> std::uint64_t {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail(Errc::ParseError, "expected integer at position " + std::to_string(i) + " in '" + s + "'");
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i++] - '0');
            if (v > (std::uint64_t{1} << 32)) fail(Errc::ParseError, "integer too large in '" + s + "'");
        }
        return v;
    };
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (!first) {
            fail(Errc::ParseError, "expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
        }
        first = false;
        FieldElement coeff = field->one();
        std::vector<std::uint32_t> exps(nvars, 0);
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (any && s[i] == '*') {
                ++i;
                continue;
            }
            const char ch = s[i];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff = field->mul(coeff, field->from_int(static_cast<std::int64_t>(read_int() % field->characteristic())));
            } else if (ch == 'a') {
                ++i;
                std::uint64_t e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = read_int();
                }
                coeff = field->mul(coeff, field->pow(field->generator(), e));
            } else if (ch == '(') {
                auto close = s.find(')', i);
                if (close == std::string::npos) fail(Errc::ParseError, "unbalanced '(' in '" + s + "'");
                coeff = field->mul(coeff, field->parse(std::string_view(s).substr(i + 1, close - i - 1)));
                i = close + 1;
            } else if (ch == 't') {
                ++i;
                const auto var = read_int();
                if (var >= nvars)
                    fail(Errc::ParseError, "variable t" + std::to_string(var) + " outside t0..t" + std::to_string(nvars - 1));
                std::uint64_t e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = read_int();
                }
                exps[var] += static_cast<std::uint32_t>(e);
            } else {
                fail(Errc::ParseError, std::string("unexpected '") + ch + "' in '" + s + "'");
            }
            any = true;
        }
        if (!any) fail(Errc::ParseError, "empty term in '" + s + "'");
        if (negative) coeff = field->neg(coeff);
        terms.push_back({Monomial(std::move(exps)), coeff});
    }
    return from_terms(std::move(field), nvars, std::move(terms));
}

Polynomial linear_substitute(const Polynomial& f, std::size_t pivot, std::span<const FieldElement> shifts) {
    const std::size_t nvars = f.nvars();
    if (pivot >= nvars || shifts.size() != nvars - pivot - 1)
        fail(Errc::DimensionMismatch, "shift list must cover t_{pivot+1}..t_n");
    const auto& field = f.field();
    const Polynomial tj = Polynomial::variable(field, nvars, pivot);

    // image[i] = t_i - a_i t_pivot; powers cached per variable.
    std::vector<Polynomial> image;
    image.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        Polynomial ti = Polynomial::variable(field, nvars, i);
        if (i > pivot) ti = ti - tj.scaled(shifts[i - pivot - 1]);
        image.push_back(std::move(ti));
    }
    std::vector<std::map<std::uint32_t, Polynomial>> powers(nvars);
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto it = powers[i].find(e);
        if (it == powers[i].end()) it = powers[i].emplace(e, image[i].pow(e)).first;
        return it->second;
    };

    Polynomial out(field, nvars);
    for (const auto& t : f.terms()) {
        Polynomial acc = Polynomial::constant(field, nvars, t.coeff);
        for (std::size_t i = 0; i < nvars; ++i) {
            if (t.monomial[i] == 0) continue;
            if (i <= pivot) {
                acc = acc * Polynomial::monomial(field, Monomial::variable(nvars, i, t.monomial[i]), field->one());
            } else {
                acc = acc * power_of(i, t.monomial[i]);
            }
        }
        out = out + acc;
    }
    return out;
}

}  // namespace pnc
