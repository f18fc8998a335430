#include "pnc/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "pnc/error.hpp"

namespace pnc {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// (p, s) -> modulus, highest degree first.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs>& default_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 0, 1, 1}},
        {{2, 4}, {1, 0, 0, 1, 1}},
        {{2, 5}, {1, 0, 0, 1, 0, 1}},
        {{2, 6}, {1, 0, 1, 1, 0, 1, 1}},
        {{2, 7}, {1, 0, 0, 0, 0, 0, 1, 1}},
        {{2, 8}, {1, 0, 0, 0, 1, 1, 1, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {1, 1, 2}},
        {{3, 3}, {1, 0, 2, 1}},
        {{3, 4}, {1, 0, 0, 1, 2}},
        {{3, 5}, {1, 0, 0, 0, 2, 1}},
        {{3, 6}, {1, 0, 0, 0, 0, 1, 2}},
        {{3, 7}, {1, 0, 0, 0, 0, 1, 2, 1}},
        {{3, 8}, {1, 0, 0, 0, 0, 1, 0, 0, 2}},
        {{5, 1}, {1, 3}},
        {{5, 2}, {1, 1, 2}},
        {{5, 3}, {1, 0, 3, 2}},
        {{5, 4}, {1, 0, 1, 2, 2}},
        {{5, 5}, {1, 0, 0, 0, 4, 2}},
        {{5, 6}, {1, 0, 0, 0, 0, 1, 2}},
        {{7, 1}, {1, 4}},
        {{7, 2}, {1, 1, 3}},
        {{7, 3}, {1, 0, 3, 2}},
        {{7, 4}, {1, 0, 1, 3, 5}},
        {{7, 5}, {1, 0, 0, 0, 1, 4}},
    };
    return table;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r = checked_mul(r, b);
    return r;
}

// Remainder of `num` modulo monic `den`, both low degree first.
Coeffs poly_rem(Coeffs num, const Coeffs& den, std::uint32_t p) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t k = num.size(); k-- > dd;) {
        const std::uint32_t c = num[k] % p;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) {
            num[k - dd + i] = (num[k - dd + i] + (p - c) * den[i]) % p;
        }
    }
    num.resize(std::min(num.size(), dd));
    return num;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::uint64_t FieldSpec::order() const { return ipow(p, s); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t s) {
    const auto& table = default_table();
    if (auto it = table.find({p, s}); it != table.end()) return it->second;
    return std::nullopt;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
    const std::size_t deg = monic.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    Coeffs f(monic.rbegin(), monic.rend());
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(dd));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs g(dd + 1);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < dd; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[dd] = 1;
            Coeffs r = poly_rem(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
        }
    }
    return true;
}

FieldSpec build_field(std::uint32_t p, std::uint32_t s, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (s < 1) fail(Errc::InvalidArgument, "extension degree must be positive");
    if (s > 16) fail(Errc::FieldTooLarge, "fields above 2^16 elements are not supported");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) fail(Errc::FieldTooLarge, "fields above 2^16 elements are not supported");
    }
    FieldSpec spec{p, s, {}};
    if (modulus) {
        if (modulus->size() != s + 1)
            fail(Errc::InvalidArgument, "modulus must have s+1 coefficients");
        for (auto c : *modulus)
            if (c >= p) fail(Errc::InvalidArgument, "modulus coefficient out of range [0, p)");
        if (modulus->front() != 1) fail(Errc::InvalidArgument, "modulus must be monic");
        if (!is_irreducible(p, *modulus)) fail(Errc::ReducibleModulus, "modulus is reducible over F_p");
        spec.modulus = std::move(*modulus);
    } else {
        auto m = default_modulus(p, s);
        if (!m)
            fail(Errc::NoDefaultModulus, "no bundled modulus for p=" + std::to_string(p) +
                                             ", s=" + std::to_string(s));
        spec.modulus = std::move(*m);
    }
    return spec;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    q_ = static_cast<std::uint32_t>(spec_.order());
    const std::uint32_t p = spec_.p;
    pow_p_.resize(spec_.s + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= spec_.s; ++i) pow_p_[i] = pow_p_[i - 1] * p;

    if (p != 2 && q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t x = 0; x < q_; ++x) {
            for (std::uint32_t y = 0; y < q_; ++y) {
                std::uint32_t r = 0, a = x, b = y;
                for (std::uint32_t k = 0; k < spec_.s; ++k) {
                    r += ((a % p + b % p) % p) * pow_p_[k];
                    a /= p;
                    b /= p;
                }
                add_table_[static_cast<std::size_t>(x) * q_ + y] = static_cast<std::uint16_t>(r);
            }
        }
    }

    // x mod f; for s = 1 this is the root -f_0.
    if (spec_.s == 1) {
        gen_ = {(p - spec_.modulus[1] % p) % p};
    } else {
        gen_ = {p};
    }

    auto is_primitive = [&](FieldElement x) -> bool {
        if (x.code == 0) return false;
        if (q_ == 2) return x.code == 1;
        // Square-and-multiply with the reference product.
        auto rpow = [&](FieldElement b, std::uint64_t e) {
            FieldElement r = one();
            while (e) {
                if (e & 1) r = mul_reference(r, b);
                b = mul_reference(b, b);
                e >>= 1;
            }
            return r;
        };
        for (auto f : prime_factors(q_ - 1))
            if (rpow(x, (q_ - 1) / f) == one()) return false;
        return true;
    };
    primitive_ = gen_;
    if (!is_primitive(primitive_)) {
        for (std::uint32_t c = 1; c < q_; ++c) {
            if (is_primitive({c})) {
                primitive_ = {c};
                break;
            }
        }
    }

    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(q_, 0);
    FieldElement acc = one();
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = acc.code;
        log_[acc.code] = i;
        acc = mul_reference(acc, primitive_);
    }
    for (std::uint32_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
}

std::shared_ptr<const Field> Field::make(FieldSpec spec) {
    return std::make_shared<const Field>(std::move(spec));
}

FieldElement Field::add(FieldElement x, FieldElement y) const noexcept {
    if (spec_.p == 2) return {x.code ^ y.code};
    if (!add_table_.empty()) return {add_table_[static_cast<std::size_t>(x.code) * q_ + y.code]};
    const std::uint32_t p = spec_.p;
    std::uint32_t r = 0, a = x.code, b = y.code;
    for (std::uint32_t k = 0; k < spec_.s; ++k) {
        r += ((a % p + b % p) % p) * pow_p_[k];
        a /= p;
        b /= p;
    }
    return {r};
}

FieldElement Field::neg(FieldElement x) const noexcept {
    if (spec_.p == 2) return x;
    const std::uint32_t p = spec_.p;
    std::uint32_t r = 0, a = x.code;
    for (std::uint32_t k = 0; k < spec_.s; ++k) {
        r += ((p - a % p) % p) * pow_p_[k];
        a /= p;
    }
    return {r};
}

FieldElement Field::sub(FieldElement x, FieldElement y) const noexcept { return add(x, neg(y)); }

FieldElement Field::inv(FieldElement x) const {
    if (x.code == 0) fail(Errc::ZeroInverse, "inverse of zero");
    const std::uint32_t n = q_ - 1;
    return {exp_[(n - log_[x.code]) % n]};
}

FieldElement Field::div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

FieldElement Field::pow(FieldElement x, std::uint64_t e) const noexcept {
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

FieldElement Field::mul_reference(FieldElement x, FieldElement y) const {
    const std::uint32_t p = spec_.p;
    const std::uint32_t s = spec_.s;
    const auto a = coefficients(x);
    const auto b = coefficients(y);
    Coeffs prod(2 * s - 1, 0);
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    Coeffs mod(spec_.modulus.rbegin(), spec_.modulus.rend());
    Coeffs r = poly_rem(std::move(prod), mod, p);
    r.resize(s, 0);
    return from_coefficients(r);
}

FieldElement Field::from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(spec_.p);
    return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement x) const {
    std::vector<std::uint32_t> c(spec_.s);
    std::uint32_t v = x.code;
    for (auto& ci : c) {
        ci = v % spec_.p;
        v /= spec_.p;
    }
    return c;
}

FieldElement Field::from_coefficients(std::span<const std::uint32_t> low_first) const {
    std::uint32_t r = 0;
    for (std::size_t k = 0; k < low_first.size() && k < spec_.s; ++k) r += (low_first[k] % spec_.p) * pow_p_[k];
    return {r};
}

std::uint64_t Field::multiplicative_order(FieldElement x) const {
    if (x.code == 0) fail(Errc::ZeroInverse, "zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto f : prime_factors(q_ - 1)) {
        while (ord % f == 0 && pow(x, ord / f) == one()) ord /= f;
    }
    return ord;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out(q_);
    for (std::uint32_t c = 0; c < q_; ++c) out[c] = {c};
    return out;
}

bool Field::is_subfield_size(std::uint64_t size) const noexcept {
    for (std::uint32_t a = 1; a <= spec_.s; ++a)
        if (spec_.s % a == 0 && pow_p_[a] == size) return true;
    return false;
}

std::vector<FieldElement> Field::subfield_elements(std::uint64_t size) const {
    if (!is_subfield_size(size))
        fail(Errc::NotASubfieldSize, std::to_string(size) + " is not the size of a subfield of F_" +
                                         std::to_string(q_));
    std::vector<FieldElement> out;
    out.reserve(size);
    for (std::uint32_t c = 0; c < q_; ++c)
        if (in_subfield({c}, size)) out.push_back({c});
    return out;
}

std::string Field::to_string(FieldElement x) const {
    if (spec_.s == 1) return std::to_string(x.code);
    if (x.code == 0) return "0";
    const auto c = coefficients(x);
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c[k]);
            continue;
        }
        if (c[k] != 1) out += std::to_string(c[k]) + "*";
        out += 'a';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

FieldElement Field::parse(std::string_view text) const {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) fail(Errc::ParseError, "empty field element");
    std::size_t i = 0;
    auto read_int = [&](std::uint64_t& out) {
        if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        out = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            out = out * 10 + static_cast<std::uint64_t>(t[i] - '0');
            if (out > (std::uint64_t{1} << 40)) fail(Errc::ParseError, "integer too large in '" + t + "'");
            ++i;
        }
        return true;
    };
    FieldElement acc = zero();
    bool first = true;
    while (i < t.size()) {
        bool negative = false;
        if (t[i] == '+' || t[i] == '-') {
            negative = t[i] == '-';
            ++i;
        } else if (!first) {
            fail(Errc::ParseError, "expected '+' or '-' in '" + t + "'");
        }
        first = false;
        FieldElement term = one();
        bool any = false;
        std::uint64_t v = 0;
        if (read_int(v)) {
            term = from_int(static_cast<std::int64_t>(v % spec_.p));
            any = true;
            if (i < t.size() && t[i] == '*') ++i;
        }
        if (i < t.size() && t[i] == 'a') {
            ++i;
            std::uint64_t e = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                if (!read_int(e)) fail(Errc::ParseError, "missing exponent in '" + t + "'");
            }
            term = mul(term, pow(gen_, e));
            any = true;
        }
        if (!any) fail(Errc::ParseError, "malformed field element '" + t + "'");
        acc = negative ? sub(acc, term) : add(acc, term);
    }
    return acc;
}

}  // namespace pnc
