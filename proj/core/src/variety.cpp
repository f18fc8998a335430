#include "pnc/variety.hpp"

#include <algorithm>
#include <cctype>

#include "pnc/error.hpp"

namespace pnc {

namespace {

// Returns a with p^a == v, or nullopt.
std::optional<std::uint32_t> log_p(std::uint64_t v, std::uint32_t p) {
    std::uint32_t a = 0;
    while (v > 1) {
        if (v % p != 0) return std::nullopt;
        v /= p;
        ++a;
    }
    if (v != 1) return std::nullopt;
    return a;
}

}  // namespace

std::string NestedSequence::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sizes[i]);
    }
    return out + ")";
}

NestedSequence validate_sequence(std::uint32_t p, std::vector<std::uint64_t> sizes, std::optional<std::uint64_t> q) {
    if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (sizes.size() < 2) fail(Errc::InvalidArgument, "a nested sequence needs at least d_0 and d_1 (n >= 1)");
    NestedSequence seq;
    seq.p = p;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] < 2) fail(Errc::SizeOne, "d_" + std::to_string(i) + " = " + std::to_string(sizes[i]) + " < 2");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        auto a = log_p(sizes[i], p);
        if (!a)
            fail(Errc::NotPrimePower, "d_" + std::to_string(i) + " = " + std::to_string(sizes[i]) +
                                          " is not a power of " + std::to_string(p));
        seq.exponents.push_back(*a);
    }
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i] > sizes[i + 1])
            fail(Errc::NonMonotone, "d_" + std::to_string(i) + " > d_" + std::to_string(i + 1));
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        if (seq.exponents[i + 1] % seq.exponents[i] != 0)
            fail(Errc::BrokenTower, "F_" + std::to_string(sizes[i]) + " is not a subfield of F_" +
                                        std::to_string(sizes[i + 1]));
    const std::uint64_t ambient = q.value_or(sizes.back());
    auto s = log_p(ambient, p);
    if (!s || *s == 0 || ambient < sizes.back() || *s % seq.exponents.back() != 0)
        fail(Errc::AmbientTooSmall, "F_" + std::to_string(sizes.back()) + " is not a subfield of F_" +
                                        std::to_string(ambient));
    seq.sizes = std::move(sizes);
    seq.q = ambient;
    seq.ambient_degree = *s;
    return seq;
}

std::uint64_t cardinality(const NestedSequence& seq) {
    std::uint64_t total = 1;
    std::uint64_t suffix = 1;
    for (std::size_t i = seq.n(); i >= 1; --i) {
        suffix = checked_mul(suffix, seq[i]);
        total = checked_add(total, suffix);
    }
    return total;
}

std::size_t pivot(std::span<const FieldElement> coords) {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i].code != 0) return i;
    fail(Errc::ZeroPoint, "the zero vector is not a projective point");
}

Variety::Variety(NestedSequence seq, std::optional<std::vector<std::uint32_t>> modulus)
    : seq_(std::move(seq)), field_(Field::make(build_field(seq_.p, seq_.ambient_degree, std::move(modulus)))) {
    levels_.reserve(seq_.nvars());
    for (std::size_t i = 0; i < seq_.nvars(); ++i) levels_.push_back(field_->subfield_elements(seq_[i]));
}

bool Variety::contains(const ProjectivePoint& point) const {
    if (point.coords.size() != nvars()) return false;
    for (std::size_t i = 0; i < point.pivot; ++i)
        if (point.coords[i].code != 0) return false;
    if (point.pivot >= nvars() || point.coords[point.pivot] != field_->one()) return false;
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (point.coords[i].code >= field_->order()) return false;
        if (!field_->in_subfield(point.coords[i], seq_[i])) return false;
    }
    return true;
}

ProjectivePoint Variety::point(std::vector<FieldElement> coords) const {
    if (coords.size() != nvars())
        fail(Errc::DimensionMismatch, "expected " + std::to_string(nvars()) + " coordinates");
    ProjectivePoint pt{std::move(coords), 0};
    pt.pivot = pnc::pivot(pt.coords);
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (pt.coords[i].code >= field_->order() || !field_->in_subfield(pt.coords[i], seq_[i]))
            fail(Errc::PointNotInX, "coordinate " + std::to_string(i) + " of " + to_string(pt) +
                                        " is not in K_" + std::to_string(i) + " = F_" + std::to_string(seq_[i]));
    }
    if (pt.coords[pt.pivot] != field_->one())
        fail(Errc::NotStandardRep, "first nonzero coordinate of " + to_string(pt) + " is not 1");
    return pt;
}

ProjectivePoint Variety::unit_point(std::size_t j) const {
    if (j >= nvars()) fail(Errc::IndexOutOfRange, "unit point index out of range");
    std::vector<FieldElement> c(nvars(), field_->zero());
    c[j] = field_->one();
    return {std::move(c), j};
}

std::vector<FieldElement> Variety::shifts(const ProjectivePoint& point) const {
    return {point.coords.begin() + static_cast<std::ptrdiff_t>(point.pivot) + 1, point.coords.end()};
}

std::vector<ProjectivePoint> Variety::enumerate_points(std::uint64_t cap) const {
    const std::uint64_t total = cardinality();
    if (total > cap)
        fail(Errc::TooManyPoints, "|X| = " + std::to_string(total) + " exceeds the enumeration cap " +
                                      std::to_string(cap));
    std::vector<ProjectivePoint> out;
    out.reserve(total);
    const std::size_t nv = nvars();
    for (std::size_t j = 0; j < nv; ++j) {
        std::vector<std::size_t> idx(nv, 0);
        bool done = false;
        while (!done) {
            std::vector<FieldElement> c(nv, field_->zero());
            c[j] = field_->one();
            for (std::size_t i = j + 1; i < nv; ++i) c[i] = levels_[i][idx[i]];
            out.push_back({std::move(c), j});
            // Odometer over K_{j+1} x ... x K_n, last coordinate fastest.
            done = true;
            for (std::size_t k = nv; k > j + 1;) {
                --k;
                if (++idx[k] < levels_[k].size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    return out;
}

std::string Variety::to_string(const ProjectivePoint& point) const {
    std::string out = "(";
    for (std::size_t i = 0; i < point.coords.size(); ++i) {
        if (i) out += ':';
        out += field_->to_string(point.coords[i]);
    }
    return out + ")";
}

ProjectivePoint Variety::parse_point(std::string_view text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        fail(Errc::ParseError, "point must look like (c0:...:cn), got '" + s + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<FieldElement> coords;
    std::size_t start = 0;
    while (true) {
        auto colon = s.find(':', start);
        coords.push_back(field_->parse(std::string_view(s).substr(start, colon - start)));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    return point(std::move(coords));
}

}  // namespace pnc
