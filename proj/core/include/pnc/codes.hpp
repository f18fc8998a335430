#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pnc/linalg.hpp"
#include "pnc/polyring.hpp"
#include "pnc/variety.hpp"

namespace pnc {

inline constexpr std::uint64_t kDefaultSearchCap = 100'000'000;
inline constexpr std::size_t kMaxCodeDimension = 64;

/// C_X(d): rows are the standard monomials of degree d evaluated at the
/// points of X, both in canonical order.
class EvaluationCode {
  public:
    EvaluationCode(NestedSequence seq, FieldPtr field, std::uint64_t degree, std::vector<ProjectivePoint> points,
                   std::vector<Monomial> monomials, std::vector<Row> matrix);

    const NestedSequence& sequence() const noexcept { return seq_; }
    const FieldPtr& field() const noexcept { return field_; }
    std::uint64_t degree() const noexcept { return degree_; }
    const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    const std::vector<Row>& matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return matrix_.size(); }
    std::size_t length() const noexcept { return points_.size(); }

  private:
    NestedSequence seq_;
    FieldPtr field_;
    std::uint64_t degree_;
    std::vector<ProjectivePoint> points_;
    std::vector<Monomial> monomials_;
    std::vector<Row> matrix_;
};

/// Builds the generator matrix and checks it has full row rank. Throws
/// TooManyPoints or DimensionTooLarge (H_X(d) > 64).
EvaluationCode build_code(const Variety& x, std::uint64_t degree,
                          std::uint64_t point_cap = kDefaultEnumerationCap);

struct SearchOptions {
    std::uint64_t cap = kDefaultSearchCap;  // max projective message classes
    unsigned threads = 1;
};

struct MinDistanceResult {
    std::uint64_t distance = 0;
    std::uint64_t classes = 0;  // (q^k - 1)/(q - 1) message classes visited
};

/// (q^k - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t message_classes(std::uint64_t q, std::uint64_t k);

/// Exhaustive minimum Hamming weight over one message per projective class
/// (first nonzero coordinate 1). Throws SearchTooLarge.
MinDistanceResult min_distance(const EvaluationCode& code, const SearchOptions& options = {});

struct DeltaEntry {
    std::uint64_t degree;
    std::uint64_t distance;

    friend bool operator==(const DeltaEntry&, const DeltaEntry&) = default;
};

/// δ_X(d) for d = 0..d_max, each by exhaustive search.
std::vector<DeltaEntry> delta_profile(const Variety& x, std::uint64_t d_max, const SearchOptions& options = {});

/// Header line `q=.. n=.. d=.. k=.. points=..`, then one line per column
/// (point) holding its k entries in the field-element grammar.
void write_generator_matrix(std::ostream& out, const EvaluationCode& code);

}  // namespace pnc
