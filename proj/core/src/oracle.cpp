#include "pnc/oracle.hpp"

#include <algorithm>
#include <thread>

#include "pnc/error.hpp"
#include "pnc/linalg.hpp"

namespace pnc {

namespace {

std::vector<ProjectivePoint> bounded_points(const Variety& x, std::uint64_t cap) {
    if (x.cardinality() > cap)
        fail(Errc::TooManyPoints, "oracle needs |X| <= " + std::to_string(cap) + ", got " +
                                      std::to_string(x.cardinality()));
    return x.enumerate_points(cap);
}

std::size_t index_of(const std::vector<ProjectivePoint>& points, const ProjectivePoint& p) {
    auto it = std::find(points.begin(), points.end(), p);
    if (it == points.end()) fail(Errc::PointNotInX, "point is not in X");
    return static_cast<std::size_t>(it - points.begin());
}

Row evaluate_all(const Field& f, const Monomial& m, const std::vector<ProjectivePoint>& points) {
    Row row;
    row.reserve(points.size());
    for (const auto& p : points) {
        FieldElement v = f.one();
        for (std::size_t i = 0; i < m.nvars() && v.code != 0; ++i)
            if (m[i] != 0) v = f.mul(v, f.pow(p.coords[i], m[i]));
        row.push_back(v);
    }
    return row;
}

// Row spaces of the degree-d evaluation codes for d = 0, 1, 2, ...; the
// degree d+1 space is spanned by the coordinate-wise products t_i * v of a
// basis of the degree d space.
class DegreeSpans {
  public:
    DegreeSpans(FieldPtr field, const std::vector<ProjectivePoint>& points)
        : field_(std::move(field)), span_(field_, points.size()) {
        const std::size_t nv = points.front().coords.size();
        columns_.assign(nv, Row(points.size()));
        for (std::size_t c = 0; c < points.size(); ++c)
            for (std::size_t i = 0; i < nv; ++i) columns_[i][c] = points[c].coords[i];
        span_.insert(Row(points.size(), field_->one()));
    }

    std::uint64_t degree() const noexcept { return degree_; }
    const RowEchelon& span() const noexcept { return span_; }
    bool full() const noexcept { return span_.rank() == span_.ncols(); }

    void advance() {
        ++degree_;
        if (full()) return;
        RowEchelon next(field_, span_.ncols());
        for (const auto& b : span_.rows()) {
            for (const auto& col : columns_) {
                Row v(b.size());
                for (std::size_t k = 0; k < b.size(); ++k) v[k] = field_->mul(b[k], col[k]);
                next.insert(std::move(v));
                if (next.rank() == next.ncols()) break;
            }
            if (next.rank() == next.ncols()) break;
        }
        span_ = std::move(next);
    }

  private:
    FieldPtr field_;
    RowEchelon span_;
    std::vector<Row> columns_;
    std::uint64_t degree_ = 0;
};

bool standard_by_leading_terms(const NestedSequence& seq, const Monomial& m) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        for (std::size_t j = i + 1; j < m.nvars(); ++j)
            if (m[j] >= seq[j]) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> v_point_oracle_all(const Variety& x, std::uint64_t cap, unsigned threads) {
    const auto points = bounded_points(x, cap);
    const std::size_t count = points.size();
    std::vector<std::uint64_t> v(count, 0);
    std::size_t pending = count;
    DegreeSpans spans(x.field(), points);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    while (pending > 0) {
        spans.advance();
        if (spans.degree() > count)
            fail(Errc::InvalidArgument, "evaluation codes never separated every point");
        const std::uint64_t d = spans.degree();
        auto scan = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t c = lo; c < hi; ++c)
                if (v[c] == 0 && spans.span().contains_unit(c)) v[c] = d;
        };
        if (workers == 1) {
            scan(0, count);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, count * w / workers, count * (w + 1) / workers);
            for (auto& t : pool) t.join();
        }
        pending = static_cast<std::size_t>(std::count(v.begin(), v.end(), 0));
    }
    return v;
}

std::uint64_t v_point_oracle(const Variety& x, const ProjectivePoint& point, std::uint64_t cap) {
    const auto points = bounded_points(x, cap);
    const std::size_t col = index_of(points, point);
    DegreeSpans spans(x.field(), points);
    while (true) {
        spans.advance();
        if (spans.span().contains_unit(col)) return spans.degree();
        if (spans.degree() > points.size())
            fail(Errc::InvalidArgument, "evaluation codes never isolated the point");
    }
}

std::uint64_t hilbert_oracle(const Variety& x, std::uint64_t degree, std::uint64_t cap) {
    const auto points = bounded_points(x, cap);
    RowEchelon e(x.field(), points.size());
    for (const auto& m : all_monomials(x.nvars(), degree)) {
        e.insert(evaluate_all(*x.field(), m, points));
        if (e.rank() == points.size()) break;
    }
    return e.rank();
}

std::uint64_t reg_delta_oracle(const Variety& x, std::uint64_t cap, unsigned threads) {
    const auto v = v_point_oracle_all(x, cap, threads);
    return *std::min_element(v.begin(), v.end());
}

bool zero_function_check(const Variety& x, const ProjectivePoint& point, std::uint64_t cap) {
    const auto points = bounded_points(x, cap);
    const std::size_t col = index_of(points, point);
    const auto& seq = x.sequence();
    std::uint64_t bound = 0;
    for (std::size_t i = 0; i < seq.nvars(); ++i)
        if (i != point.pivot) bound += seq[i] - 1;
    DegreeSpans spans(x.field(), points);
    for (std::uint64_t d = 1; d <= bound; ++d) {
        spans.advance();
        if (spans.span().contains_unit(col)) return false;
    }
    return true;
}

std::optional<Polynomial> standard_indicator_oracle(const Variety& x, const ProjectivePoint& point,
                                                    std::uint64_t cap) {
    const auto points = bounded_points(x, cap);
    const std::size_t col = index_of(points, point);
    const std::uint64_t d = v_point_oracle(x, point, cap);
    const auto& f = *x.field();

    std::vector<Monomial> standard;
    for (auto& m : all_monomials(x.nvars(), d))
        if (standard_by_leading_terms(x.sequence(), m)) standard.push_back(std::move(m));
    std::vector<Row> a;
    a.reserve(standard.size());
    for (const auto& m : standard) a.push_back(evaluate_all(f, m, points));

    // Coefficient vectors c with sum_m c_m a_m(Q) = 0 for every Q != P.
    std::vector<Row> transposed;
    for (std::size_t c = 0; c < points.size(); ++c) {
        if (c == col) continue;
        Row r(standard.size());
        for (std::size_t m = 0; m < standard.size(); ++m) r[m] = a[m][c];
        transposed.push_back(std::move(r));
    }
    const auto kernel = nullspace(x.field(), transposed, standard.size());
    if (kernel.size() != 1) return std::nullopt;
    FieldElement at_p = f.zero();
    for (std::size_t m = 0; m < standard.size(); ++m) at_p = f.add(at_p, f.mul(kernel[0][m], a[m][col]));
    if (at_p.code == 0) return std::nullopt;

    std::vector<Term> terms;
    for (std::size_t m = 0; m < standard.size(); ++m)
        if (kernel[0][m].code != 0) terms.push_back({standard[m], kernel[0][m]});
    auto poly = Polynomial::from_terms(x.field(), x.nvars(), std::move(terms));
    return poly.scaled(f.inv(poly.leading_term().coeff));
}

bool uniqueness_check(const Variety& x, const ProjectivePoint& point, std::uint64_t cap) {
    return standard_indicator_oracle(x, point, cap).has_value();
}

}  // namespace pnc
