#include "pnc/codes.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <thread>

#include "pnc/error.hpp"
#include "pnc/ideal.hpp"

namespace pnc {

namespace {

FieldElement evaluate_monomial(const Field& f, const Monomial& m, std::span<const FieldElement> coords) {
    FieldElement v = f.one();
    for (std::size_t i = 0; i < m.nvars() && v.code != 0; ++i)
        if (m[i] != 0) v = f.mul(v, f.pow(coords[i], m[i]));
    return v;
}

// Minimum weight over the flattened message-class range [begin, end).
std::uint64_t search_range(const EvaluationCode& code, std::uint64_t begin, std::uint64_t end) {
    const Field& f = *code.field();
    const auto& rows = code.matrix();
    const std::size_t k = rows.size();
    const std::size_t len = code.length();
    const std::uint32_t q = f.order();

    std::size_t lead = 0;
    std::uint64_t offset = begin;
    while (true) {
        std::uint64_t block = 1;
        for (std::size_t t = lead + 1; t < k; ++t) block *= q;
        if (offset < block) break;
        offset -= block;
        ++lead;
    }
    std::vector<std::uint32_t> digits(k, 0);
    digits[lead] = 1;
    for (std::size_t t = k; t-- > lead + 1;) {
        digits[t] = static_cast<std::uint32_t>(offset % q);
        offset /= q;
    }

    Row cw(len, f.zero());
    std::uint64_t weight = 0;
    auto rebuild = [&] {
        std::fill(cw.begin(), cw.end(), f.zero());
        for (std::size_t t = lead; t < k; ++t) {
            if (digits[t] == 0) continue;
            const FieldElement c{digits[t]};
            for (std::size_t col = 0; col < len; ++col) cw[col] = f.add(cw[col], f.mul(c, rows[t][col]));
        }
        weight = static_cast<std::uint64_t>(
            std::count_if(cw.begin(), cw.end(), [](FieldElement x) { return x.code != 0; }));
    };
    auto apply = [&](std::size_t t, FieldElement delta) {
        const Row& row = rows[t];
        for (std::size_t col = 0; col < len; ++col) {
            if (row[col].code == 0) continue;
            const FieldElement old = cw[col];
            const FieldElement now = f.add(old, f.mul(delta, row[col]));
            cw[col] = now;
            weight += (now.code != 0);
            weight -= (old.code != 0);
        }
    };
    rebuild();

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t step = begin; step < end; ++step) {
        best = std::min(best, weight);
        if (step + 1 == end) break;
        std::size_t t = k;
        bool carried_out = true;
        while (t > lead + 1) {
            --t;
            const std::uint32_t c = digits[t];
            if (c + 1 < q) {
                digits[t] = c + 1;
                apply(t, f.sub(FieldElement{c + 1}, FieldElement{c}));
                carried_out = false;
                break;
            }
            digits[t] = 0;
            apply(t, f.neg(FieldElement{c}));
        }
        if (carried_out) {
            digits[lead] = 0;
            ++lead;
            digits[lead] = 1;
            rebuild();
        }
    }
    return best;
}

}  // namespace

EvaluationCode::EvaluationCode(NestedSequence seq, FieldPtr field, std::uint64_t degree,
                               std::vector<ProjectivePoint> points, std::vector<Monomial> monomials,
                               std::vector<Row> matrix)
    : seq_(std::move(seq)),
      field_(std::move(field)),
      degree_(degree),
      points_(std::move(points)),
      monomials_(std::move(monomials)),
      matrix_(std::move(matrix)) {}

EvaluationCode build_code(const Variety& x, std::uint64_t degree, std::uint64_t point_cap) {
    const auto& seq = x.sequence();
    const std::uint64_t k = hilbert_function(seq, degree);
    if (k > kMaxCodeDimension)
        fail(Errc::DimensionTooLarge, "dim C_X(" + std::to_string(degree) + ") = " + std::to_string(k) +
                                          " exceeds " + std::to_string(kMaxCodeDimension));
    auto points = x.enumerate_points(point_cap);
    auto slice = standard_monomials(seq, degree);
    const Field& f = *x.field();
    std::vector<Row> matrix;
    matrix.reserve(slice.monomials.size());
    for (const auto& m : slice.monomials) {
        Row row;
        row.reserve(points.size());
        for (const auto& p : points) row.push_back(evaluate_monomial(f, m, p.coords));
        matrix.push_back(std::move(row));
    }
    if (rank(x.field(), matrix, points.size()) != matrix.size())
        fail(Errc::InvalidArgument, "standard monomials of degree " + std::to_string(degree) +
                                        " are linearly dependent on X");
    return EvaluationCode(seq, x.field(), degree, std::move(points), std::move(slice.monomials), std::move(matrix));
}

std::uint64_t message_classes(std::uint64_t q, std::uint64_t k) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t block = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (total > kMax - block) return kMax;
        total += block;
        if (i + 1 < k) {
            if (block > kMax / q) return kMax;
            block *= q;
        }
    }
    return total;
}

MinDistanceResult min_distance(const EvaluationCode& code, const SearchOptions& options) {
    const std::uint64_t k = code.dimension();
    if (k == 0) fail(Errc::InvalidArgument, "the zero code has no minimum distance");
    const std::uint64_t total = message_classes(code.field()->order(), k);
    if (total > options.cap)
        fail(Errc::SearchTooLarge, (total == std::numeric_limits<std::uint64_t>::max()
                                        ? std::string("more than 2^64")
                                        : std::to_string(total)) +
                                       " message classes exceed the search cap " + std::to_string(options.cap));
    const std::uint64_t workers = std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(1, total));
    std::vector<std::uint64_t> best(workers, std::numeric_limits<std::uint64_t>::max());
    if (workers == 1) {
        best[0] = search_range(code, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t lo = total * w / workers;
            const std::uint64_t hi = total * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                if (lo < hi) best[w] = search_range(code, lo, hi);
            });
        }
        for (auto& t : pool) t.join();
    }
    return {*std::min_element(best.begin(), best.end()), total};
}

std::vector<DeltaEntry> delta_profile(const Variety& x, std::uint64_t d_max, const SearchOptions& options) {
    std::vector<DeltaEntry> out;
    for (std::uint64_t d = 0; d <= d_max; ++d) {
        const auto code = build_code(x, d);
        out.push_back({d, min_distance(code, options).distance});
    }
    return out;
}

void write_generator_matrix(std::ostream& out, const EvaluationCode& code) {
    const auto& f = *code.field();
    out << "q=" << f.order() << " n=" << code.sequence().n() << " d=" << code.degree() << " k=" << code.dimension()
        << " points=" << code.length() << '\n';
    for (std::size_t col = 0; col < code.length(); ++col) {
        for (std::size_t r = 0; r < code.dimension(); ++r) {
            if (r) out << ' ';
            out << f.to_string(code.matrix()[r][col]);
        }
        out << '\n';
    }
}

}  // namespace pnc
