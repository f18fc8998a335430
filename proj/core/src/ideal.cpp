#include "pnc/ideal.hpp"

#include <algorithm>
#include <map>

#include "pnc/error.hpp"

namespace pnc {

GroebnerBasis::GroebnerBasis(const Variety& x) : seq_(x.sequence()), field_(x.field()) {
    const std::size_t nv = seq_.nvars();
    const auto one = field_->one();
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            const auto dj = static_cast<std::uint32_t>(seq_[j]);
            std::vector<std::uint32_t> lead(nv, 0), tail(nv, 0);
            lead[i] = 1;
            lead[j] = dj;
            tail[i] = dj;
            tail[j] = 1;
            Monomial lm(std::move(lead));
            Polynomial g = Polynomial::from_terms(
                field_, nv, {{lm, one}, {Monomial(std::move(tail)), field_->neg(one)}});
            elements_.push_back({i, j, std::move(g), std::move(lm)});
        }
    }
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    if (f.nvars() != seq_.nvars()) fail(Errc::DimensionMismatch, "polynomial ring does not match X");
    const std::size_t nv = seq_.nvars();
    std::map<Monomial, FieldElement, GrlexGreater> work;
    for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);

    for (auto it = work.begin(); it != work.end();) {
        if (it->second.code == 0) {
            it = work.erase(it);
            continue;
        }
        const Monomial& m = it->first;
        std::size_t i = 0;
        while (i < nv && m[i] == 0) ++i;
        std::size_t j = i + 1;
        while (j < nv && m[j] < seq_[j]) ++j;
        if (j >= nv) {
            ++it;
            continue;
        }
        // t_i t_j^{d_j} -> t_i^{d_j} t_j: the monomial moves strictly down in
        // grlex, so resuming just below the old one revisits it in this pass.
        const Monomial old = m;
        std::vector<std::uint32_t> e(old.exponents().begin(), old.exponents().end());
        const auto step = static_cast<std::uint32_t>(seq_[j] - 1);
        e[i] += step;
        e[j] -= step;
        const FieldElement c = it->second;
        work.erase(it);
        auto [pos, inserted] = work.try_emplace(Monomial(std::move(e)), c);
        if (!inserted) pos->second = field_->add(pos->second, c);
        it = work.upper_bound(old);
    }

    std::vector<Term> terms;
    terms.reserve(work.size());
    for (auto& [m, c] : work) terms.push_back({m, c});
    return Polynomial::from_terms(field_, nv, std::move(terms));
}

bool is_standard(const NestedSequence& seq, const Monomial& m) {
    if (m.nvars() != seq.nvars()) fail(Errc::DimensionMismatch, "monomial ring does not match the sequence");
    std::size_t i = 0;
    while (i < m.nvars() && m[i] == 0) ++i;
    for (std::size_t k = i + 1; k < m.nvars(); ++k)
        if (m[k] > seq[k] - 1) return false;
    return true;
}

FootprintSlice standard_monomials(const NestedSequence& seq, std::uint64_t degree, std::uint64_t cap) {
    const std::uint64_t expected = hilbert_function(seq, degree);
    if (expected > cap)
        fail(Errc::DimensionTooLarge, "footprint slice of degree " + std::to_string(degree) + " has " +
                                          std::to_string(expected) + " monomials");
    FootprintSlice slice{degree, {}};
    const std::size_t nv = seq.nvars();
    if (degree == 0) {
        slice.monomials.emplace_back(nv);
        return slice;
    }
    std::vector<std::uint32_t> e(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) {
        // Least support index i: a_i >= 1 free, a_k <= d_k - 1 above it.
        auto rec = [&](auto&& self, std::size_t k, std::uint64_t left) -> void {
            if (k == i) {
                if (left == 0) return;
                e[i] = static_cast<std::uint32_t>(left);
                slice.monomials.emplace_back(e);
                e[i] = 0;
                return;
            }
            const std::uint64_t hi = std::min<std::uint64_t>(seq[k] - 1, left);
            for (std::uint64_t a = 0; a <= hi; ++a) {
                e[k] = static_cast<std::uint32_t>(a);
                self(self, k - 1, left - a);
            }
            e[k] = 0;
        };
        rec(rec, nv - 1, degree);
    }
    std::sort(slice.monomials.begin(), slice.monomials.end(), GrlexGreater{});
    return slice;
}

std::uint64_t hilbert_function(const NestedSequence& seq, std::uint64_t degree) {
    if (degree == 0) return 1;
    const std::size_t nv = seq.nvars();
    // ways[r] = #(a_{i+1}, ..., a_n) with 0 <= a_k <= d_k - 1 summing to r <= degree - 1.
    const std::uint64_t top = degree - 1;
    std::vector<std::uint64_t> ways(top + 1, 0);
    ways[0] = 1;
    std::uint64_t total = 0;
    for (std::size_t i = nv; i-- > 0;) {
        std::uint64_t below = 0;
        for (std::uint64_t r = 0; r <= top; ++r) below = checked_add(below, ways[r]);
        total = checked_add(total, below);
        if (i == 0) break;
        // Convolve with the box [0, d_i - 1] using a sliding window sum.
        const std::uint64_t width = seq[i];
        std::vector<std::uint64_t> next(top + 1, 0);
        std::uint64_t window = 0;
        for (std::uint64_t r = 0; r <= top; ++r) {
            window = checked_add(window, ways[r]);
            if (r >= width) window -= ways[r - width];
            next[r] = window;
        }
        ways = std::move(next);
    }
    return total;
}

}  // namespace pnc
