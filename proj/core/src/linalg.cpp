#include "pnc/linalg.hpp"

#include "pnc/error.hpp"

namespace pnc {

void axpy_sub(const Field& f, Row& v, FieldElement c, std::span<const FieldElement> row) {
    if (c.code == 0) return;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (row[k].code != 0) v[k] = f.sub(v[k], f.mul(c, row[k]));
    }
}

RowEchelon::RowEchelon(FieldPtr field, std::size_t ncols)
    : field_(std::move(field)), ncols_(ncols), row_of_col_(ncols, -1) {}

void RowEchelon::reduce(Row& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) axpy_sub(*field_, v, v[pivots_[r]], rows_[r]);
}

bool RowEchelon::insert(Row row) {
    if (row.size() != ncols_) fail(Errc::DimensionMismatch, "row length does not match the echelon form");
    if (rows_.size() == ncols_) return false;
    reduce(row);
    std::size_t c = 0;
    while (c < ncols_ && row[c].code == 0) ++c;
    if (c == ncols_) return false;
    const FieldElement scale = field_->inv(row[c]);
    for (auto& x : row) x = field_->mul(x, scale);
    for (auto& other : rows_) axpy_sub(*field_, other, other[c], row);
    row_of_col_[c] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(row));
    pivots_.push_back(c);
    return true;
}

bool RowEchelon::contains(std::span<const FieldElement> v) const {
    if (v.size() != ncols_) fail(Errc::DimensionMismatch, "vector length does not match the echelon form");
    Row w(v.begin(), v.end());
    reduce(w);
    for (auto x : w)
        if (x.code != 0) return false;
    return true;
}

bool RowEchelon::contains_unit(std::size_t col) const {
    // In reduced form a vector of the span equals sum_r v[pivot_r] row_r, so
    // e_col lies in the span iff col is a pivot whose row is exactly e_col.
    const auto r = row_of_col_.at(col);
    if (r < 0) return false;
    const Row& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 0; k < ncols_; ++k)
        if (k != col && row[k].code != 0) return false;
    return true;
}

std::size_t rank(const FieldPtr& field, const std::vector<Row>& rows, std::size_t ncols) {
    RowEchelon e(field, ncols);
    for (const auto& r : rows) {
        e.insert(r);
        if (e.rank() == ncols) break;
    }
    return e.rank();
}

std::vector<Row> nullspace(const FieldPtr& field, const std::vector<Row>& rows, std::size_t ncols) {
    RowEchelon e(field, ncols);
    for (const auto& r : rows) e.insert(r);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : e.pivots()) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Row x(ncols, field->zero());
        x[free] = field->one();
        for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = field->neg(e.rows()[r][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace pnc
