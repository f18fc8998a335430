#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pnc/field.hpp"

namespace pnc {

using Row = std::vector<FieldElement>;

/// Incrementally maintained reduced row echelon form over F_q. Every stored
/// row has a leading 1 in its pivot column and zeros in all other pivot
/// columns.
class RowEchelon {
  public:
    RowEchelon(FieldPtr field, std::size_t ncols);

    /// Adds `row` to the span; returns true iff the rank grew.
    bool insert(Row row);
    bool contains(std::span<const FieldElement> v) const;
    /// e_col in the row space?
    bool contains_unit(std::size_t col) const;

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t ncols() const noexcept { return ncols_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  private:
    void reduce(Row& v) const;

    FieldPtr field_;
    std::size_t ncols_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::ptrdiff_t> row_of_col_;  // -1 when the column is free
};

/// v <- v - c * row
void axpy_sub(const Field& f, Row& v, FieldElement c, std::span<const FieldElement> row);

std::size_t rank(const FieldPtr& field, const std::vector<Row>& rows, std::size_t ncols);

/// Basis of {x : M x = 0} for the `ncols`-column matrix M.
std::vector<Row> nullspace(const FieldPtr& field, const std::vector<Row>& rows, std::size_t ncols);

}  // namespace pnc
