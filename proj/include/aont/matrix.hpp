#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aont/gf.hpp"

namespace aont {

/// Dense row-major matrix over a small finite field. Matrices are immutable
/// values in practice: operations return new matrices.
struct MatrixGF {
    Field field;
    std::uint32_t n_rows = 0;
    std::uint32_t n_cols = 0;
    std::vector<Fe> entries; // n_rows * n_cols codes, each < field->q

    Fe at(std::uint32_t r, std::uint32_t c) const { return entries[static_cast<std::size_t>(r) * n_cols + c]; }
    Fe& at(std::uint32_t r, std::uint32_t c) { return entries[static_cast<std::size_t>(r) * n_cols + c]; }
    bool square() const { return n_rows == n_cols; }
};

/// Strictly increasing, in-range row/column index lists.
struct SubmatrixSelector {
    std::vector<std::uint32_t> row_idx;
    std::vector<std::uint32_t> col_idx;
};

MatrixGF make_matrix(Field field, std::uint32_t n_rows, std::uint32_t n_cols,
                     std::vector<Fe> entries);
MatrixGF identity_matrix(Field field, std::uint32_t n);

/// Row rank by Gaussian elimination (exact arithmetic, first-nonzero pivots).
/// GF(2) dispatches to the bit-packed routine.
std::uint32_t rank(const MatrixGF& m);

/// Rank of rows packed as bit masks (column j = bit j), ncols <= 64.
/// This is the search/verification hot path for q = 2.
std::uint32_t rank_gf2_packed(std::span<std::uint64_t> rows);

/// True iff the selected submatrix has rank >= t; elimination stops as soon
/// as t pivots are found.
bool submatrix_rank_at_least(const MatrixGF& m, std::span<const std::uint32_t> rows,
                             std::span<const std::uint32_t> cols, std::uint32_t t);

/// M^-1, or nullopt when singular. Throws not_square.
std::optional<MatrixGF> invert(const MatrixGF& m);

/// Restriction to selected rows/columns. Throws index_out_of_range on a bad
/// selector (out of range, unordered, or duplicated indices).
MatrixGF submatrix(const MatrixGF& m, const SubmatrixSelector& sel);

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b);
std::vector<Fe> row_vec_mul(std::span<const Fe> x, const MatrixGF& m);

MatrixGF transpose(const MatrixGF& m);
bool equal(const MatrixGF& a, const MatrixGF& b);

/// Text format, bit-exact round trip:
///   line 1: field header ("q p k m0 ... mk")
///   line 2: "n_rows n_cols"
///   then n_rows lines of n_cols integer codes.
std::string matrix_to_string(const MatrixGF& m);
MatrixGF matrix_from_string(const std::string& text);
void save_matrix(const MatrixGF& m, const std::string& path);
MatrixGF load_matrix(const std::string& path);

} // namespace aont
