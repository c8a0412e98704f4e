#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aont/linear.hpp"

namespace aont {

/// The v^s x 2s table pairing every input s-tuple with its image. Tuple codes
/// are base-v with column 0 as the least significant digit; arrays built here
/// list inputs in ascending code order. Immutable once built.
struct ArrayRep {
    std::uint32_t v = 0;
    std::uint32_t s = 0;
    std::uint64_t n_rows = 0;           // v^s
    std::vector<std::uint16_t> cells;   // n_rows * 2s, row-major

    std::uint16_t at(std::uint64_t r, std::uint32_t c) const { return cells[r * 2 * s + c]; }
};

inline constexpr std::uint64_t kDefaultRowCap = 1ull << 20;

/// Column subset: input columns in [0, s), output columns in [s, 2s).
struct ColumnSet {
    std::vector<std::uint32_t> input_cols;
    std::vector<std::uint32_t> output_cols;

    std::size_t size() const { return input_cols.size() + output_cols.size(); }
};

enum class BiasVerdict { unbiased, covering, neither };

/// Projection census for one column set. `expected` is N / v^|D| when that is
/// integral (0 otherwise); `histogram[t]` counts the tuple with code t and is
/// filled only for small projections.
struct BiasReport {
    BiasVerdict verdict = BiasVerdict::neither;
    ColumnSet column_set;
    std::vector<std::uint64_t> histogram;
    std::uint64_t expected = 0;
};

using Bijection = std::function<void(std::span<const Fe> x, std::span<Fe> y)>;

/// Enumerates all v^s inputs through `phi` and validates that the outputs are
/// a bijection. Throws not_bijective (duplicate image witness in the message)
/// or too_large when v^s exceeds `row_cap`.
ArrayRep build_array(std::uint32_t v, std::uint32_t s, const Bijection& phi,
                     std::uint64_t row_cap = kDefaultRowCap);

/// Array representation of a certified linear transform (rows enumerate x,
/// images are y = x * M^-1).
ArrayRep build_array(const LinearAont& a, std::uint64_t row_cap = kDefaultRowCap);

/// Wraps an explicit table; both column blocks must enumerate every s-tuple
/// exactly once.
ArrayRep array_from_table(std::uint32_t v, std::uint32_t s, std::vector<std::uint16_t> cells,
                          std::uint64_t row_cap = kDefaultRowCap);

/// Exact projection census of the columns in `d`. Never throws on skewed
/// counts: impossibility (e.g. v^|D| > N) is just a `neither` verdict.
BiasReport classify_columns(const ArrayRep& a, const ColumnSet& d, bool want_histogram = false);

/// classify_columns with verdict == unbiased.
BiasReport is_unbiased(const ArrayRep& a, const ColumnSet& d, bool want_histogram = false);
/// classify_columns; covering means every tuple appears at least once.
BiasReport is_covering(const ArrayRep& a, const ColumnSet& d, bool want_histogram = false);

/// Verdict of a column-set sweep. On fail, `witness` is the first offending
/// set in scan order (block conditions first, then lexicographic (I, J)).
/// `checked` counts sets examined up to and including the witness.
struct ArrayVerdict {
    bool pass = false;
    std::optional<ColumnSet> witness;
    std::uint64_t checked = 0;
};

/// Unbiasedness sweep: inputs block, outputs block, then I u J for every
/// |I| = ti inputs and |J| = s - to outputs.
ArrayVerdict verify_aont_array(const ArrayRep& a, std::uint32_t ti, std::uint32_t to,
                               unsigned workers = 1);

/// Same sweep with covering in place of unbiased.
ArrayVerdict verify_weak_aont_array(const ArrayRep& a, std::uint32_t ti, std::uint32_t to,
                                    unsigned workers = 1);

/// Strength-t orthogonal array test over all C(2s, t) column subsets.
ArrayVerdict is_orthogonal_array(const ArrayRep& a, std::uint32_t t, unsigned workers = 1);

/// Split orthogonal array test: every t1 columns from the first n1 together
/// with every t2 from the last n2 must be unbiased. Requires n1 + n2 = 2s.
ArrayVerdict is_split_orthogonal_array(const ArrayRep& a, std::uint32_t t1, std::uint32_t t2,
                                       std::uint32_t n1, std::uint32_t n2, unsigned workers = 1);

/// Array representation of the inverse mapping: output and input blocks are
/// interchanged and rows re-sorted into canonical input order. Involution.
ArrayRep swap_io(const ArrayRep& a);

/// Text format: line 1 "v s", then v^s lines of 2s codes.
std::string array_to_string(const ArrayRep& a);
ArrayRep array_from_string(const std::string& text, std::uint64_t row_cap = kDefaultRowCap);
void save_array(const ArrayRep& a, const std::string& path);
ArrayRep load_array(const std::string& path, std::uint64_t row_cap = kDefaultRowCap);

} // namespace aont
