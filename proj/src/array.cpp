#include "aont/array.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "aont/combi.hpp"
#include "aont/error.hpp"
#include "aont/parallel.hpp"

namespace aont {

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

void decode_tuple(std::uint64_t code, std::uint32_t v, std::span<Fe> out) {
    for (auto& x : out) {
        x = static_cast<Fe>(code % v);
        code /= v;
    }
}

// Flattened column list of a ColumnSet, inputs first.
std::vector<std::uint32_t> flat_cols(const ColumnSet& d) {
    std::vector<std::uint32_t> cols = d.input_cols;
    cols.insert(cols.end(), d.output_cols.begin(), d.output_cols.end());
    return cols;
}

void validate_column_set(const ArrayRep& a, const ColumnSet& d) {
    for (std::size_t i = 0; i < d.input_cols.size(); ++i) {
        if (d.input_cols[i] >= a.s) raise(Errc::index_out_of_range, "input column out of range");
        if (i && d.input_cols[i] <= d.input_cols[i - 1])
            raise(Errc::index_out_of_range, "input columns must be strictly increasing");
    }
    for (std::size_t i = 0; i < d.output_cols.size(); ++i) {
        if (d.output_cols[i] < a.s || d.output_cols[i] >= 2 * a.s)
            raise(Errc::index_out_of_range, "output column out of range");
        if (i && d.output_cols[i] <= d.output_cols[i - 1])
            raise(Errc::index_out_of_range, "output columns must be strictly increasing");
    }
}

// Census core shared by the public checks. Counts land in `counts` (resized
// and zeroed here); returns false when v^|D| overflows the row count so the
// verdict is `neither` without scanning.
bool project_counts(const ArrayRep& a, std::span<const std::uint32_t> cols,
                    std::vector<std::uint64_t>& counts) {
    const std::uint64_t space = pow_u64(a.v, static_cast<std::uint32_t>(cols.size()), a.n_rows);
    if (space > a.n_rows) return false;
    counts.assign(space, 0);
    const std::uint32_t w = 2 * a.s;
    const std::uint16_t* cell = a.cells.data();
    for (std::uint64_t r = 0; r < a.n_rows; ++r, cell += w) {
        std::uint64_t code = 0;
        for (std::size_t j = cols.size(); j-- > 0;) code = code * a.v + cell[cols[j]];
        ++counts[code];
    }
    return true;
}

BiasVerdict verdict_from_counts(const std::vector<std::uint64_t>& counts, std::uint64_t n_rows) {
    const std::uint64_t space = counts.size();
    const bool divisible = n_rows % space == 0;
    const std::uint64_t expected = divisible ? n_rows / space : 0;
    bool unbiased = divisible, covering = true;
    for (std::uint64_t c : counts) {
        if (c == 0) covering = false;
        if (c != expected) unbiased = false;
        if (!covering && !unbiased) break;
    }
    if (unbiased) return BiasVerdict::unbiased;
    return covering ? BiasVerdict::covering : BiasVerdict::neither;
}

constexpr std::uint64_t kHistogramLimit = 1ull << 16;

BiasReport classify_impl(const ArrayRep& a, const ColumnSet& d, bool want_histogram) {
    validate_column_set(a, d);
    BiasReport rep;
    rep.column_set = d;
    const auto cols = flat_cols(d);
    std::vector<std::uint64_t> counts;
    if (!project_counts(a, cols, counts)) {
        rep.verdict = BiasVerdict::neither; // more tuples than rows
        return rep;
    }
    rep.verdict = verdict_from_counts(counts, a.n_rows);
    if (a.n_rows % counts.size() == 0) rep.expected = a.n_rows / counts.size();
    if (want_histogram && counts.size() <= kHistogramLimit) rep.histogram = std::move(counts);
    return rep;
}

// True when the column set is NOT unbiased (covering when weak == true).
// Scratch counts are reused per thread across the sweep.
bool column_set_fails(const ArrayRep& a, std::span<const std::uint32_t> cols, bool weak) {
    thread_local std::vector<std::uint64_t> counts;
    if (!project_counts(a, cols, counts)) return true;
    const BiasVerdict v = verdict_from_counts(counts, a.n_rows);
    if (weak) return v == BiasVerdict::neither;
    return v != BiasVerdict::unbiased;
}

ColumnSet split_columns(const ArrayRep& a, std::span<const std::uint32_t> cols) {
    ColumnSet d;
    for (auto c : cols)
        (c < a.s ? d.input_cols : d.output_cols).push_back(c);
    return d;
}

// Shared sweep for the AONT / weak-AONT conditions.
ArrayVerdict sweep_aont(const ArrayRep& a, std::uint32_t ti, std::uint32_t to, bool weak,
                        unsigned workers) {
    if (!(1 <= ti && ti <= to && to <= a.s))
        raise(Errc::bad_params, "need 1 <= ti <= to <= s");
    ArrayVerdict out;

    ColumnSet inputs, outputs;
    for (std::uint32_t c = 0; c < a.s; ++c) inputs.input_cols.push_back(c);
    for (std::uint32_t c = a.s; c < 2 * a.s; ++c) outputs.output_cols.push_back(c);
    for (const ColumnSet* block : {&inputs, &outputs}) {
        ++out.checked;
        if (column_set_fails(a, flat_cols(*block), weak)) {
            out.witness = *block;
            return out;
        }
    }

    const std::uint32_t tj = a.s - to; // outputs that may stay unknown
    const std::uint64_t n_i = binomial(a.s, ti);
    const std::uint64_t n_j = binomial(a.s, tj);
    const std::uint64_t total = n_i * n_j;

    auto set_at = [&](std::uint64_t idx) {
        ColumnSet d;
        d.input_cols = unrank_combination(a.s, ti, idx / n_j);
        d.output_cols = unrank_combination(a.s, tj, idx % n_j);
        for (auto& c : d.output_cols) c += a.s;
        return d;
    };
    auto hit = [&](std::uint64_t idx) {
        const ColumnSet d = set_at(idx);
        return column_set_fails(a, flat_cols(d), weak);
    };
    const auto bad = find_first_index(total, workers, hit);
    if (!bad) {
        out.pass = true;
        out.checked += total;
        return out;
    }
    out.witness = set_at(*bad);
    out.checked += *bad + 1;
    return out;
}

} // namespace

ArrayRep build_array(std::uint32_t v, std::uint32_t s, const Bijection& phi, std::uint64_t row_cap) {
    if (v < 2 || s < 1) raise(Errc::bad_params, "need v >= 2 and s >= 1");
    const std::uint64_t n = pow_u64(v, s, row_cap);
    if (n > row_cap)
        raise(Errc::too_large, "v^s exceeds the row cap (" + std::to_string(row_cap) + ")");
    if (v > 0xffff) raise(Errc::too_large, "alphabet too large for cell storage");

    ArrayRep a;
    a.v = v;
    a.s = s;
    a.n_rows = n;
    a.cells.resize(n * 2 * s);
    std::vector<Fe> x(s), y(s);
    std::vector<std::uint64_t> seen_owner(n, ~0ull);
    for (std::uint64_t r = 0; r < n; ++r) {
        decode_tuple(r, v, x);
        std::fill(y.begin(), y.end(), 0);
        phi(x, y);
        std::uint64_t ycode = 0;
        for (std::size_t j = s; j-- > 0;) {
            if (y[j] >= v) raise(Errc::bad_params, "bijection produced a value out of range");
            ycode = ycode * v + y[j];
        }
        if (seen_owner[ycode] != ~0ull)
            raise(Errc::not_bijective, "inputs " + std::to_string(seen_owner[ycode]) + " and " +
                                           std::to_string(r) + " share the image tuple with code " +
                                           std::to_string(ycode));
        seen_owner[ycode] = r;
        std::uint16_t* cell = a.cells.data() + r * 2 * s;
        for (std::uint32_t j = 0; j < s; ++j) {
            cell[j] = static_cast<std::uint16_t>(x[j]);
            cell[s + j] = static_cast<std::uint16_t>(y[j]);
        }
    }
    return a;
}

ArrayRep build_array(const LinearAont& a, std::uint64_t row_cap) {
    return build_array(a.params.q, a.params.s,
                       [&a](std::span<const Fe> x, std::span<Fe> y) {
                           auto r = transform(a, x);
                           std::copy(r.begin(), r.end(), y.begin());
                       },
                       row_cap);
}

ArrayRep array_from_table(std::uint32_t v, std::uint32_t s, std::vector<std::uint16_t> cells,
                          std::uint64_t row_cap) {
    if (v < 2 || s < 1) raise(Errc::bad_params, "need v >= 2 and s >= 1");
    const std::uint64_t n = pow_u64(v, s, row_cap);
    if (n > row_cap) raise(Errc::too_large, "v^s exceeds the row cap");
    if (cells.size() != n * 2 * s) raise(Errc::dimension_mismatch, "table must be v^s x 2s");
    for (auto c : cells)
        if (c >= v) raise(Errc::bad_params, "cell value out of range");

    ArrayRep a;
    a.v = v;
    a.s = s;
    a.n_rows = n;
    a.cells = std::move(cells);
    // Both blocks must enumerate every tuple exactly once.
    for (std::uint32_t block = 0; block < 2; ++block) {
        std::vector<bool> seen(n, false);
        for (std::uint64_t r = 0; r < n; ++r) {
            std::uint64_t code = 0;
            for (std::uint32_t j = s; j-- > 0;) code = code * v + a.at(r, block * s + j);
            if (seen[code])
                raise(Errc::not_bijective, std::string(block ? "output" : "input") +
                                               " block repeats the tuple with code " + std::to_string(code));
            seen[code] = true;
        }
    }
    return a;
}

BiasReport classify_columns(const ArrayRep& a, const ColumnSet& d, bool want_histogram) {
    return classify_impl(a, d, want_histogram);
}

BiasReport is_unbiased(const ArrayRep& a, const ColumnSet& d, bool want_histogram) {
    return classify_impl(a, d, want_histogram);
}

BiasReport is_covering(const ArrayRep& a, const ColumnSet& d, bool want_histogram) {
    return classify_impl(a, d, want_histogram);
}

ArrayVerdict verify_aont_array(const ArrayRep& a, std::uint32_t ti, std::uint32_t to,
                               unsigned workers) {
    return sweep_aont(a, ti, to, /*weak=*/false, workers);
}

ArrayVerdict verify_weak_aont_array(const ArrayRep& a, std::uint32_t ti, std::uint32_t to,
                                    unsigned workers) {
    return sweep_aont(a, ti, to, /*weak=*/true, workers);
}

ArrayVerdict is_orthogonal_array(const ArrayRep& a, std::uint32_t t, unsigned workers) {
    if (t > 2 * a.s) raise(Errc::bad_params, "strength exceeds column count");
    ArrayVerdict out;
    const std::uint64_t total = binomial(2 * a.s, t);
    auto hit = [&](std::uint64_t idx) {
        const auto cols = unrank_combination(2 * a.s, t, idx);
        return column_set_fails(a, cols, /*weak=*/false);
    };
    const auto bad = find_first_index(total, workers, hit);
    if (!bad) {
        out.pass = true;
        out.checked = total;
        return out;
    }
    out.witness = split_columns(a, unrank_combination(2 * a.s, t, *bad));
    out.checked = *bad + 1;
    return out;
}

ArrayVerdict is_split_orthogonal_array(const ArrayRep& a, std::uint32_t t1, std::uint32_t t2,
                                       std::uint32_t n1, std::uint32_t n2, unsigned workers) {
    if (n1 + n2 != 2 * a.s) raise(Errc::bad_split, "column groups must partition the 2s columns");
    if (t1 > n1 || t2 > n2) raise(Errc::bad_split, "strength exceeds its column group");
    ArrayVerdict out;
    const std::uint64_t c1 = binomial(n1, t1);
    const std::uint64_t c2 = binomial(n2, t2);
    const std::uint64_t total = c1 * c2;
    auto set_at = [&](std::uint64_t idx) {
        auto first = unrank_combination(n1, t1, idx / c2);
        auto second = unrank_combination(n2, t2, idx % c2);
        for (auto& c : second) c += n1;
        first.insert(first.end(), second.begin(), second.end());
        return first;
    };
    auto hit = [&](std::uint64_t idx) { return column_set_fails(a, set_at(idx), /*weak=*/false); };
    const auto bad = find_first_index(total, workers, hit);
    if (!bad) {
        out.pass = true;
        out.checked = total;
        return out;
    }
    out.witness = split_columns(a, set_at(*bad));
    out.checked = *bad + 1;
    return out;
}

ArrayRep swap_io(const ArrayRep& a) {
    ArrayRep b;
    b.v = a.v;
    b.s = a.s;
    b.n_rows = a.n_rows;
    b.cells.resize(a.cells.size());
    const std::uint32_t s = a.s;
    for (std::uint64_t r = 0; r < a.n_rows; ++r) {
        std::uint64_t key = 0;
        for (std::uint32_t j = s; j-- > 0;) key = key * a.v + a.at(r, s + j);
        std::uint16_t* cell = b.cells.data() + key * 2 * s;
        for (std::uint32_t j = 0; j < s; ++j) {
            cell[j] = a.at(r, s + j);
            cell[s + j] = a.at(r, j);
        }
    }
    return b;
}

std::string array_to_string(const ArrayRep& a) {
    std::ostringstream os;
    os << a.v << " " << a.s << "\n";
    for (std::uint64_t r = 0; r < a.n_rows; ++r) {
        for (std::uint32_t c = 0; c < 2 * a.s; ++c) os << (c ? " " : "") << a.at(r, c);
        os << "\n";
    }
    return os.str();
}

ArrayRep array_from_string(const std::string& text, std::uint64_t row_cap) {
    std::istringstream is(text);
    std::uint32_t v, s;
    if (!(is >> v >> s)) raise(Errc::bad_format, "array header must be 'v s'");
    const std::uint64_t n = pow_u64(v, s, row_cap);
    if (n > row_cap) raise(Errc::too_large, "v^s exceeds the row cap");
    std::vector<std::uint16_t> cells;
    cells.reserve(n * 2 * s);
    long long x;
    while (is >> x) {
        if (x < 0 || x >= v) raise(Errc::bad_format, "cell value out of range");
        cells.push_back(static_cast<std::uint16_t>(x));
    }
    return array_from_table(v, s, std::move(cells), row_cap);
}

void save_array(const ArrayRep& a, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) raise(Errc::io_error, "cannot open " + path + " for writing");
    os << array_to_string(a);
    if (!os) raise(Errc::io_error, "write failed: " + path);
}

ArrayRep load_array(const std::string& path, std::uint64_t row_cap) {
    std::ifstream is(path, std::ios::binary);
    if (!is) raise(Errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return array_from_string(buf.str(), row_cap);
}

} // namespace aont
