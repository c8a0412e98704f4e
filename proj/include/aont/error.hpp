#pragma once

#include <stdexcept>
#include <string>

namespace aont {

enum class Errc {
    not_prime,
    not_irreducible,
    degree_mismatch,
    zero_inverse,
    not_square,
    dimension_mismatch,
    index_out_of_range,
    bad_params,
    odd_size,
    even_size,
    bad_size,
    field_too_small,
    no_invertible_cofactor,
    not_bijective,
    too_large,
    bad_split,
    unknown_entry,
    corrupt_catalog,
    bad_format,
    io_error,
};

/// Library-wide exception; `code()` lets callers branch without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace aont
