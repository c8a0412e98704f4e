#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aont/error.hpp"

namespace aont {

/// Element of GF(p^k), encoded as an integer in [0, q).
/// The code is the base-p expansion of the polynomial coefficients:
/// code = sum_i c_i * p^i, so 0 is the additive and 1 the multiplicative identity.
using Fe = std::uint32_t;

/// A small finite field GF(p^k), immutable after construction.
///
/// `modulus` holds k+1 coefficients of a monic irreducible polynomial over
/// GF(p), lowest degree first ({0,1} i.e. the polynomial x when k == 1, where
/// no reduction is needed). Multiplication and inverse tables are precomputed
/// for q <= kTableLimit; larger fields reduce on the fly.
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint16_t> mul_table; // q*q entries when tables are built
    std::vector<std::uint16_t> inv_table; // q entries, inv_table[0] unused

    static constexpr std::uint32_t kTableLimit = 256;

    bool has_tables() const { return !mul_table.empty(); }
};

using Field = std::shared_ptr<const FieldSpec>;

/// Builds a validated field. If `modulus` is omitted and k > 1, the
/// lexicographically least monic irreducible of degree k over GF(p) is chosen
/// (ordered by the base-p code of the non-leading coefficients), so repeated
/// builds and file headers are reproducible.
///
/// Throws: not_prime, degree_mismatch, not_irreducible (message names a
/// root or factor).
Field build_field(std::uint32_t p, std::uint32_t k,
                  std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Convenience: build GF(q) for a prime power q with the default modulus.
/// Throws bad_params when q is not a prime power.
Field build_field_q(std::uint32_t q);

/// Splits q into (p, k) with q = p^k, p prime. Returns nullopt when q is not
/// a prime power (or q < 2).
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_split(std::uint64_t q);

Fe fe_add(Fe a, Fe b, const FieldSpec& f);
Fe fe_sub(Fe a, Fe b, const FieldSpec& f);
Fe fe_neg(Fe a, const FieldSpec& f);
Fe fe_mul(Fe a, Fe b, const FieldSpec& f);
Fe fe_inv(Fe a, const FieldSpec& f); // throws zero_inverse when a == 0

/// Header line used by the matrix/array file formats:
/// "q p k m0 m1 ... mk" (modulus coefficients, lowest degree first).
std::string field_header(const FieldSpec& f);

/// Parses a header line produced by field_header(). Throws bad_format on
/// malformed input; the field itself is re-validated via build_field.
Field parse_field_header(const std::string& line);

} // namespace aont
