#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aont/matrix.hpp"

namespace aont {

/// Parameter tuple of a transform on s-tuples over GF(q): knowledge of all
/// but `to` outputs must leave every choice of `ti` inputs undetermined.
/// Invariant: 1 <= ti <= to <= s, q a prime power.
struct AontParams {
    std::uint32_t ti = 0;
    std::uint32_t to = 0;
    std::uint32_t s = 0;
    std::uint32_t q = 0;
};

/// Validates the ordering invariants and that q is a prime power.
AontParams make_params(std::uint32_t ti, std::uint32_t to, std::uint32_t s, std::uint32_t q);

struct RankWitness {
    std::vector<std::uint32_t> rows; // J, size to
    std::vector<std::uint32_t> cols; // I, size ti
    std::uint32_t rank = 0;          // observed, < ti
};

/// Outcome of the rank-criterion check. On fail exactly one of
/// {invertible == false, witness.has_value()} holds.
struct VerificationReport {
    bool pass = false;
    bool invertible = false;
    std::optional<RankWitness> witness;
    std::uint64_t submatrices_checked = 0;
};

/// Checks that M is invertible and that every `to` x `ti` submatrix of M has
/// rank `ti` (the criterion characterizing linear transforms whose inverse
/// map x = y*M hides any ti inputs when to outputs are missing).
///
/// Selectors are scanned in lexicographic (J, I) order — J over row subsets,
/// I over column subsets — and a failure reports the first offending pair,
/// independent of the worker count. `submatrices_checked` is the number of
/// selector pairs up to and including the witness (all of them on pass).
VerificationReport verify_linear_aont(const MatrixGF& m, std::uint32_t ti, std::uint32_t to,
                                      unsigned workers = 1);

/// An s x s invertible matrix certified against the rank criterion, stored
/// in the reconstruction orientation x = y*M, with M^-1 cached for the
/// forward direction y = x*M^-1.
struct LinearAont {
    AontParams params;
    MatrixGF m;
    MatrixGF m_inv;
};

/// Certifies M at (ti, to) and packages it; throws bad_params when the
/// criterion fails (message carries the witness).
LinearAont make_linear_aont(std::uint32_t ti, std::uint32_t to, MatrixGF m);

std::vector<Fe> transform(const LinearAont& a, std::span<const Fe> x);         // y = x * M^-1
std::vector<Fe> inverse_transform(const LinearAont& a, std::span<const Fe> y); // x = y * M

// --- explicit constructions over GF(2) ---

/// s even >= 2: zero diagonal, ones elsewhere; self-inverse; params (1,2,s,2).
LinearAont construct_even_bastion(std::uint32_t s);

/// s odd >= 3: all ones except zeros on the first subdiagonal; params (1,2,s,2).
LinearAont construct_odd_bastion(std::uint32_t s);

/// s odd >= 5: ones on the diagonal, last row and last column; params (2,s-1,s,2).
LinearAont construct_bs(std::uint32_t s);

/// s even >= 4: the even bastion matrix re-certified at (2,s-1,s,2).
LinearAont construct_even_2s1(std::uint32_t s);

/// Cauchy construction, q >= 2s: M[i][j] = 1/(x_i - y_j) with x_i = code i,
/// y_j = code s+j. Every square submatrix is invertible, so the result is
/// certified at (t,t,s,q) for the requested 1 <= t <= s.
LinearAont construct_cauchy(std::uint32_t t, std::uint32_t s, Field field);

/// Sheds one dimension (requires s > to): deletes row 0 and the least column
/// whose cofactor is invertible, then re-certifies at the same (ti, to).
LinearAont shrink_by_cofactor(const LinearAont& a);

/// Least column j such that deleting row 0 and column j of a square matrix
/// leaves an invertible (s-1)x(s-1) block; nullopt for singular inputs.
std::optional<std::uint32_t> least_invertible_cofactor_col(const MatrixGF& m);

// --- fast GF(2) transform paths, instrumented with an XOR counter ---

/// Matches the bastion matrix transform output bit for bit; the odd-s path
/// costs exactly 2s-2 XORs. `xor_count`, when given, receives the number of
/// GF(2) additions performed.
std::vector<Fe> fast_bastion_transform(std::uint32_t s, std::span<const Fe> x,
                                       std::uint64_t* xor_count = nullptr);
std::vector<Fe> fast_bastion_inverse(std::uint32_t s, std::span<const Fe> y,
                                     std::uint64_t* xor_count = nullptr);

// --- embedded catalog ---

struct CatalogEntry {
    AontParams params;
    const char* text; // matrix file format, parsed and certified on load
};

/// All embedded reference matrices (loaded and certified once, cached).
/// Throws corrupt_catalog if any entry fails certification.
const std::vector<LinearAont>& catalog();

/// The catalog entry with exactly these parameters, if present.
std::optional<LinearAont> catalog_lookup(std::uint32_t ti, std::uint32_t to, std::uint32_t s,
                                         std::uint32_t q);

} // namespace aont
