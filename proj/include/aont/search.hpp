#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aont/linear.hpp"

namespace aont {

enum class SearchStrategy { exhaustive, randomized, hybrid };

/// 0 means unlimited. Node counts are candidate placements attempted; the
/// limits are polled every 2^16 nodes.
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
};

struct SearchConfig {
    AontParams params;
    SearchStrategy strategy = SearchStrategy::exhaustive;
    SearchBudget budget;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    /// When set (exhaustive, workers == 1 only): budget interruptions write
    /// the traversal frontier here, and a later run resumes from it. The file
    /// is removed once the traversal completes.
    std::string checkpoint_path;
    /// Refuse to traverse sizes the closed-form bounds already exclude.
    bool use_bound_pruning = true;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

/// Range bracketing produced by compute_S.
struct SearchFrontier {
    std::uint32_t largest_found = 0;     // 0 = none found yet
    std::uint32_t smallest_impossible = 0; // 0 = no exhaustion yet
    bool exact = false;                  // the two meet
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::budget_exceeded;
    std::optional<MatrixGF> matrix; // certified by verify_linear_aont before return
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
    std::string note;
    std::optional<SearchFrontier> frontier;
};

/// Backtracking search for an s x s matrix over GF(q) passing the (ti, to)
/// rank criterion.
///
/// The tree is the monomial-canonical space: row 0 is one of the s vectors
/// 0..01..1 (column permutations and scalings spent on it), later rows are
/// scaled to leading coefficient 1 and kept strictly increasing (row
/// permutations and scalings). Every equivalence class of solutions meets
/// this space, so a completed traversal that found nothing is a proof of
/// nonexistence. Partial rows are pruned through exact incremental rank
/// constraints; any matrix returned was re-certified by the verifier.
///
/// Deterministic (status, matrix, node count) for a fixed seed and
/// workers == 1; node counts on full exhaustion are scheduling-independent.
SearchOutcome search_linear_aont(const SearchConfig& cfg);

/// search_linear_aont restricted to the exhaustive strategy; an `exhausted`
/// outcome certifies that no linear (ti,to,s,q) transform exists.
SearchOutcome prove_nonexistence(const SearchConfig& cfg);

/// Ascending scan s = to, to+1, ... up to s_cap: records the largest size
/// with a witness and the smallest size proven impossible; the scan stops at
/// the first exhaustion (shrinking by cofactors makes existence downward
/// closed, so one exhaustion settles everything above it).
SearchOutcome compute_S(std::uint32_t ti, std::uint32_t to, std::uint32_t q, std::uint32_t s_cap,
                        const SearchConfig& base);

} // namespace aont
