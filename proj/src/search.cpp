#include "aont/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <random>
#include <thread>

#include "json.hpp"

#include "aont/bounds.hpp"
#include "aont/combi.hpp"
#include "aont/error.hpp"

namespace aont {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::json;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// All scaling-normalized nonzero row vectors (leading coefficient 1) in
// lexicographic code order; the index order doubles as the row-order
// constraint that kills row permutations.
struct CandTable {
    std::uint32_t s = 0, q = 0;
    Field field;
    std::uint32_t count = 0;
    std::vector<std::uint16_t> codes; // count * s
    std::vector<std::uint32_t> row0;  // indices of the 0..01..1 vectors, ascending

    const std::uint16_t* row(std::uint32_t i) const {
        return codes.data() + static_cast<std::size_t>(i) * s;
    }
};

std::uint32_t find_candidate(const CandTable& t, std::span<const std::uint16_t> v) {
    std::uint32_t lo = 0, hi = t.count;
    while (lo < hi) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        const std::uint16_t* r = t.row(mid);
        if (std::lexicographical_compare(r, r + t.s, v.begin(), v.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == t.count || !std::equal(v.begin(), v.end(), t.row(lo)))
        raise(Errc::bad_format, "vector is not a normalized candidate row");
    return lo;
}

CandTable build_candidates(const AontParams& p) {
    CandTable t;
    t.s = p.s;
    t.q = p.q;
    t.field = build_field_q(p.q);

    unsigned __int128 total = 1;
    for (std::uint32_t i = 0; i < p.s; ++i) total *= p.q;
    if ((total - 1) / (p.q - 1) > (1u << 22))
        raise(Errc::too_large, "candidate row space too large for tree search");

    // Odometer over (c_0 .. c_{s-1}), last digit fastest = lexicographic
    // order on code tuples.
    std::vector<std::uint16_t> digits(p.s, 0);
    while (true) {
        std::uint32_t i = p.s;
        while (i > 0 && ++digits[i - 1] == p.q) digits[--i] = 0;
        if (i == 0) break;
        std::uint32_t first = 0;
        while (digits[first] == 0) ++first;
        if (digits[first] == 1) t.codes.insert(t.codes.end(), digits.begin(), digits.end());
    }
    t.count = static_cast<std::uint32_t>(t.codes.size() / p.s);

    std::vector<std::uint16_t> v(p.s);
    for (std::uint32_t a = p.s; a-- > 0;) { // descending zero-prefix = ascending lex
        std::fill(v.begin(), v.end(), 1);
        std::fill(v.begin(), v.begin() + a, 0);
        t.row0.push_back(find_candidate(t, v));
    }
    return t;
}

// Rank >= t of a small code matrix by elimination over the field.
bool codes_rank_at_least(std::vector<Fe>& scratch, std::uint32_t nr, std::uint32_t nc,
                         std::uint32_t t, const FieldSpec& f) {
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < nc && r < nr; ++c) {
        std::uint32_t pivot = r;
        while (pivot < nr && scratch[pivot * nc + c] == 0) ++pivot;
        if (pivot == nr) continue;
        if (pivot != r)
            for (std::uint32_t j = c; j < nc; ++j) std::swap(scratch[pivot * nc + j], scratch[r * nc + j]);
        const Fe inv = fe_inv(scratch[r * nc + c], f);
        for (std::uint32_t i = r + 1; i < nr; ++i) {
            const Fe v = scratch[i * nc + c];
            if (v == 0) continue;
            const Fe factor = fe_mul(v, inv, f);
            for (std::uint32_t j = c; j < nc; ++j)
                scratch[i * nc + j] = fe_sub(scratch[i * nc + j], fe_mul(factor, scratch[r * nc + j], f), f);
        }
        if (++r >= t) return true;
    }
    return r >= t;
}

// Exact feasibility of a partial row stack: no to x ti submatrix of the rows
// placed so far may fall below rank ti.
//
//   ti == 1: a violation is a column holding >= to zeros.
//   ti == 2: rank <= 1 on a column pair means to rows share one scaling
//            class (zero projections join every class), so per-pair class
//            counters decide in O(pairs) per push.
//   ti >= 3: direct enumeration of row subsets containing the newest row.
class Constraints {
public:
    Constraints(const CandTable& t, const AontParams& p) : t_(t), p_(p) {
        if (p.ti == 1) {
            zeros_.assign(p.s, 0);
        } else if (p.ti == 2) {
            for (std::uint32_t i = 0; i < p.s; ++i)
                for (std::uint32_t j = i + 1; j < p.s; ++j)
                    pairs_.push_back(static_cast<std::uint16_t>(i << 8 | j));
            slots_ = p.q + 2; // classes 0..q-1, the (0,*) class, the zero slot
            counts_.assign(pairs_.size() * slots_, 0);
        } else {
            if (binomial(p.s, p.ti) > (1u << 20))
                raise(Errc::too_large, "too many column subsets for the generic constraint path");
            std::vector<std::uint32_t> cols(p.ti);
            for (std::uint32_t i = 0; i < p.ti; ++i) cols[i] = i;
            do {
                col_sets_.push_back(cols);
            } while (next_combination(cols, p.s));
        }
    }

    bool push(std::uint32_t cand) {
        const std::uint16_t* row = t_.row(cand);
        bool ok = true;
        if (p_.ti == 1) {
            for (std::uint32_t c = 0; c < p_.s; ++c)
                if (row[c] == 0 && ++zeros_[c] >= p_.to) ok = false;
            if (!ok) undo_zeros(row);
        } else if (p_.ti == 2) {
            std::size_t pi = 0;
            for (; pi < pairs_.size(); ++pi) {
                std::uint8_t* slot = counts_.data() + pi * slots_;
                const std::uint32_t cls = pair_class(row, pi);
                ++slot[cls];
                const std::uint8_t nzero = slot[p_.q + 1];
                if (cls == p_.q + 1) {
                    std::uint8_t best = 0;
                    for (std::uint32_t c = 0; c <= p_.q; ++c) best = std::max(best, slot[c]);
                    if (best + nzero >= p_.to) {
                        ok = false;
                        ++pi;
                        break;
                    }
                } else if (slot[cls] + nzero >= p_.to) {
                    ok = false;
                    ++pi;
                    break;
                }
            }
            if (!ok) undo_pairs(row, pi);
        } else {
            stack_.push_back(cand);
            if (stack_.size() >= p_.to && violates_generic()) {
                stack_.pop_back();
                return false;
            }
            return true;
        }
        if (ok) stack_.push_back(cand);
        return ok;
    }

    void pop(std::uint32_t cand) {
        const std::uint16_t* row = t_.row(cand);
        if (p_.ti == 1)
            undo_zeros(row);
        else if (p_.ti == 2)
            undo_pairs(row, pairs_.size());
        stack_.pop_back();
    }

private:
    std::uint32_t pair_class(const std::uint16_t* row, std::size_t pi) const {
        const Fe a = row[pairs_[pi] >> 8], b = row[pairs_[pi] & 0xff];
        if (a == 0) return b == 0 ? p_.q + 1 : p_.q;
        return fe_mul(b, fe_inv(a, *t_.field), *t_.field);
    }

    void undo_zeros(const std::uint16_t* row) {
        for (std::uint32_t c = 0; c < p_.s; ++c)
            if (row[c] == 0) --zeros_[c];
    }

    void undo_pairs(const std::uint16_t* row, std::size_t upto) {
        for (std::size_t pi = 0; pi < upto; ++pi) --counts_[pi * slots_ + pair_class(row, pi)];
    }

    bool violates_generic() {
        const std::uint32_t newest = static_cast<std::uint32_t>(stack_.size()) - 1;
        std::vector<std::uint32_t> base(p_.to - 1);
        for (std::uint32_t i = 0; i + 1 < p_.to; ++i) base[i] = i;
        std::vector<Fe> scratch(p_.to * p_.ti);
        do {
            for (const auto& cols : col_sets_) {
                std::uint32_t r = 0;
                auto fill = [&](std::uint32_t member) {
                    const std::uint16_t* row = t_.row(stack_[member]);
                    for (std::uint32_t c = 0; c < p_.ti; ++c) scratch[r * p_.ti + c] = row[cols[c]];
                    ++r;
                };
                for (auto m : base) fill(m);
                fill(newest);
                if (!codes_rank_at_least(scratch, p_.to, p_.ti, p_.ti, *t_.field)) return true;
            }
        } while (next_combination(base, newest));
        return false;
    }

    const CandTable& t_;
    AontParams p_;
    std::vector<std::uint8_t> zeros_;
    std::vector<std::uint16_t> pairs_; // packed (i << 8 | j)
    std::uint32_t slots_ = 0;
    std::vector<std::uint8_t> counts_;
    std::vector<std::vector<std::uint32_t>> col_sets_;
    std::vector<std::uint32_t> stack_;
};

struct SharedState {
    std::atomic<bool> stop{false};
    std::atomic<bool> found{false};
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t max_nodes = 0; // cap on nodes in this run; 0 = unlimited
    double max_seconds = 0.0;
    Clock::time_point t0;
    double prior_elapsed = 0.0;
    std::mutex result_mu;
    std::optional<MatrixGF> result;

    bool over_budget() {
        if (max_nodes && nodes.load(std::memory_order_relaxed) >= max_nodes) return true;
        if (max_seconds > 0 && prior_elapsed + seconds_since(t0) >= max_seconds) return true;
        return false;
    }
};

enum class RunStop { exhausted, found, budget };

// One depth-first traversal on one thread. Rows below `base_depth` are
// pre-pushed by the caller; the run returns once the subtree is done.
class Dfs {
public:
    Dfs(const CandTable& t, const AontParams& p, Constraints& cons, SharedState& shared,
        const std::vector<std::uint32_t>* order)
        : t_(t), p_(p), cons_(cons), shared_(shared), order_(order) {
        chosen_.assign(p.s + 1, 0);
        pos_.assign(p.s + 1, 0);
    }

    std::vector<std::uint32_t> chosen_, pos_;
    std::uint32_t depth = 0;

    std::uint32_t level_size(std::uint32_t level) const {
        return level == 0 ? static_cast<std::uint32_t>(t_.row0.size()) : t_.count;
    }

    std::uint32_t order_at(std::uint32_t level, std::uint32_t pos) const {
        if (level == 0) return t_.row0[pos];
        return order_ ? (*order_)[pos] : pos;
    }

    // With the identity order the floor constraint is a starting offset
    // rather than a filter.
    std::uint32_t init_pos(std::uint32_t level) const {
        if (level >= 2 && !order_) return chosen_[level - 1] + 1;
        return 0;
    }

    bool admissible(std::uint32_t cand, std::uint32_t level) const {
        if (level == 0) return true;
        if (cand == chosen_[0]) return false;
        return level == 1 || cand > chosen_[level - 1];
    }

    RunStop run(std::uint32_t base_depth) {
        while (true) {
            if ((local_nodes_ & 0xfff) == 0) {
                flush();
                if (shared_.stop.load(std::memory_order_relaxed) || shared_.over_budget())
                    return RunStop::budget;
            }
            if (depth == p_.s) {
                if (leaf()) {
                    flush();
                    return RunStop::found;
                }
                --depth;
                cons_.pop(chosen_[depth]);
                continue;
            }
            if (pos_[depth] >= level_size(depth)) {
                if (depth == base_depth) {
                    flush();
                    return RunStop::exhausted;
                }
                --depth;
                cons_.pop(chosen_[depth]);
                continue;
            }
            const std::uint32_t cand = order_at(depth, pos_[depth]++);
            if (!admissible(cand, depth)) continue;
            ++local_nodes_;
            if (cons_.push(cand)) {
                chosen_[depth] = cand;
                ++depth;
                if (depth < p_.s) pos_[depth] = init_pos(depth);
            }
        }
    }

    std::uint64_t local_nodes() const { return local_nodes_; }

private:
    void flush() {
        shared_.nodes.fetch_add(local_nodes_ - flushed_, std::memory_order_relaxed);
        flushed_ = local_nodes_;
    }

    bool leaf() {
        std::vector<Fe> entries;
        entries.reserve(static_cast<std::size_t>(p_.s) * p_.s);
        for (std::uint32_t i = 0; i < p_.s; ++i) {
            const std::uint16_t* row = t_.row(chosen_[i]);
            entries.insert(entries.end(), row, row + p_.s);
        }
        MatrixGF m = make_matrix(t_.field, p_.s, p_.s, std::move(entries));
        if (rank(m) != p_.s) return false;
        // The verifier is the oracle: only certified matrices leave the search.
        if (!verify_linear_aont(m, p_.ti, p_.to).pass) return false;
        std::lock_guard<std::mutex> lock(shared_.result_mu);
        if (!shared_.result) shared_.result = std::move(m);
        shared_.found.store(true);
        shared_.stop.store(true);
        return true;
    }

    const CandTable& t_;
    AontParams p_;
    Constraints& cons_;
    SharedState& shared_;
    const std::vector<std::uint32_t>* order_;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t flushed_ = 0;
};

struct Checkpoint {
    std::vector<std::uint32_t> chosen, pos;
    std::uint32_t depth = 0;
    std::uint64_t nodes = 0;
    double elapsed = 0.0;
};

void write_checkpoint(const std::string& path, const AontParams& p, const Checkpoint& cp) {
    Json j;
    j["format"] = 1;
    j["params"] = {{"ti", p.ti}, {"to", p.to}, {"s", p.s}, {"q", p.q}};
    j["chosen"] = std::vector<std::uint32_t>(cp.chosen.begin(), cp.chosen.begin() + cp.depth);
    j["pos"] = std::vector<std::uint32_t>(cp.pos.begin(), cp.pos.begin() + cp.depth + 1);
    j["depth"] = cp.depth;
    j["nodes"] = cp.nodes;
    j["elapsed"] = cp.elapsed;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) raise(Errc::io_error, "cannot write checkpoint " + tmp);
        os << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        raise(Errc::io_error, "cannot move checkpoint into place: " + path);
}

std::optional<Checkpoint> read_checkpoint(const std::string& path, const AontParams& p) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    Json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        raise(Errc::bad_format, "unreadable checkpoint: " + std::string(e.what()));
    }
    const auto& jp = j.at("params");
    if (jp.at("ti") != p.ti || jp.at("to") != p.to || jp.at("s") != p.s || jp.at("q") != p.q)
        raise(Errc::bad_format, "checkpoint parameters do not match this search");
    Checkpoint cp;
    cp.chosen = j.at("chosen").get<std::vector<std::uint32_t>>();
    cp.pos = j.at("pos").get<std::vector<std::uint32_t>>();
    cp.depth = j.at("depth").get<std::uint32_t>();
    cp.nodes = j.at("nodes").get<std::uint64_t>();
    cp.elapsed = j.at("elapsed").get<double>();
    if (cp.depth != cp.chosen.size() || cp.pos.size() != cp.depth + 1 || cp.depth > p.s)
        raise(Errc::bad_format, "checkpoint stack is inconsistent");
    return cp;
}

SearchOutcome run_single(const SearchConfig& cfg, const CandTable& table,
                         const std::vector<std::uint32_t>* order) {
    const AontParams& p = cfg.params;
    SharedState shared;
    shared.t0 = Clock::now();
    shared.max_seconds = cfg.budget.max_seconds;
    if (cfg.budget.max_nodes) shared.max_nodes = cfg.budget.max_nodes;

    Constraints cons(table, p);
    Dfs dfs(table, p, cons, shared, order);

    std::uint64_t prior_nodes = 0;
    const bool checkpointing = !cfg.checkpoint_path.empty();
    if (checkpointing) {
        if (auto cp = read_checkpoint(cfg.checkpoint_path, p)) {
            for (std::uint32_t lvl = 0; lvl < cp->depth; ++lvl) {
                const std::uint32_t cand = cp->chosen[lvl];
                if (cand >= table.count || !dfs.admissible(cand, lvl))
                    raise(Errc::bad_format, "checkpoint prefix violates the row order");
                if (!cons.push(cand))
                    raise(Errc::bad_format, "checkpoint prefix fails the rank constraints");
                dfs.chosen_[lvl] = cand;
            }
            for (std::uint32_t lvl = 0; lvl <= cp->depth; ++lvl) dfs.pos_[lvl] = cp->pos[lvl];
            dfs.depth = cp->depth;
            prior_nodes = cp->nodes;
            shared.prior_elapsed = cp->elapsed;
        }
    }

    const RunStop stop = dfs.run(0);
    SearchOutcome out;
    out.nodes_explored = prior_nodes + shared.nodes.load();
    out.elapsed_seconds = shared.prior_elapsed + seconds_since(shared.t0);
    if (stop == RunStop::found) {
        out.status = SearchStatus::found;
        out.matrix = std::move(shared.result);
    } else if (stop == RunStop::exhausted) {
        out.status = SearchStatus::exhausted;
    } else {
        out.status = SearchStatus::budget_exceeded;
        if (checkpointing) {
            Checkpoint cp;
            cp.chosen = dfs.chosen_;
            cp.pos = dfs.pos_;
            cp.depth = dfs.depth;
            cp.nodes = out.nodes_explored;
            cp.elapsed = out.elapsed_seconds;
            write_checkpoint(cfg.checkpoint_path, p, cp);
            out.note = "frontier checkpointed to " + cfg.checkpoint_path;
        }
    }
    if (checkpointing && stop != RunStop::budget) std::remove(cfg.checkpoint_path.c_str());
    return out;
}

SearchOutcome run_parallel(const SearchConfig& cfg, const CandTable& table) {
    const AontParams& p = cfg.params;
    SharedState shared;
    shared.t0 = Clock::now();
    shared.max_seconds = cfg.budget.max_seconds;
    if (cfg.budget.max_nodes) shared.max_nodes = cfg.budget.max_nodes;

    // Partition by (row 0, row 1) prefixes. The enumeration performs the
    // depth-0/1 node work exactly once, so exhausted totals match a
    // sequential traversal.
    struct Task {
        std::uint32_t c0, c1;
    };
    std::vector<Task> tasks;
    {
        Constraints cons(table, p);
        for (std::uint32_t p0 = 0; p0 < table.row0.size(); ++p0) {
            const std::uint32_t c0 = table.row0[p0];
            shared.nodes.fetch_add(1);
            if (!cons.push(c0)) continue;
            for (std::uint32_t c1 = 0; c1 < table.count; ++c1) {
                if (c1 == c0) continue;
                shared.nodes.fetch_add(1);
                if (cons.push(c1)) {
                    tasks.push_back({c0, c1});
                    cons.pop(c1);
                }
            }
            cons.pop(c0);
        }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> any_budget{false};
    auto worker = [&] {
        Constraints cons(table, p);
        while (!shared.stop.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task t = tasks[i];
            if (!cons.push(t.c0) || !cons.push(t.c1)) // cannot fail: prefix was screened
                raise(Errc::bad_params, "internal: screened prefix rejected");
            Dfs dfs(table, p, cons, shared, nullptr);
            dfs.chosen_[0] = t.c0;
            dfs.chosen_[1] = t.c1;
            dfs.depth = 2;
            dfs.pos_[2] = dfs.init_pos(2);
            const RunStop stop = dfs.run(2);
            cons.pop(t.c1);
            cons.pop(t.c0);
            if (stop == RunStop::found) return;
            if (stop == RunStop::budget) {
                if (!shared.found.load()) {
                    any_budget.store(true);
                    shared.stop.store(true);
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::max(1u, cfg.workers);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SearchOutcome out;
    out.nodes_explored = shared.nodes.load();
    out.elapsed_seconds = seconds_since(shared.t0);
    if (shared.found.load()) {
        out.status = SearchStatus::found;
        out.matrix = std::move(shared.result);
    } else if (any_budget.load()) {
        out.status = SearchStatus::budget_exceeded;
    } else {
        out.status = SearchStatus::exhausted;
    }
    return out;
}

SearchOutcome engine(const SearchConfig& cfg) {
    const AontParams& p = cfg.params;
    make_params(p.ti, p.to, p.s, p.q);

    if (!cfg.checkpoint_path.empty()) {
        if (cfg.strategy != SearchStrategy::exhaustive)
            raise(Errc::bad_params, "checkpointing requires the exhaustive strategy");
        if (cfg.workers > 1) raise(Errc::bad_params, "checkpointing requires workers == 1");
    }

    if (cfg.use_bound_pruning) {
        if (auto bound = theorem_upper_s(p.ti, p.to, p.q); bound && *bound < p.s) {
            SearchOutcome out;
            out.status = SearchStatus::exhausted;
            out.note = "size exceeds the closed-form bound (" + std::to_string(*bound) +
                       "); nonexistence holds without traversal";
            return out;
        }
    }

    CandTable table = build_candidates(p);

    switch (cfg.strategy) {
    case SearchStrategy::exhaustive:
        if (cfg.workers > 1 && p.s > 2) return run_parallel(cfg, table);
        return run_single(cfg, table, nullptr);
    case SearchStrategy::randomized: {
        std::mt19937_64 rng(cfg.seed);
        std::vector<std::uint32_t> order(table.count);
        for (std::uint32_t i = 0; i < table.count; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        return run_single(cfg, table, &order);
    }
    case SearchStrategy::hybrid: {
        SearchConfig probe = cfg;
        probe.strategy = SearchStrategy::randomized;
        probe.checkpoint_path.clear();
        probe.budget.max_nodes = cfg.budget.max_nodes ? cfg.budget.max_nodes / 2 : (1ull << 20);
        probe.budget.max_seconds = cfg.budget.max_seconds / 2;
        SearchOutcome first = engine(probe);
        if (first.status == SearchStatus::found) return first;
        SearchConfig rest = cfg;
        rest.strategy = SearchStrategy::exhaustive;
        if (rest.budget.max_nodes)
            rest.budget.max_nodes -= std::min(rest.budget.max_nodes, first.nodes_explored);
        if (rest.budget.max_seconds > 0)
            rest.budget.max_seconds = std::max(0.1, rest.budget.max_seconds - first.elapsed_seconds);
        SearchOutcome out = engine(rest);
        out.nodes_explored += first.nodes_explored;
        out.elapsed_seconds += first.elapsed_seconds;
        return out;
    }
    }
    raise(Errc::bad_params, "unknown strategy");
}

} // namespace

SearchOutcome search_linear_aont(const SearchConfig& cfg) { return engine(cfg); }

SearchOutcome prove_nonexistence(const SearchConfig& cfg) {
    if (cfg.strategy != SearchStrategy::exhaustive)
        raise(Errc::bad_params, "nonexistence proofs require the exhaustive strategy");
    return engine(cfg);
}

SearchOutcome compute_S(std::uint32_t ti, std::uint32_t to, std::uint32_t q, std::uint32_t s_cap,
                        const SearchConfig& base) {
    if (s_cap < to) raise(Errc::bad_params, "s_cap must be at least to");
    make_params(ti, to, to, q);

    SearchOutcome out;
    SearchFrontier frontier;
    out.status = SearchStatus::found;
    for (std::uint32_t s = to; s <= s_cap; ++s) {
        SearchConfig cfg = base;
        cfg.params = AontParams{ti, to, s, q};
        cfg.checkpoint_path.clear();
        if (cfg.budget.max_nodes) {
            if (out.nodes_explored >= cfg.budget.max_nodes) {
                out.status = SearchStatus::budget_exceeded;
                break;
            }
            cfg.budget.max_nodes -= out.nodes_explored;
        }
        if (cfg.budget.max_seconds > 0) {
            cfg.budget.max_seconds -= out.elapsed_seconds;
            if (cfg.budget.max_seconds <= 0) {
                out.status = SearchStatus::budget_exceeded;
                break;
            }
        }
        SearchOutcome step = search_linear_aont(cfg);
        out.nodes_explored += step.nodes_explored;
        out.elapsed_seconds += step.elapsed_seconds;
        if (step.status == SearchStatus::found) {
            frontier.largest_found = s;
            out.matrix = std::move(step.matrix);
            out.status = SearchStatus::found;
            continue;
        }
        if (step.status == SearchStatus::exhausted) {
            frontier.smallest_impossible = s;
            frontier.exact = frontier.largest_found + 1 == s;
            out.status = SearchStatus::exhausted;
            if (!step.note.empty()) out.note = step.note;
            break;
        }
        out.status = SearchStatus::budget_exceeded;
        break;
    }
    if (out.status == SearchStatus::found && frontier.largest_found == s_cap)
        out.note = "size cap reached with a witness at the cap; larger sizes unexplored";
    out.frontier = frontier;
    return out;
}

} // namespace aont
