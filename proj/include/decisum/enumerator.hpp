#pragma once

#include "decisum/combination.hpp"
#include "decisum/problem.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

namespace decisum {

struct ScoredCombination {
    Combination combo;
    double sum = 0.0; ///< internal scale
};

/// One emitted result in the user's terms.
struct RankedChoice {
    std::uint64_t rank = 0; ///< 1-based
    double sum = 0.0;       ///< user scale
    Selection selection;
};

/// Pending combinations kept as one sequence ordered by (sum, lex bits).
///
/// Each step drops the head and merges a sorted batch of new entries into
/// the remainder, so a step costs O(|pending| + batch log batch).
class PendingSet {
public:
    struct Entry {
        double sum;
        const Combination* combo; ///< owned by the enumerator's seen-set
    };

    bool empty() const noexcept { return head_ == sequence_.size(); }
    std::size_t size() const noexcept { return sequence_.size() - head_; }

    /// Smallest sum; ties resolved by the lexicographically smallest bits.
    const Entry& min() const noexcept { return sequence_[head_]; }

    /// Removes the current minimum and integrates batch in a single pass.
    void pop_and_integrate(std::vector<Entry>& batch);

    void push(Entry entry);

    static bool before(const Entry& a, const Entry& b) noexcept {
        if (a.sum != b.sum) {
            return a.sum < b.sum;
        }
        return lex_less(*a.combo, *b.combo);
    }

private:
    std::vector<Entry> sequence_;
    std::vector<Entry> scratch_;
    std::size_t head_ = 0;
};

/// Best-first iterator over all 2^N combinations in non-decreasing sum order.
///
/// Single owner; distinct enumerators over one shared instance may run on
/// different threads.
class Enumerator {
public:
    explicit Enumerator(std::shared_ptr<const ProblemInstance> instance);

    const ProblemInstance& instance() const noexcept { return *instance_; }
    std::shared_ptr<const ProblemInstance> shared_instance() const noexcept { return instance_; }

    /// Next combination and its internal sum, or nullopt once all 2^N are out.
    std::optional<ScoredCombination> advance();

    /// Same as advance() but mapped back to the input order and scale.
    std::optional<RankedChoice> next_ranked();

    std::size_t pending_size() const noexcept { return pending_.size(); }
    std::size_t seen_size() const noexcept { return seen_.size(); }
    std::uint64_t emitted_count() const noexcept { return emitted_; }
    bool exhausted() const noexcept { return pending_.empty(); }

    /// Combinations currently pending, in extraction order.
    std::vector<ScoredCombination> pending_snapshot() const;

private:
    std::shared_ptr<const ProblemInstance> instance_;
    std::unordered_set<Combination, CombinationHash> seen_;
    PendingSet pending_;
    std::vector<PendingSet::Entry> batch_;
    std::uint64_t emitted_ = 0;
};

/// The k smallest (Min) or largest (Max) sums with their selections.
/// Returns min(k, 2^N) entries.
std::vector<RankedChoice> top_k(const PairList& pairs, std::uint64_t k, Direction direction = Direction::Min);

} // namespace decisum
