#pragma once

#include "decisum/combination.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace decisum {

enum class Direction { Min, Max };

/// One (first, second) number pair as supplied by the user.
using NumberPair = std::pair<double, double>;
using PairList = std::vector<NumberPair>;

/// Selection bits in input order: 1 picks the second element of a pair.
using Selection = std::vector<std::uint8_t>;

/// Normalized problem: every pair ordered so v0 <= v1, gaps sorted ascending.
///
/// For Direction::Max every value is negated before ordering, so the
/// smallest internal sum corresponds to the largest user-facing sum.
/// Immutable after construction.
class ProblemInstance {
public:
    static ProblemInstance normalize(const PairList& pairs, Direction direction = Direction::Min);

    std::size_t size() const noexcept { return v0_.size(); }
    Direction direction() const noexcept { return direction_; }

    /// Smaller/larger element of each pair, input order, internal scale.
    std::span<const double> v0() const noexcept { return v0_; }
    std::span<const double> v1() const noexcept { return v1_; }

    /// Gaps v1 - v0 sorted ascending; delta()[i] belongs to input pair perm()[i].
    std::span<const double> delta() const noexcept { return delta_; }
    std::span<const std::size_t> perm() const noexcept { return perm_; }
    std::span<const std::size_t> inverse_perm() const noexcept { return inverse_perm_; }

    /// 1 where the input pair was stored as (larger, smaller) after the direction transform.
    std::span<const std::uint8_t> flip_mask() const noexcept { return flip_mask_; }

    /// Sum of all v0 entries, the smallest internal sum.
    double s1() const noexcept { return s1_; }

    /// Internal sum of a sorted-domain combination, recomputed from scratch.
    double score(const Combination& combo) const;

    /// Maps an internal sum to the user's scale (undoes the Max negation).
    double external_sum(double internal) const noexcept {
        return direction_ == Direction::Max ? -internal : internal;
    }

    /// Selection bits in input order for a sorted-domain combination.
    Selection denormalize(const Combination& combo) const;

private:
    ProblemInstance() = default;

    std::vector<double> v0_;
    std::vector<double> v1_;
    std::vector<double> delta_;
    std::vector<std::size_t> perm_;
    std::vector<std::size_t> inverse_perm_;
    std::vector<std::uint8_t> flip_mask_;
    double s1_ = 0.0;
    Direction direction_ = Direction::Min;
};

/// Throws NonFiniteInput / EmptyInput for lists the algorithm cannot rank.
void validate_pairs(const PairList& pairs);

} // namespace decisum
