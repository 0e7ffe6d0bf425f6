#pragma once

#include "decisum/enumerator.hpp"
#include "decisum/problem.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace decisum::oracle {

/// Largest N the exhaustive routines accept.
inline constexpr std::size_t max_pairs = 24;

/// Ranks all 2^N selections by a from-scratch sum and returns the first k.
///
/// Ties are ordered by the selection bits read lexicographically (pair 1
/// most significant). Deliberately naive: no normalization, no shifts.
std::vector<RankedChoice> brute_force_top_k(const PairList& pairs, std::uint64_t k,
                                            Direction direction = Direction::Min);

using SelectionPredicate = std::function<bool(std::span<const std::uint8_t>)>;

/// Best-ranked selection accepted by the predicate, with its rank in the
/// full brute-force ordering. Runs in O(2^N) memory-free passes.
std::optional<RankedChoice> brute_force_first_match(const PairList& pairs, Direction direction,
                                                    const SelectionPredicate& accept);

} // namespace decisum::oracle
