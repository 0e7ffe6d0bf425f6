#include "decisum/oracle.hpp"

#include "decisum/errors.hpp"

#include <algorithm>
#include <string>

namespace decisum::oracle {
namespace {

void check_size(const PairList& pairs) {
    validate_pairs(pairs);
    if (pairs.size() > max_pairs) {
        throw TooLarge("brute force is limited to " + std::to_string(max_pairs) + " pairs, got " +
                       std::to_string(pairs.size()));
    }
}

double sum_of(const PairList& pairs, std::uint32_t mask) {
    double s = 0.0;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        s += ((mask >> j) & 1U) != 0 ? pairs[j].second : pairs[j].first;
    }
    return s;
}

// Bit j of mask is pair j; lexicographic order wants pair 0 most significant.
std::uint32_t lex_key(std::uint32_t mask, std::size_t n) {
    std::uint32_t key = 0;
    for (std::size_t j = 0; j < n; ++j) {
        key = (key << 1) | ((mask >> j) & 1U);
    }
    return key;
}

Selection selection_of(std::uint32_t mask, std::size_t n) {
    Selection sel(n);
    for (std::size_t j = 0; j < n; ++j) {
        sel[j] = static_cast<std::uint8_t>((mask >> j) & 1U);
    }
    return sel;
}

struct Candidate {
    double sum;
    std::uint32_t key;
    std::uint32_t mask;
};

// true when a ranks ahead of b
bool ahead(const Candidate& a, const Candidate& b, Direction direction) {
    if (a.sum != b.sum) {
        return direction == Direction::Min ? a.sum < b.sum : a.sum > b.sum;
    }
    return a.key < b.key;
}

} // namespace

std::vector<RankedChoice> brute_force_top_k(const PairList& pairs, std::uint64_t k, Direction direction) {
    if (k == 0) {
        throw InvalidK("k must be at least 1");
    }
    check_size(pairs);
    const std::size_t n = pairs.size();
    const std::uint64_t total = std::uint64_t{1} << n;

    std::vector<Candidate> all(total);
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        all[m] = {sum_of(pairs, mask), lex_key(mask, n), mask};
    }
    const auto take = static_cast<std::ptrdiff_t>(std::min(k, total));
    auto cmp = [direction](const Candidate& a, const Candidate& b) { return ahead(a, b, direction); };
    std::partial_sort(all.begin(), all.begin() + take, all.end(), cmp);

    std::vector<RankedChoice> out;
    out.reserve(static_cast<std::size_t>(take));
    for (std::ptrdiff_t r = 0; r < take; ++r) {
        out.push_back({static_cast<std::uint64_t>(r + 1), all[r].sum, selection_of(all[r].mask, n)});
    }
    return out;
}

std::optional<RankedChoice> brute_force_first_match(const PairList& pairs, Direction direction,
                                                    const SelectionPredicate& accept) {
    check_size(pairs);
    const std::size_t n = pairs.size();
    const std::uint64_t total = std::uint64_t{1} << n;

    std::optional<Candidate> best;
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        const Candidate c{sum_of(pairs, mask), lex_key(mask, n), mask};
        if (best && !ahead(c, *best, direction)) {
            continue;
        }
        const Selection sel = selection_of(mask, n);
        if (accept(sel)) {
            best = c;
        }
    }
    if (!best) {
        return std::nullopt;
    }

    std::uint64_t rank = 1;
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        const Candidate c{sum_of(pairs, mask), lex_key(mask, n), mask};
        if (ahead(c, *best, direction)) {
            ++rank;
        }
    }
    return RankedChoice{rank, best->sum, selection_of(best->mask, n)};
}

} // namespace decisum::oracle
