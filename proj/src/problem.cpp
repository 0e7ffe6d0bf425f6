#include "decisum/problem.hpp"

#include "decisum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace decisum {

void validate_pairs(const PairList& pairs) {
    if (pairs.empty()) {
        throw EmptyInput("at least one number pair is required");
    }
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (!std::isfinite(pairs[j].first) || !std::isfinite(pairs[j].second)) {
            throw NonFiniteInput("pair " + std::to_string(j + 1) + " contains a NaN or infinite value");
        }
    }
}

ProblemInstance ProblemInstance::normalize(const PairList& pairs, Direction direction) {
    validate_pairs(pairs);

    const std::size_t n = pairs.size();
    ProblemInstance inst;
    inst.direction_ = direction;
    inst.v0_.resize(n);
    inst.v1_.resize(n);
    inst.flip_mask_.assign(n, 0);

    const double sign = direction == Direction::Max ? -1.0 : 1.0;
    std::vector<double> gap(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = sign * pairs[j].first;
        const double b = sign * pairs[j].second;
        if (a > b) {
            inst.v0_[j] = b;
            inst.v1_[j] = a;
            inst.flip_mask_[j] = 1;
        } else {
            inst.v0_[j] = a;
            inst.v1_[j] = b;
        }
        gap[j] = inst.v1_[j] - inst.v0_[j];
    }

    inst.perm_.resize(n);
    std::iota(inst.perm_.begin(), inst.perm_.end(), std::size_t{0});
    std::stable_sort(inst.perm_.begin(), inst.perm_.end(),
                     [&](std::size_t x, std::size_t y) { return gap[x] < gap[y]; });

    inst.inverse_perm_.resize(n);
    inst.delta_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        inst.inverse_perm_[inst.perm_[i]] = i;
        inst.delta_[i] = gap[inst.perm_[i]];
    }

    inst.s1_ = std::accumulate(inst.v0_.begin(), inst.v0_.end(), 0.0);
    return inst;
}

double ProblemInstance::score(const Combination& combo) const {
    if (combo.size() != size()) {
        throw LengthMismatch("combination length " + std::to_string(combo.size()) + " does not match " +
                             std::to_string(size()) + " pairs");
    }
    double sum = s1_;
    combo.for_each_set_bit([&](std::size_t i) { sum += delta_[i]; });
    return sum;
}

Selection ProblemInstance::denormalize(const Combination& combo) const {
    if (combo.size() != size()) {
        throw LengthMismatch("combination length " + std::to_string(combo.size()) + " does not match " +
                             std::to_string(size()) + " pairs");
    }
    Selection selection(flip_mask_.begin(), flip_mask_.end());
    combo.for_each_set_bit([&](std::size_t i) { selection[perm_[i]] ^= 1U; });
    return selection;
}

} // namespace decisum
