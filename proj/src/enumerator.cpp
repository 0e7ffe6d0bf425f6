#include "decisum/enumerator.hpp"

#include "decisum/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace decisum {

void PendingSet::push(Entry entry) {
    if (empty()) {
        sequence_.clear();
        head_ = 0;
        sequence_.push_back(entry);
        return;
    }
    const std::vector<Entry> one{entry};
    scratch_.clear();
    scratch_.reserve(size() + 1);
    std::merge(sequence_.begin() + static_cast<std::ptrdiff_t>(head_), sequence_.end(), one.begin(), one.end(),
               std::back_inserter(scratch_), before);
    sequence_.swap(scratch_);
    head_ = 0;
}

void PendingSet::pop_and_integrate(std::vector<Entry>& batch) {
    assert(!empty());
    ++head_;
    if (batch.empty()) {
        return;
    }
    std::sort(batch.begin(), batch.end(), before);
    scratch_.clear();
    scratch_.reserve(size() + batch.size());
    std::merge(sequence_.begin() + static_cast<std::ptrdiff_t>(head_), sequence_.end(), batch.begin(), batch.end(),
               std::back_inserter(scratch_), before);
    sequence_.swap(scratch_);
    head_ = 0;
}

Enumerator::Enumerator(std::shared_ptr<const ProblemInstance> instance) : instance_(std::move(instance)) {
    if (!instance_) {
        throw EmptyInput("enumerator requires a problem instance");
    }
    auto [it, inserted] = seen_.emplace(instance_->size());
    pending_.push({instance_->s1(), &*it});
}

std::optional<ScoredCombination> Enumerator::advance() {
    if (pending_.empty()) {
        return std::nullopt;
    }
    const PendingSet::Entry top = pending_.min();
    const Combination& parent = *top.combo;
    const auto delta = instance_->delta();

    batch_.clear();
    for (std::size_t move : successor_moves(parent)) {
        Combination child = shift(parent, move);
        if (seen_.contains(child)) {
            continue;
        }
        const double step = move == 0 ? delta[0] : delta[move] - delta[move - 1];
        auto [it, inserted] = seen_.insert(std::move(child));
        batch_.push_back({top.sum + step, &*it});
    }
    pending_.pop_and_integrate(batch_);
    ++emitted_;

#ifndef NDEBUG
    const double fresh = instance_->score(parent);
    assert(std::abs(fresh - top.sum) <= 1e-9 * std::max(1.0, std::abs(fresh)) + 1e-9);
#endif
    return ScoredCombination{parent, top.sum};
}

std::optional<RankedChoice> Enumerator::next_ranked() {
    auto scored = advance();
    if (!scored) {
        return std::nullopt;
    }
    return RankedChoice{emitted_, instance_->external_sum(scored->sum), instance_->denormalize(scored->combo)};
}

std::vector<ScoredCombination> Enumerator::pending_snapshot() const {
    std::vector<ScoredCombination> out;
    PendingSet copy = pending_;
    std::vector<PendingSet::Entry> none;
    while (!copy.empty()) {
        out.push_back({*copy.min().combo, copy.min().sum});
        copy.pop_and_integrate(none);
    }
    return out;
}

std::vector<RankedChoice> top_k(const PairList& pairs, std::uint64_t k, Direction direction) {
    if (k == 0) {
        throw InvalidK("k must be at least 1");
    }
    auto instance = std::make_shared<const ProblemInstance>(ProblemInstance::normalize(pairs, direction));
    Enumerator it(instance);
    std::vector<RankedChoice> out;
    if (instance->size() < 63) {
        out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(k, std::uint64_t{1} << instance->size())));
    }
    while (out.size() < k) {
        auto next = it.next_ranked();
        if (!next) {
            break;
        }
        out.push_back(std::move(*next));
    }
    return out;
}

} // namespace decisum
