#include "symchar/setpartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace symchar {

namespace {

void validate(const SetPartitionInstance& inst) {
    for (const Int& a : inst.items)
        if (a <= 0) throw std::invalid_argument("item sizes must be strictly positive");
}

// Item indices sorted by decreasing size. Placing big items first keeps both
// search modes shallow on the radix-encoded gadget instances.
std::vector<std::size_t> descending_order(const Composition& items) {
    std::vector<std::size_t> ord(items.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](std::size_t x, std::size_t y) { return items[x] > items[y]; });
    return ord;
}

struct Backtracker {
    const Composition& items;
    std::vector<std::size_t> order;
    std::vector<Int> residual;
    std::vector<std::size_t> bin_of;  // by original item index
    const std::function<void(const std::vector<std::size_t>&)>* visit = nullptr;
    Int count = 0;

    explicit Backtracker(const SetPartitionInstance& inst)
        : items(inst.items),
          order(descending_order(inst.items)),
          residual(inst.bins.begin(), inst.bins.end()),
          bin_of(inst.items.size(), 0) {}

    bool feasible(std::size_t t) const {
        // Every still-open bin needs at least one more item, and the largest
        // remaining item must fit somewhere.
        std::size_t open = 0;
        Int maxres = 0;
        for (const Int& r : residual) {
            if (r > 0) ++open;
            if (r > maxres) maxres = r;
        }
        std::size_t remaining = order.size() - t;
        if (open > remaining) return false;
        if (remaining > 0 && items[order[t]] > maxres) return false;
        return true;
    }

    void run(std::size_t t) {
        if (t == order.size()) {
            bool done = true;
            for (const Int& r : residual)
                if (r != 0) { done = false; break; }
            if (done) {
                ++count;
                if (visit) (*visit)(bin_of);
            }
            return;
        }
        if (!feasible(t)) return;
        const Int& a = items[order[t]];
        for (std::size_t b = 0; b < residual.size(); ++b) {
            if (residual[b] < a) continue;
            residual[b] -= a;
            bin_of[order[t]] = b;
            run(t + 1);
            residual[b] += a;
        }
    }
};

Int count_memo(const SetPartitionInstance& inst) {
    std::vector<std::size_t> order = descending_order(inst.items);
    std::vector<Int> sorted_items(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) sorted_items[t] = inst.items[order[t]];

    std::vector<Int> suffix(order.size() + 1);
    suffix[order.size()] = 0;
    for (std::size_t t = order.size(); t-- > 0;) suffix[t] = suffix[t + 1] + sorted_items[t];

    using Key = std::vector<Int>;  // item index prepended to the sorted residual vector
    std::unordered_map<Key, Int, IntVectorHash> memo;

    std::function<Int(std::size_t, std::vector<Int>&)> rec =
        [&](std::size_t t, std::vector<Int>& residual) -> Int {
        if (t == sorted_items.size()) {
            for (const Int& r : residual)
                if (r != 0) return 0;
            return 1;
        }
        if (residual.empty()) return 0;
        if (sorted_items[t] > residual.back()) return 0;  // residual sorted ascending
        std::size_t open = 0;
        for (const Int& r : residual)
            if (r > 0) ++open;
        if (open > sorted_items.size() - t) return 0;

        Key key;
        key.reserve(residual.size() + 1);
        key.push_back(Int(t));
        key.insert(key.end(), residual.begin(), residual.end());
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        Int total = 0;
        const Int& a = sorted_items[t];
        for (std::size_t b = 0; b < residual.size(); ++b) {
            if (residual[b] < a) continue;
            if (b > 0 && residual[b] == residual[b - 1]) continue;  // distinct values once
            Int copies = 1;
            for (std::size_t b2 = b + 1; b2 < residual.size() && residual[b2] == residual[b]; ++b2)
                ++copies;
            std::vector<Int> next = residual;
            next[b] -= a;
            std::sort(next.begin(), next.end());
            total += copies * rec(t + 1, next);
        }
        memo.emplace(std::move(key), total);
        return total;
    };

    std::vector<Int> residual(inst.bins.begin(), inst.bins.end());
    std::sort(residual.begin(), residual.end());
    return rec(0, residual);
}

}  // namespace

Int count_ordered_partitions(const SetPartitionInstance& inst, CountMode mode) {
    validate(inst);
    for (const Int& b : inst.bins)
        if (b < 0) return 0;
    if (sum_of(inst.items) != sum_of(inst.bins)) return 0;
    if (inst.items.empty()) return 1;  // all bins are zero here, forced empty
    if (inst.bins.empty()) return 0;   // items left but nowhere to put them
    if (mode == CountMode::Memo) return count_memo(inst);
    Backtracker bt(inst);
    bt.run(0);
    return bt.count;
}

Int count_with_fixed_pair(const SetPartitionInstance& inst, std::size_t i, std::size_t j,
                          bool same_bin, CountMode mode) {
    if (i >= inst.items.size() || j >= inst.items.size() || i == j)
        throw std::invalid_argument("invalid item indices");
    validate(inst);
    // Items i and j share a bin exactly in the solutions of the instance with
    // the two items merged into one of combined size.
    SetPartitionInstance merged;
    merged.bins = inst.bins;
    for (std::size_t t = 0; t < inst.items.size(); ++t) {
        if (t == j) continue;
        merged.items.push_back(t == i ? inst.items[i] + inst.items[j] : inst.items[t]);
    }
    Int same = count_ordered_partitions(merged, mode);
    if (same_bin) return same;
    return count_ordered_partitions(inst, mode) - same;
}

void for_each_solution(const SetPartitionInstance& inst,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
    validate(inst);
    for (const Int& b : inst.bins)
        if (b < 0) return;
    if (sum_of(inst.items) != sum_of(inst.bins)) return;
    if (inst.items.empty()) {
        visit({});
        return;
    }
    if (inst.bins.empty()) return;
    Backtracker bt(inst);
    bt.visit = &visit;
    bt.run(0);
}

}  // namespace symchar
