#pragma once

#include "symchar/combinat.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace symchar {

// Items with sizes `items` distributed over ordered bins with prescribed sums
// `bins`. Item sizes must be strictly positive; bin sizes may be zero (the bin
// is then forced empty). A negative bin size or a total mismatch gives count 0.
struct SetPartitionInstance {
    Composition items;
    Composition bins;
};

enum class CountMode {
    Backtrack,  // plain depth-first assignment; the oracle of record
    Memo,       // residual-multiset dynamic program; must agree with Backtrack
};

Int count_ordered_partitions(const SetPartitionInstance& inst,
                             CountMode mode = CountMode::Memo);

// Counts only the solutions in which items i and j (0-based) share a bin, or
// are separated. The two counts sum to count_ordered_partitions(inst).
Int count_with_fixed_pair(const SetPartitionInstance& inst, std::size_t i, std::size_t j,
                          bool same_bin, CountMode mode = CountMode::Memo);

// Visits every solution as a vector mapping item index -> bin index.
// Backtracking order; intended for small instances and structural tests.
void for_each_solution(const SetPartitionInstance& inst,
                       const std::function<void(const std::vector<std::size_t>&)>& visit);

}  // namespace symchar
