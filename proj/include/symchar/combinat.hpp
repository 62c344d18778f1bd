#pragma once

#include "symchar/bigint.hpp"

#include <cstddef>
#include <vector>

namespace symchar {

// A composition is any finite integer vector. Entries may be zero or negative;
// operations that need stricter domains check them at the call site.
using Composition = std::vector<Int>;

Int sum_of(const Composition& c);

// Entries of `a` in weakly decreasing order; the multiset is preserved.
Composition sort_desc(Composition a);

// Weakly decreasing positive parts; the empty partition has size 0.
class Partition {
  public:
    Partition() = default;
    // Validates weakly-decreasing-positive; throws std::invalid_argument.
    explicit Partition(Composition parts);
    // Sorts descending and drops zeros; throws on negative entries.
    static Partition from_composition(const Composition& c);

    const Composition& parts() const { return parts_; }
    Int size() const;
    std::size_t length() const { return parts_.size(); }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    Composition parts_;
};

// Bijection i -> images[i-1] on [n], 1-based.
struct Permutation {
    std::vector<int> images;

    explicit Permutation(std::vector<int> im);
    Permutation() = default;
    int n() const { return static_cast<int>(images.size()); }
    int apply(int i) const { return images[static_cast<std::size_t>(i) - 1]; }
    Permutation compose(const Permutation& inner) const;  // this after inner
    Permutation inverse() const;
};

Partition cycle_type(const Permutation& p);

// prod_i i^{m_i} m_i! over part multiplicities m_i; the conjugacy class of mu
// in S_n has n!/z_factor(mu) elements.
Int z_factor(const Partition& mu);

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(unsigned n);

// A fixed permutation of cycle type mu: cycles laid out left to right on [n].
Permutation canonical_of_cycle_type(const Partition& mu);

}  // namespace symchar
