#pragma once

#include "symchar/combinat.hpp"
#include "symchar/setpartition.hpp"

#include <cstddef>

namespace symchar {

// Irreducible character chi^lambda at cycle type alpha (alpha may be unsorted;
// the value depends on alpha only through sort_desc(alpha)). Border-strip
// recursion over a beta-set with memoization. Throws on size mismatch or a
// non-positive cycle length.
Int char_mn(const Partition& lambda, const Composition& alpha);

// Number of rim hook tableaux: the same recursion with every sign taken +1.
// |char_mn| == rim_hook_count exactly when all tableaux carry the same sign.
Int rim_hook_count(const Partition& lambda, const Composition& alpha);

struct CharJtOptions {
    // Permutations of S_l are enumerated; l = length(lambda) must stay within
    // this bound. Raise it explicitly for the radix-gadget instances, where a
    // residue filter prunes almost every branch.
    std::size_t max_length = 8;
    CountMode count_mode = CountMode::Memo;
};

// Independent evaluation through the signed sum over S_{l(lambda)} of ordered
// set partition counts of alpha into bins lambda + sigma - id. Terms with a
// negative entry vanish; zero entries are legal empty bins.
Int char_jt(const Partition& lambda, const Composition& alpha, const CharJtOptions& opts = {});

// Induced-trivial character phi^nu at cycle type alpha: the number of ordered
// set partitions of the parts of alpha into bins nu. Zero bins are dropped,
// a negative entry gives 0. Throws when |nu| != |alpha|.
Int phi_induced(const Composition& nu, const Composition& alpha);

// Same value by enumerating words with nu_i letters i and counting the ones
// fixed by a concrete permutation of cycle type alpha.
Int phi_fixed_words_oracle(const Composition& nu, const Composition& alpha,
                           unsigned max_n = 9);

// chi^lambda(1^n) by the hook length formula.
Int dimension(const Partition& lambda, unsigned max_n = 128);

// Row and column sums of the character table of S_n at lambda.
Int row_sum(const Partition& lambda, unsigned max_n = 10);
Int column_sum(const Partition& lambda, unsigned max_n = 10);

// |{w in S_n : w^2 = s}| for a fixed s of cycle type lambda, by enumeration.
Int sqrt_count_oracle(const Partition& lambda, unsigned max_n = 9);

}  // namespace symchar
