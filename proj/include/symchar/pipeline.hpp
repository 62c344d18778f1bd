#pragma once

#include "symchar/characters.hpp"
#include "symchar/combinat.hpp"
#include "symchar/matchings.hpp"
#include "symchar/sat.hpp"
#include "symchar/setpartition.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symchar {

// Item sizes are radix-r digit vectors [d1,...,d10] read as
// d1*r + d2*r^2 + ... + d10*r^10 (no constant digit); r is chosen large
// enough that digit sums never carry.
struct GadgetItem {
    enum class Role { RealVertex, DummyVertex, Hyperedge };
    Role role;
    int i = 0;                      // vertex value, for vertex items
    int j = 0;                      // vertex coordinate 1..4, for vertex items
    std::array<int, 4> edge{};      // for hyperedge items
    Int size;
};

struct GadgetInstance {
    std::vector<GadgetItem> items;  // exactly 5|J| items
    std::vector<Int> bins;          // |J| bins, all of the same size b1
    Int r;
    int u = 0;
    Int delta;                      // |J|! * prod (mult(i,j)-1)!
    std::size_t special_vertex = 0;  // item indices
    std::size_t special_h = 0;
    std::size_t special_h_prime = 0;
    std::map<std::pair<int, int>, long> mult;  // (i,j) -> incidence count

    SetPartitionInstance as_setpartition() const;
};

// Items and bins from a join result. Requires every (i,j) in Z_u x Z_4 to be
// incident to some hyperedge (mult >= 1); throws otherwise.
GadgetInstance build_gadget(const JoinResult& jr);

struct ModifiedInstance {
    Composition c;            // (1,2,4,5, sv+1, h-2, h'-5, rest...)
    Composition d;            // the unchanged bin vector
    Composition d_bar;        // (2,4,d...)
    Composition d_bar_prime;  // (1,5,d...)
    std::vector<std::size_t> item_order;  // modified-position -> gadget item index
};

// Moves the three special items to the front, adds the four small items, and
// applies the size offsets. |c| = |d| + 6.
ModifiedInstance modify_gadget(const GadgetInstance& g);

struct CharInstanceDerivation {
    Int p = 0;
    Composition a;
    Composition b;  // sorted weakly decreasing
    std::optional<Composition> c, d, d_bar, d_bar_prime;
    std::optional<Int> m;
};

struct CharInstance {
    Partition lambda;
    Composition alpha;
    CharInstanceDerivation derivation;
};

// lambda = sort(p*b), alpha = p*a + e1 - e2 with p = length(b) + 1. Requires
// positive a (at least two parts) and positive b with equal sums. The bin
// vector is sorted descending first; the two-sum identity needs that order.
CharInstance char_instance_lemma(const Composition& a, const Composition& b);

// The right side of the two-sum identity the lemma instance satisfies:
//   sum_i P(abar, b - (a1+a2) e_i)  -  sum_{i<l} P(abar, b - a1 e_i - a2 e_{i+1})
// with abar = (a3, a4, ...) and b sorted descending.
Int two_sum_rhs(const Composition& a, const Composition& b_sorted);

// Character instance with chi^lambda(alpha) = P(c, d_bar) - P(c, d_bar_prime)
// where d_bar = (2,4,d...), d_bar_prime = (1,5,d...). Requires nonnegative d,
// positive c, |c| = |d| + 6. Zero entries of d are dropped (they denote
// forced-empty bins and do not change either count).
CharInstance char_instance_diff(const Composition& c, const Composition& d);

// lambda = p*sort(b), alpha = p*a with p = length(b) + 1; then
// chi^lambda(alpha) = P(a, b) exactly.
CharInstance parsimonious_encode(const Composition& a, const Composition& b);

struct PipelineResult {
    std::optional<Circuit> circuit_left, circuit_right;
    std::optional<Cnf> cnf_left, cnf_right;
    std::optional<OneInThree> oit_left, oit_right;
    Hypergraph3 e, e_prime;
    JoinResult join_result;
    GadgetInstance gadget;
    ModifiedInstance modified;
    CharInstance char_instance;
    Int delta;
};

// Chain entry at the matching stage, with the postcondition
//   chi^lambda(alpha) = delta * (#3DM(e) - #3DM(e_prime)).
// The joined hypergraph must cover Z_u x Z_4 (throws otherwise); individual
// inputs may leave gaps that padding fills.
PipelineResult reduce_matching_pair(const Hypergraph3& e, const Hypergraph3& e_prime);

// Full chain from a circuit pair;
//   chi^lambda(alpha) = delta * (#CircuitSAT(left) - #CircuitSAT(right)).
PipelineResult reduce_pair(const Circuit& left, const Circuit& right);

}  // namespace symchar
