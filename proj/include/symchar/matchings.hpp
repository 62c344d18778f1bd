#pragma once

#include "symchar/bigint.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace symchar {

// Ground sets are Z_k = {1,...,k} per coordinate; addition wraps k to 1.
// Edge lists are kept lexicographically sorted without duplicates.
struct Hypergraph3 {
    int k = 1;
    std::vector<std::array<int, 3>> edges;
};

struct Hypergraph4 {
    int u = 1;
    std::vector<std::array<int, 4>> edges;
};

Hypergraph3 make_hypergraph3(int k, std::vector<std::array<int, 3>> edges);
Hypergraph4 make_hypergraph4(int u, std::vector<std::array<int, 4>> edges);

// Exact number of perfect matchings: k edges, pairwise distinct in every
// coordinate. Depth-first over the most constrained first-coordinate value.
Int count_3dm(const Hypergraph3& g);
Int count_4dm(const Hypergraph4& g);

// Visits each perfect matching as a sorted list of edge indices.
void for_each_4dm(const Hypergraph4& g,
                  const std::function<void(const std::vector<std::size_t>&)>& visit);

// E over Z_u with diagonal triples (x,x,x) for x > k; the matching count is
// unchanged.
Hypergraph3 pad(const Hypergraph3& g, int u);

struct JoinResult {
    Hypergraph4 j;
    std::array<int, 4> h;        // (u,u,u,u)
    std::array<int, 4> h_prime;  // (1,u,u,u)
};

// u = 1 + max(k, k'); J holds (x,x,y,z) for the padded left input and
// (x+1 mod u, x, y, z) for the padded right input. h and h_prime are the only
// edges whose last coordinate is u, and removing one of them selects which
// input's matching count survives.
JoinResult join(const Hypergraph3& e, const Hypergraph3& e_prime);

Hypergraph4 without_edge(const Hypergraph4& g, const std::array<int, 4>& edge);

bool covers_ground_set(const Hypergraph3& g);

}  // namespace symchar
