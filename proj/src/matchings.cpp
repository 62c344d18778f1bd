#include "symchar/matchings.hpp"

#include <algorithm>
#include <stdexcept>

namespace symchar {

namespace {

template <std::size_t D>
std::vector<std::array<int, D>> canonical_edges(int k, std::vector<std::array<int, D>> edges) {
    for (const auto& e : edges)
        for (int c : e)
            if (c < 1 || c > k) throw std::invalid_argument("edge coordinate out of range");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// One bit per ground-set value and coordinate.
struct UsedMask {
    std::vector<std::uint64_t> bits;
    explicit UsedMask(int k) : bits((static_cast<std::size_t>(k) + 64) / 64, 0) {}
    bool test(int v) const {
        std::size_t i = static_cast<std::size_t>(v - 1);
        return (bits[i >> 6] >> (i & 63)) & 1;
    }
    void set(int v) {
        std::size_t i = static_cast<std::size_t>(v - 1);
        bits[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void clear(int v) {
        std::size_t i = static_cast<std::size_t>(v - 1);
        bits[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
};

template <std::size_t D>
struct MatchCounter {
    int k;
    const std::vector<std::array<int, D>>& edges;
    std::vector<std::vector<std::size_t>> by_first;   // edge indices per first coordinate
    std::vector<UsedMask> used;                       // coordinates 1..D-1
    std::vector<char> first_done;
    std::vector<std::size_t> picked;
    const std::function<void(const std::vector<std::size_t>&)>* visit = nullptr;
    Int count = 0;

    MatchCounter(int k_, const std::vector<std::array<int, D>>& e)
        : k(k_), edges(e), by_first(static_cast<std::size_t>(k_)),
          used(D - 1, UsedMask(k_)), first_done(static_cast<std::size_t>(k_), 0) {
        for (std::size_t i = 0; i < edges.size(); ++i)
            by_first[static_cast<std::size_t>(edges[i][0] - 1)].push_back(i);
    }

    bool available(std::size_t ei) const {
        for (std::size_t c = 1; c < D; ++c)
            if (used[c - 1].test(edges[ei][c])) return false;
        return true;
    }

    void run(int depth) {
        if (depth == k) {
            ++count;
            if (visit) {
                std::vector<std::size_t> m = picked;
                std::sort(m.begin(), m.end());
                (*visit)(m);
            }
            return;
        }
        // Branch on the uncovered first coordinate with the fewest usable
        // edges; forced values propagate first and dead values prune at once.
        int best = -1;
        std::size_t best_count = 0;
        for (int v = 1; v <= k; ++v) {
            if (first_done[static_cast<std::size_t>(v - 1)]) continue;
            std::size_t avail = 0;
            for (std::size_t ei : by_first[static_cast<std::size_t>(v - 1)])
                if (available(ei)) ++avail;
            if (best == -1 || avail < best_count) {
                best = v;
                best_count = avail;
                if (avail == 0) break;
            }
        }
        if (best == -1 || best_count == 0) return;
        first_done[static_cast<std::size_t>(best - 1)] = 1;
        for (std::size_t ei : by_first[static_cast<std::size_t>(best - 1)]) {
            if (!available(ei)) continue;
            for (std::size_t c = 1; c < D; ++c) used[c - 1].set(edges[ei][c]);
            picked.push_back(ei);
            run(depth + 1);
            picked.pop_back();
            for (std::size_t c = 1; c < D; ++c) used[c - 1].clear(edges[ei][c]);
        }
        first_done[static_cast<std::size_t>(best - 1)] = 0;
    }
};

}  // namespace

Hypergraph3 make_hypergraph3(int k, std::vector<std::array<int, 3>> edges) {
    if (k < 1) throw std::invalid_argument("ground set size must be positive");
    return Hypergraph3{k, canonical_edges<3>(k, std::move(edges))};
}

Hypergraph4 make_hypergraph4(int u, std::vector<std::array<int, 4>> edges) {
    if (u < 1) throw std::invalid_argument("ground set size must be positive");
    return Hypergraph4{u, canonical_edges<4>(u, std::move(edges))};
}

Int count_3dm(const Hypergraph3& g) {
    MatchCounter<3> mc(g.k, g.edges);
    mc.run(0);
    return mc.count;
}

Int count_4dm(const Hypergraph4& g) {
    MatchCounter<4> mc(g.u, g.edges);
    mc.run(0);
    return mc.count;
}

void for_each_4dm(const Hypergraph4& g,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
    MatchCounter<4> mc(g.u, g.edges);
    mc.visit = &visit;
    mc.run(0);
}

Hypergraph3 pad(const Hypergraph3& g, int u) {
    if (u < g.k) throw std::invalid_argument("padding target below ground set size");
    std::vector<std::array<int, 3>> edges = g.edges;
    for (int x = g.k + 1; x <= u; ++x) edges.push_back({x, x, x});
    return make_hypergraph3(u, std::move(edges));
}

JoinResult join(const Hypergraph3& e, const Hypergraph3& e_prime) {
    int u = 1 + std::max(e.k, e_prime.k);
    Hypergraph3 eu = pad(e, u);
    Hypergraph3 epu = pad(e_prime, u);
    std::vector<std::array<int, 4>> edges;
    edges.reserve(eu.edges.size() + epu.edges.size());
    for (const auto& [x, y, z] : eu.edges) edges.push_back({x, x, y, z});
    for (const auto& [x, y, z] : epu.edges) edges.push_back({x == u ? 1 : x + 1, x, y, z});
    JoinResult jr;
    jr.j = make_hypergraph4(u, std::move(edges));
    jr.h = {u, u, u, u};
    jr.h_prime = {1, u, u, u};
    return jr;
}

Hypergraph4 without_edge(const Hypergraph4& g, const std::array<int, 4>& edge) {
    std::vector<std::array<int, 4>> edges;
    edges.reserve(g.edges.size());
    for (const auto& e : g.edges)
        if (e != edge) edges.push_back(e);
    return Hypergraph4{g.u, std::move(edges)};
}

bool covers_ground_set(const Hypergraph3& g) {
    for (std::size_t c = 0; c < 3; ++c) {
        std::vector<char> seen(static_cast<std::size_t>(g.k), 0);
        for (const auto& e : g.edges) seen[static_cast<std::size_t>(e[c] - 1)] = 1;
        for (char s : seen)
            if (!s) return false;
    }
    return true;
}

}  // namespace symchar
