#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symchar/matchings.hpp"

#include <functional>
#include <random>

using namespace symchar;

namespace {

// Oracle: choose k edges by index and test the matching property directly.
template <typename G, std::size_t D>
Int exhaustive_matchings(const G& g) {
    int k;
    if constexpr (D == 3) k = g.k; else k = g.u;
    const auto& edges = g.edges;
    Int count = 0;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == static_cast<std::size_t>(k)) {
            for (std::size_t c = 0; c < D; ++c) {
                std::vector<char> seen(static_cast<std::size_t>(k), 0);
                for (std::size_t ei : pick) {
                    int v = edges[ei][c];
                    if (seen[static_cast<std::size_t>(v - 1)]) return;
                    seen[static_cast<std::size_t>(v - 1)] = 1;
                }
            }
            ++count;
            return;
        }
        for (std::size_t ei = start; ei < edges.size(); ++ei) {
            pick.push_back(ei);
            rec(ei + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return count;
}

Hypergraph3 random_h3(std::mt19937_64& gen, int k, unsigned edge_count) {
    std::vector<std::array<int, 3>> edges;
    for (unsigned t = 0; t < edge_count; ++t)
        edges.push_back({1 + static_cast<int>(gen() % k), 1 + static_cast<int>(gen() % k),
                         1 + static_cast<int>(gen() % k)});
    return make_hypergraph3(k, std::move(edges));
}

}  // namespace

TEST_CASE("pinned 3dm and 4dm counts") {
    std::vector<std::array<int, 3>> all;
    for (int x = 1; x <= 2; ++x)
        for (int y = 1; y <= 2; ++y)
            for (int z = 1; z <= 2; ++z) all.push_back({x, y, z});
    CHECK(count_3dm(make_hypergraph3(2, all)) == 4);
    CHECK(count_3dm(make_hypergraph3(1, {{1, 1, 1}})) == 1);
    CHECK(count_3dm(make_hypergraph3(2, {{1, 1, 1}, {2, 2, 1}})) == 0);
    CHECK(count_4dm(make_hypergraph4(1, {{1, 1, 1, 1}})) == 1);
    CHECK(count_4dm(make_hypergraph4(2, {{1, 1, 1, 1}, {2, 2, 2, 2}})) == 1);
    CHECK(count_4dm(make_hypergraph4(2, {{1, 1, 1, 1}, {1, 2, 2, 2}})) == 0);
    CHECK_THROWS(make_hypergraph3(2, {{0, 1, 1}}));
}

TEST_CASE("counters agree with the exhaustive oracle") {
    std::mt19937_64 gen(13);
    for (int t = 0; t < 120; ++t) {
        int k = 1 + static_cast<int>(gen() % 3);
        Hypergraph3 g = random_h3(gen, k, gen() % 9);
        CHECK(count_3dm(g) == exhaustive_matchings<Hypergraph3, 3>(g));
    }
    for (int t = 0; t < 60; ++t) {
        int u = 1 + static_cast<int>(gen() % 3);
        std::vector<std::array<int, 4>> edges;
        for (unsigned e = 0; e < gen() % 10; ++e)
            edges.push_back({1 + static_cast<int>(gen() % u), 1 + static_cast<int>(gen() % u),
                             1 + static_cast<int>(gen() % u), 1 + static_cast<int>(gen() % u)});
        Hypergraph4 g = make_hypergraph4(u, std::move(edges));
        CHECK(count_4dm(g) == exhaustive_matchings<Hypergraph4, 4>(g));
    }
}

TEST_CASE("padding keeps the count") {
    CHECK(pad(make_hypergraph3(1, {{1, 1, 1}}), 2).edges ==
          std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 2, 2}});
    CHECK(pad(make_hypergraph3(1, {}), 3).edges ==
          std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 3, 3}});
    CHECK_THROWS(pad(make_hypergraph3(3, {}), 2));
    std::mt19937_64 gen(17);
    for (int t = 0; t < 60; ++t) {
        int k = 1 + static_cast<int>(gen() % 3);
        Hypergraph3 g = random_h3(gen, k, gen() % 8);
        Hypergraph3 padded = pad(g, k + static_cast<int>(gen() % 3));
        CHECK(count_3dm(padded) == count_3dm(g));
        CHECK(pad(g, g.k).edges == g.edges);
    }
}

TEST_CASE("join on the one-edge inputs") {
    Hypergraph3 e = make_hypergraph3(1, {{1, 1, 1}});
    JoinResult jr = join(e, e);
    CHECK(jr.j.u == 2);
    CHECK(jr.h == std::array<int, 4>{2, 2, 2, 2});
    CHECK(jr.h_prime == std::array<int, 4>{1, 2, 2, 2});
    std::vector<std::array<int, 4>> expect{{1, 1, 1, 1}, {1, 2, 2, 2}, {2, 1, 1, 1}, {2, 2, 2, 2}};
    CHECK(jr.j.edges == expect);
    CHECK(count_4dm(without_edge(jr.j, jr.h_prime)) == count_3dm(e));
    CHECK(count_4dm(without_edge(jr.j, jr.h)) == count_3dm(e));
}

TEST_CASE("join lemma on random pairs") {
    std::mt19937_64 gen(19);
    for (int t = 0; t < 80; ++t) {
        int k = 1 + static_cast<int>(gen() % 3), kp = 1 + static_cast<int>(gen() % 3);
        bool dense = gen() % 2;
        Hypergraph3 e = random_h3(gen, k, dense ? 6 + gen() % 10 : gen() % 4);
        Hypergraph3 ep = random_h3(gen, kp, dense ? 6 + gen() % 10 : gen() % 4);
        JoinResult jr = join(e, ep);
        // H and H' are members, and the only edges with last coordinate u.
        int last_u = 0;
        bool has_h = false, has_hp = false;
        for (const auto& edge : jr.j.edges) {
            if (edge[3] == jr.j.u) ++last_u;
            if (edge == jr.h) has_h = true;
            if (edge == jr.h_prime) has_hp = true;
        }
        CHECK(has_h);
        CHECK(has_hp);
        CHECK(last_u == 2);
        CHECK(count_4dm(without_edge(jr.j, jr.h_prime)) == count_3dm(e));
        CHECK(count_4dm(without_edge(jr.j, jr.h)) == count_3dm(ep));
    }
}

TEST_CASE("matchings of a join are diagonal or shifted") {
    std::mt19937_64 gen(23);
    for (int t = 0; t < 40; ++t) {
        int k = 1 + static_cast<int>(gen() % 2), kp = 1 + static_cast<int>(gen() % 2);
        Hypergraph3 e = random_h3(gen, k, gen() % 6);
        Hypergraph3 ep = random_h3(gen, kp, gen() % 6);
        JoinResult jr = join(e, ep);
        for_each_4dm(jr.j, [&](const std::vector<std::size_t>& m) {
            bool all_diag = true, all_shift = true;
            for (std::size_t ei : m) {
                const auto& edge = jr.j.edges[ei];
                int w = edge[0], x = edge[1];
                if (w != x) all_diag = false;
                if (w != (x == jr.j.u ? 1 : x + 1)) all_shift = false;
            }
            CHECK((all_diag || all_shift));
        });
    }
}
