#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symchar/combinat.hpp"

#include <random>
#include <set>

using namespace symchar;

TEST_CASE("sort_desc") {
    CHECK(sort_desc({1, 3, 2}) == Composition{3, 2, 1});
    CHECK(sort_desc({}) == Composition{});
    CHECK(sort_desc({5, 5, 5}) == Composition{5, 5, 5});
    // Idempotent and multiset-preserving.
    std::mt19937_64 gen(7);
    for (int t = 0; t < 50; ++t) {
        Composition c;
        for (unsigned i = 0; i < gen() % 8; ++i) c.push_back(Int(gen() % 10) - 4);
        Composition once = sort_desc(c);
        CHECK(sort_desc(once) == once);
        std::multiset<Int> before(c.begin(), c.end()), after(once.begin(), once.end());
        CHECK(before == after);
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS(Partition({2, 3}));
    CHECK_THROWS(Partition({2, 0}));
    CHECK(Partition({3, 2, 2}).size() == 7);
    CHECK(Partition(Composition{}).size() == 0);
    CHECK(Partition::from_composition({0, 2, 5, 0, 2}).parts() == Composition{5, 2, 2});
}

TEST_CASE("cycle_type") {
    CHECK(cycle_type(Permutation({1, 2, 3, 4})).parts() == Composition{1, 1, 1, 1});
    CHECK(cycle_type(Permutation({2, 1, 4, 3})).parts() == Composition{2, 2});
    CHECK(cycle_type(Permutation({2, 3, 1})).parts() == Composition{3});
    CHECK_THROWS(Permutation({1, 1}));
}

TEST_CASE("cycle type is a class function") {
    std::mt19937_64 gen(11);
    for (int n = 1; n <= 7; ++n) {
        for (int t = 0; t < 20; ++t) {
            auto rand_perm = [&]() {
                std::vector<int> im(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
                for (int i = n - 1; i > 0; --i)
                    std::swap(im[static_cast<std::size_t>(i)],
                              im[gen() % static_cast<std::size_t>(i + 1)]);
                return Permutation(im);
            };
            Permutation p = rand_perm(), q = rand_perm();
            Permutation conj = q.compose(p).compose(q.inverse());
            CHECK(cycle_type(conj) == cycle_type(p));
        }
    }
}

TEST_CASE("z_factor") {
    CHECK(z_factor(Partition({1, 1, 1, 1})) == 24);
    CHECK(z_factor(Partition({2, 2})) == 8);
    CHECK(z_factor(Partition({3})) == 3);
    // |class of (2,2)| = 4!/8 = 3 in S_4: count directly.
    int cls = 0;
    std::vector<int> im{1, 2, 3, 4};
    do {
        if (cycle_type(Permutation(im)).parts() == Composition{2, 2}) ++cls;
    } while (std::next_permutation(im.begin(), im.end()));
    CHECK(Int(cls) == factorial(4) / z_factor(Partition({2, 2})));
}

TEST_CASE("class sizes partition the group") {
    for (unsigned n = 0; n <= 10; ++n) {
        Int total = 0;
        for (const Partition& mu : partitions_of(n)) total += factorial(n) / z_factor(mu);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("partitions_of") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts().empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    // Reverse lexicographic order, all distinct, all of the right size.
    auto p6 = partitions_of(6);
    CHECK(p6.front().parts() == Composition{6});
    CHECK(p6.back().parts() == Composition{1, 1, 1, 1, 1, 1});
    std::set<Composition> seen;
    for (std::size_t i = 0; i < p6.size(); ++i) {
        CHECK(p6[i].size() == 6);
        CHECK(seen.insert(p6[i].parts()).second);
        if (i + 1 < p6.size()) CHECK(p6[i].parts() > p6[i + 1].parts());
    }
}

TEST_CASE("canonical permutation has the requested type") {
    for (unsigned n = 1; n <= 7; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(cycle_type(canonical_of_cycle_type(mu)) == mu);
}
