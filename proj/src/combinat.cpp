#include "symchar/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace symchar {

Int sum_of(const Composition& c) {
    Int s = 0;
    for (const Int& x : c) s += x;
    return s;
}

Composition sort_desc(Composition a) {
    std::sort(a.begin(), a.end(), std::greater<Int>());
    return a;
}

Partition::Partition(Composition parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_composition(const Composition& c) {
    Composition s = sort_desc(c);
    while (!s.empty() && s.back() == 0) s.pop_back();
    return Partition(std::move(s));
}

Int Partition::size() const { return sum_of(parts_); }

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 1 || v > n() || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("not a bijection on [n]");
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (n() != inner.n()) throw std::invalid_argument("size mismatch in compose");
    std::vector<int> im(images.size());
    for (int i = 1; i <= n(); ++i) im[static_cast<std::size_t>(i) - 1] = apply(inner.apply(i));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images.size());
    for (int i = 1; i <= n(); ++i) im[static_cast<std::size_t>(apply(i)) - 1] = i;
    return Permutation(std::move(im));
}

Partition cycle_type(const Permutation& p) {
    std::vector<char> seen(p.images.size(), 0);
    Composition lens;
    for (int i = 1; i <= p.n(); ++i) {
        if (seen[static_cast<std::size_t>(i) - 1]) continue;
        int len = 0;
        int j = i;
        do {
            seen[static_cast<std::size_t>(j) - 1] = 1;
            j = p.apply(j);
            ++len;
        } while (j != i);
        lens.push_back(len);
    }
    return Partition::from_composition(lens);
}

Int z_factor(const Partition& mu) {
    std::map<Int, unsigned long> mult;
    for (const Int& part : mu.parts()) ++mult[part];
    Int z = 1;
    for (const auto& [part, m] : mult) {
        for (unsigned long t = 0; t < m; ++t) z *= part;
        z *= factorial(m);
    }
    return z;
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    Composition cur;
    // Descending-first recursion emits reverse lexicographic order.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

Permutation canonical_of_cycle_type(const Partition& mu) {
    std::vector<int> im;
    int pos = 1;
    for (const Int& part : mu.parts()) {
        int len = static_cast<int>(part);
        for (int t = 0; t < len; ++t) im.push_back(t + 1 == len ? pos : pos + t + 1);
        pos += len;
    }
    return Permutation(std::move(im));
}

}  // namespace symchar
