#include "symchar/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace symchar {

namespace {

// Beta-set of lambda padded to l rows: strictly increasing first-column hook
// lengths {lambda_i + (l - i)}. Removing a border strip of size t replaces
// some beta by beta - t (not already present); the strip height parity is the
// number of betas jumped over.
std::vector<Int> beta_set(const Partition& lambda) {
    const Composition& p = lambda.parts();
    std::size_t l = p.size();
    std::vector<Int> beta(l);
    for (std::size_t i = 0; i < l; ++i) beta[i] = p[i] + Int(l - 1 - i);
    std::reverse(beta.begin(), beta.end());  // ascending
    return beta;
}

Partition partition_from_beta(std::vector<Int> beta) {
    std::sort(beta.begin(), beta.end());
    Composition parts;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        Int part = beta[i] - Int(i);
        if (part > 0) parts.push_back(part);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

Composition checked_cycle_type(const Partition& lambda, const Composition& alpha) {
    for (const Int& a : alpha)
        if (a <= 0) throw std::invalid_argument("cycle lengths must be positive");
    if (lambda.size() != sum_of(alpha))
        throw std::invalid_argument("|lambda| != |alpha|");
    return sort_desc(alpha);
}

struct StripEval {
    bool signed_sum;
    std::map<std::pair<Composition, std::size_t>, Int> memo;
    Composition cycles;  // weakly decreasing

    Int eval(std::vector<Int> beta, std::size_t idx) {
        if (idx == cycles.size()) return 1;  // remaining shape is empty
        Partition shape = partition_from_beta(beta);
        auto key = std::make_pair(shape.parts(), idx);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // Rebuild a canonical beta-set so equal shapes share cache entries.
        std::vector<Int> b = beta_set(shape);
        const Int& t = cycles[idx];
        Int total = 0;
        for (std::size_t s = 0; s < b.size(); ++s) {
            Int target = b[s] - t;
            if (target < 0) continue;
            std::size_t jumped = 0;
            bool occupied = false;
            for (std::size_t s2 = 0; s2 < s; ++s2) {
                if (b[s2] == target) { occupied = true; break; }
                if (b[s2] > target) ++jumped;
            }
            if (occupied) continue;
            std::vector<Int> next = b;
            next[s] = target;
            Int sub = eval(std::move(next), idx + 1);
            if (signed_sum && (jumped % 2 == 1)) total -= sub; else total += sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }

    Int run(const Partition& lambda, const Composition& alpha) {
        cycles = checked_cycle_type(lambda, alpha);
        return eval(beta_set(lambda), 0);
    }
};

// Residues modulo g reachable as subset sums of the items. A bin whose size
// is not a reachable residue cannot be filled, so the whole term vanishes.
struct ResidueFilter {
    unsigned g = 0;
    std::vector<char> reachable;

    static ResidueFilter build(const Composition& items, unsigned max_g = 64) {
        ResidueFilter best;
        double best_ratio = 1.0;
        for (unsigned g = 2; g <= max_g; ++g) {
            std::vector<char> reach(g, 0);
            reach[0] = 1;
            for (const Int& it : items) {
                unsigned r = static_cast<unsigned>(((it % g) + g) % g);
                std::vector<char> next = reach;
                for (unsigned v = 0; v < g; ++v)
                    if (reach[v]) next[(v + r) % g] = 1;
                reach.swap(next);
            }
            unsigned cnt = 0;
            for (char c : reach) cnt += c;
            double ratio = static_cast<double>(cnt) / g;
            if (ratio < best_ratio) {
                best_ratio = ratio;
                best.g = g;
                best.reachable = reach;
            }
        }
        return best;
    }

    bool admits(const Int& bin) const {
        if (g == 0) return true;
        unsigned r = static_cast<unsigned>(((bin % g) + g) % g);
        return reachable[r] != 0;
    }
};

}  // namespace

Int char_mn(const Partition& lambda, const Composition& alpha) {
    StripEval ev{true, {}, {}};
    return ev.run(lambda, alpha);
}

Int rim_hook_count(const Partition& lambda, const Composition& alpha) {
    StripEval ev{false, {}, {}};
    return ev.run(lambda, alpha);
}

Int char_jt(const Partition& lambda, const Composition& alpha, const CharJtOptions& opts) {
    Composition cycles = checked_cycle_type(lambda, alpha);
    const Composition& lam = lambda.parts();
    std::size_t l = lam.size();
    if (l > opts.max_length)
        throw std::invalid_argument("length(lambda) exceeds the S_l enumeration bound");
    if (l == 0) return cycles.empty() ? 1 : 0;

    ResidueFilter filter = ResidueFilter::build(cycles);
    std::unordered_map<std::vector<Int>, Int, IntVectorHash> pcache;
    std::vector<char> used(l + 1, 0);
    Composition nu(l);
    std::vector<int> chosen;
    chosen.reserve(l);
    Int total = 0;

    // Assign sigma position by position; a negative or unreachable bin size
    // kills every completion of the prefix.
    std::function<void(std::size_t, int)> rec = [&](std::size_t s, int sign) {
        if (s == l) {
            std::vector<Int> key(nu);
            std::sort(key.begin(), key.end());
            Int p;
            if (auto it = pcache.find(key); it != pcache.end()) {
                p = it->second;
            } else {
                SetPartitionInstance inst{cycles, nu};
                p = count_ordered_partitions(inst, opts.count_mode);
                pcache.emplace(std::move(key), p);
            }
            total += sign * p;
            return;
        }
        for (int t = 1; t <= static_cast<int>(l); ++t) {
            if (used[static_cast<std::size_t>(t)]) continue;
            Int entry = lam[s] + Int(t) - Int(s + 1);
            if (entry < 0) continue;
            if (!filter.admits(entry)) continue;
            int inversions = 0;
            for (int prev : chosen)
                if (prev > t) ++inversions;
            used[static_cast<std::size_t>(t)] = 1;
            chosen.push_back(t);
            nu[s] = entry;
            rec(s + 1, (inversions % 2 == 0) ? sign : -sign);
            chosen.pop_back();
            used[static_cast<std::size_t>(t)] = 0;
        }
    };
    rec(0, 1);
    return total;
}

Int phi_induced(const Composition& nu, const Composition& alpha) {
    if (sum_of(nu) != sum_of(alpha)) throw std::invalid_argument("|nu| != |alpha|");
    for (const Int& a : alpha)
        if (a <= 0) throw std::invalid_argument("cycle lengths must be positive");
    for (const Int& v : nu)
        if (v < 0) return 0;
    SetPartitionInstance inst{alpha, nu};
    return count_ordered_partitions(inst);
}

Int phi_fixed_words_oracle(const Composition& nu, const Composition& alpha, unsigned max_n) {
    if (sum_of(nu) != sum_of(alpha)) throw std::invalid_argument("|nu| != |alpha|");
    for (const Int& v : nu)
        if (v < 0) return 0;
    Int n_big = sum_of(alpha);
    if (n_big > max_n) throw std::invalid_argument("word enumeration bound exceeded");
    unsigned n = static_cast<unsigned>(n_big);

    Composition alpha_parts(alpha);
    Partition type = Partition::from_composition(alpha_parts);
    Permutation pi = canonical_of_cycle_type(type);

    std::vector<int> word;
    for (std::size_t letter = 0; letter < nu.size(); ++letter)
        for (Int c = 0; c < nu[letter]; ++c) word.push_back(static_cast<int>(letter));
    std::sort(word.begin(), word.end());

    Int fixed = 0;
    if (n == 0) return 1;
    do {
        bool ok = true;
        for (unsigned i = 1; i <= n && ok; ++i)
            if (word[i - 1] != word[static_cast<std::size_t>(pi.apply(static_cast<int>(i))) - 1])
                ok = false;
        if (ok) ++fixed;
    } while (std::next_permutation(word.begin(), word.end()));
    return fixed;
}

Int dimension(const Partition& lambda, unsigned max_n) {
    if (lambda.size() > max_n) throw std::invalid_argument("hook length bound exceeded");
    unsigned n = static_cast<unsigned>(lambda.size());
    const Composition& p = lambda.parts();
    std::vector<unsigned> col(p.empty() ? 0 : static_cast<unsigned>(p[0]), 0);
    for (const Int& part : p)
        for (unsigned cidx = 0; cidx < static_cast<unsigned>(part); ++cidx) ++col[cidx];
    Int hooks = 1;
    for (std::size_t r = 0; r < p.size(); ++r) {
        unsigned row_len = static_cast<unsigned>(p[r]);
        for (unsigned cidx = 0; cidx < row_len; ++cidx) {
            unsigned arm = row_len - cidx - 1;
            unsigned leg = col[cidx] - static_cast<unsigned>(r) - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(n) / hooks;
}

Int row_sum(const Partition& lambda, unsigned max_n) {
    if (lambda.size() > max_n) throw std::invalid_argument("enumeration bound exceeded");
    unsigned n = static_cast<unsigned>(lambda.size());
    Int total = 0;
    for (const Partition& mu : partitions_of(n)) total += char_mn(lambda, mu.parts());
    return total;
}

Int column_sum(const Partition& lambda, unsigned max_n) {
    if (lambda.size() > max_n) throw std::invalid_argument("enumeration bound exceeded");
    unsigned n = static_cast<unsigned>(lambda.size());
    Int total = 0;
    for (const Partition& mu : partitions_of(n)) total += char_mn(mu, lambda.parts());
    return total;
}

Int sqrt_count_oracle(const Partition& lambda, unsigned max_n) {
    if (lambda.size() > max_n) throw std::invalid_argument("enumeration bound exceeded");
    unsigned n = static_cast<unsigned>(lambda.size());
    Permutation sigma = canonical_of_cycle_type(lambda);
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    Int count = 0;
    do {
        bool ok = true;
        for (int i = 1; i <= static_cast<int>(n) && ok; ++i) {
            int omega_i = im[static_cast<std::size_t>(i) - 1];
            if (im[static_cast<std::size_t>(omega_i) - 1] != sigma.apply(i)) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(im.begin(), im.end()));
    return count;
}

}  // namespace symchar
