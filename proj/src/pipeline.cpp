#include "symchar/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace symchar {

namespace {

Int digits_to_value(const std::array<Int, 10>& d, const Int& r) {
    // [d1,...,d10] = d1*r + d2*r^2 + ...; powers start at r^1.
    Int v = 0;
    for (std::size_t t = 10; t-- > 0;) v = (v + d[t]) * r;
    return v;
}

int beta_of(int j) { return j <= 3 ? 4 : 0; }

}  // namespace

SetPartitionInstance GadgetInstance::as_setpartition() const {
    SetPartitionInstance inst;
    inst.items.reserve(items.size());
    for (const auto& it : items) inst.items.push_back(it.size);
    inst.bins = Composition(bins.begin(), bins.end());
    return inst;
}

GadgetInstance build_gadget(const JoinResult& jr) {
    const Hypergraph4& j = jr.j;
    const int u = j.u;
    const long edge_count = static_cast<long>(j.edges.size());

    GadgetInstance g;
    g.u = u;
    for (int i = 1; i <= u; ++i)
        for (int coord = 1; coord <= 4; ++coord) g.mult[{i, coord}] = 0;
    for (const auto& e : j.edges)
        for (int coord = 1; coord <= 4; ++coord) ++g.mult[{e[static_cast<std::size_t>(coord) - 1], coord}];
    for (const auto& [key, m] : g.mult)
        if (m < 1) throw std::invalid_argument("joined hypergraph does not cover its ground set");

    g.r = Int(16) * (Int(std::max(4, u)) * 5 * edge_count + 1);

    auto vertex_size = [&](int i, int coord, int tenth) {
        std::array<Int, 10> d{};
        d[static_cast<std::size_t>(coord) - 1] = 1;
        d[static_cast<std::size_t>(4 + coord)] = i;  // digit position 5 + coord
        d[9] = tenth;
        return digits_to_value(d, g.r);
    };

    for (int coord = 1; coord <= 4; ++coord)
        for (int i = 1; i <= u; ++i)
            g.items.push_back({GadgetItem::Role::RealVertex, i, coord, {}, vertex_size(i, coord, 3)});
    for (int coord = 1; coord <= 4; ++coord)
        for (int i = 1; i <= u; ++i)
            for (long t = 1; t < g.mult[{i, coord}]; ++t)
                g.items.push_back(
                    {GadgetItem::Role::DummyVertex, i, coord, {}, vertex_size(i, coord, beta_of(coord))});
    for (const auto& e : j.edges) {
        std::array<Int, 10> d{};
        d[4] = 1;
        for (std::size_t coord = 0; coord < 4; ++coord) d[5 + coord] = u - e[coord];
        g.items.push_back({GadgetItem::Role::Hyperedge, 0, 0, e, digits_to_value(d, g.r)});
    }

    if (g.items.size() != static_cast<std::size_t>(5 * edge_count))
        throw std::logic_error("item count must be 5|J|");

    std::array<Int, 10> bin_digits{};
    for (std::size_t t = 0; t < 5; ++t) bin_digits[t] = 1;
    for (std::size_t t = 5; t < 9; ++t) bin_digits[t] = u;
    bin_digits[9] = 12;
    Int b1 = digits_to_value(bin_digits, g.r);
    g.bins.assign(static_cast<std::size_t>(edge_count), b1);

    Int item_sum = 0;
    for (const auto& it : g.items) item_sum += it.size;
    if (item_sum != Int(edge_count) * b1) throw std::logic_error("item and bin totals must agree");

    g.delta = factorial(static_cast<unsigned long>(edge_count));
    for (const auto& [key, m] : g.mult) g.delta *= factorial(static_cast<unsigned long>(m - 1));

    for (std::size_t t = 0; t < g.items.size(); ++t) {
        const auto& it = g.items[t];
        if (it.role == GadgetItem::Role::RealVertex && it.i == u && it.j == 4) g.special_vertex = t;
        if (it.role == GadgetItem::Role::Hyperedge && it.edge == jr.h) g.special_h = t;
        if (it.role == GadgetItem::Role::Hyperedge && it.edge == jr.h_prime) g.special_h_prime = t;
    }
    return g;
}

ModifiedInstance modify_gadget(const GadgetInstance& g) {
    ModifiedInstance mod;
    mod.item_order.push_back(g.special_vertex);
    mod.item_order.push_back(g.special_h);
    mod.item_order.push_back(g.special_h_prime);
    for (std::size_t t = 0; t < g.items.size(); ++t)
        if (t != g.special_vertex && t != g.special_h && t != g.special_h_prime)
            mod.item_order.push_back(t);

    // Four loose small items, then the reordered gadget items with the
    // special sizes offset. The first special hyperedge item pairs with the
    // small 2 and the second with the small 5, which is what pins the special
    // vertex as claimed by the two modified counts.
    mod.c = {1, 2, 4, 5};
    mod.c.push_back(g.items[g.special_vertex].size + 1);
    mod.c.push_back(g.items[g.special_h].size - 2);
    mod.c.push_back(g.items[g.special_h_prime].size - 5);
    for (std::size_t t = 3; t < mod.item_order.size(); ++t)
        mod.c.push_back(g.items[mod.item_order[t]].size);

    mod.d = Composition(g.bins.begin(), g.bins.end());
    mod.d_bar = {2, 4};
    mod.d_bar.insert(mod.d_bar.end(), mod.d.begin(), mod.d.end());
    mod.d_bar_prime = {1, 5};
    mod.d_bar_prime.insert(mod.d_bar_prime.end(), mod.d.begin(), mod.d.end());

    if (sum_of(mod.c) != sum_of(mod.d) + 6) throw std::logic_error("|c| must equal |d| + 6");
    return mod;
}

CharInstance char_instance_lemma(const Composition& a, const Composition& b) {
    if (a.size() < 2) throw std::invalid_argument("a needs at least two parts");
    for (const Int& x : a)
        if (x <= 0) throw std::invalid_argument("a must be positive");
    for (const Int& x : b)
        if (x <= 0) throw std::invalid_argument("b must be positive");
    if (sum_of(a) != sum_of(b)) throw std::invalid_argument("|a| != |b|");

    Composition b_sorted = sort_desc(b);
    Int p = Int(b_sorted.size()) + 1;

    CharInstance ci;
    Composition lam;
    lam.reserve(b_sorted.size());
    for (const Int& x : b_sorted) lam.push_back(p * x);
    ci.lambda = Partition(std::move(lam));
    ci.alpha.reserve(a.size());
    for (const Int& x : a) ci.alpha.push_back(p * x);
    ci.alpha[0] += 1;
    ci.alpha[1] -= 1;
    ci.derivation.p = p;
    ci.derivation.a = a;
    ci.derivation.b = std::move(b_sorted);
    return ci;
}

Int two_sum_rhs(const Composition& a, const Composition& b_sorted) {
    if (a.size() < 2) throw std::invalid_argument("a needs at least two parts");
    Composition abar(a.begin() + 2, a.end());
    const std::size_t l = b_sorted.size();
    auto p_of = [&](Composition bins) {
        for (const Int& x : bins)
            if (x < 0) return Int(0);
        return count_ordered_partitions({abar, bins});
    };
    Int total = 0;
    for (std::size_t i = 0; i < l; ++i) {
        Composition bins = b_sorted;
        bins[i] -= a[0] + a[1];
        total += p_of(std::move(bins));
    }
    for (std::size_t i = 0; i + 1 < l; ++i) {
        Composition bins = b_sorted;
        bins[i] -= a[0];
        bins[i + 1] -= a[1];
        total -= p_of(std::move(bins));
    }
    return total;
}

CharInstance char_instance_diff(const Composition& c, const Composition& d) {
    for (const Int& x : c)
        if (x <= 0) throw std::invalid_argument("c must be positive");
    for (const Int& x : d)
        if (x < 0) throw std::invalid_argument("d must be nonnegative");
    if (sum_of(c) != sum_of(d) + 6)
        throw std::invalid_argument("|c| must equal |d| + 6");

    Composition d_nonzero;
    for (const Int& x : d)
        if (x > 0) d_nonzero.push_back(x);

    Int m = 0;
    for (const Int& x : c) m = std::max(m, x);
    for (const Int& x : d) m = std::max(m, x);
    m += 4;

    Composition a = {2, m, m - 3};
    a.insert(a.end(), c.begin(), c.end());
    Composition b = {m + 4, m + 1};
    b.insert(b.end(), d_nonzero.begin(), d_nonzero.end());

    CharInstance ci = char_instance_lemma(a, b);
    ci.derivation.c = c;
    ci.derivation.d = d;
    ci.derivation.m = m;
    Composition d_bar = {2, 4};
    d_bar.insert(d_bar.end(), d.begin(), d.end());
    Composition d_bar_prime = {1, 5};
    d_bar_prime.insert(d_bar_prime.end(), d.begin(), d.end());
    ci.derivation.d_bar = std::move(d_bar);
    ci.derivation.d_bar_prime = std::move(d_bar_prime);
    return ci;
}

CharInstance parsimonious_encode(const Composition& a, const Composition& b) {
    for (const Int& x : a)
        if (x <= 0) throw std::invalid_argument("a must be positive");
    for (const Int& x : b)
        if (x <= 0) throw std::invalid_argument("b must be positive");
    if (sum_of(a) != sum_of(b)) throw std::invalid_argument("|a| != |b|");
    Int p = Int(b.size()) + 1;
    CharInstance ci;
    Composition lam;
    for (const Int& x : sort_desc(b)) lam.push_back(p * x);
    ci.lambda = Partition(std::move(lam));
    for (const Int& x : a) ci.alpha.push_back(p * x);
    ci.derivation.p = p;
    ci.derivation.a = a;
    ci.derivation.b = sort_desc(b);
    return ci;
}

PipelineResult reduce_matching_pair(const Hypergraph3& e, const Hypergraph3& e_prime) {
    PipelineResult res;
    res.e = e;
    res.e_prime = e_prime;
    res.join_result = join(e, e_prime);
    res.gadget = build_gadget(res.join_result);
    res.modified = modify_gadget(res.gadget);
    res.char_instance = char_instance_diff(res.modified.c, res.modified.d);
    res.delta = res.gadget.delta;
    return res;
}

PipelineResult reduce_pair(const Circuit& left, const Circuit& right) {
    Cnf cl = tseytin(left), cr = tseytin(right);
    OneInThree ol = to_one_in_three(cl), orr = to_one_in_three(cr);
    PipelineResult res = reduce_matching_pair(one_in_three_to_3dm(ol), one_in_three_to_3dm(orr));
    res.circuit_left = left;
    res.circuit_right = right;
    res.cnf_left = std::move(cl);
    res.cnf_right = std::move(cr);
    res.oit_left = std::move(ol);
    res.oit_right = std::move(orr);
    return res;
}

}  // namespace symchar
