#include "symchar/sat.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symchar {

namespace {

std::map<std::string, std::size_t> node_index(const Circuit& c) {
    std::map<std::string, std::size_t> idx;
    std::size_t next = 0;
    for (const auto& name : c.inputs) {
        if (!idx.emplace(name, next++).second)
            throw std::invalid_argument("duplicate node id: " + name);
    }
    for (const auto& g : c.gates) {
        if (idx.count(g.a) == 0) throw std::invalid_argument("unknown operand: " + g.a);
        if (g.kind != Circuit::Kind::Not && idx.count(g.b) == 0)
            throw std::invalid_argument("unknown operand: " + g.b);
        if (!idx.emplace(g.id, next++).second)
            throw std::invalid_argument("duplicate node id: " + g.id);
    }
    return idx;
}

}  // namespace

void validate_circuit(const Circuit& c) {
    auto idx = node_index(c);
    if (c.output.empty() || idx.count(c.output) == 0)
        throw std::invalid_argument("missing or unknown output node");
}

Int count_circuit_sat(const Circuit& c, unsigned max_inputs) {
    auto idx = node_index(c);
    if (c.output.empty() || idx.count(c.output) == 0)
        throw std::invalid_argument("missing or unknown output node");
    if (c.inputs.size() > max_inputs)
        throw std::invalid_argument("input enumeration bound exceeded");
    std::size_t n = c.inputs.size();
    struct Op { Circuit::Kind kind; std::size_t a, b; };
    std::vector<Op> ops;
    ops.reserve(c.gates.size());
    for (const auto& g : c.gates)
        ops.push_back({g.kind, idx.at(g.a), g.kind == Circuit::Kind::Not ? 0 : idx.at(g.b)});
    std::size_t out_idx = idx.at(c.output);
    std::vector<char> val(n + c.gates.size(), 0);
    Int count = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
        for (std::size_t i = 0; i < n; ++i) val[i] = (w >> i) & 1;
        for (std::size_t g = 0; g < ops.size(); ++g) {
            char a = val[ops[g].a];
            char out = 0;
            switch (ops[g].kind) {
                case Circuit::Kind::Not: out = !a; break;
                case Circuit::Kind::And: out = a && val[ops[g].b]; break;
                case Circuit::Kind::Or: out = a || val[ops[g].b]; break;
            }
            val[n + g] = out;
        }
        if (val[out_idx]) ++count;
    }
    return count;
}

namespace {

// Drops duplicate literals; returns an empty optional for tautologies.
bool simplify_clause(std::vector<int>& clause) {
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    for (std::size_t i = 0; i + 1 < clause.size(); ++i)
        if (clause[i] == -clause[i + 1]) return false;  // x and not-x
    return true;
}

}  // namespace

Cnf tseytin(const Circuit& c) {
    validate_circuit(c);
    auto idx = node_index(c);
    // Variable v = node index + 1, inputs first, then the gates in order.
    auto var = [&](const std::string& id) { return static_cast<int>(idx.at(id)) + 1; };
    Cnf f;
    f.num_vars = static_cast<int>(c.inputs.size() + c.gates.size());
    auto add = [&](std::vector<int> clause) {
        if (simplify_clause(clause)) f.clauses.push_back(std::move(clause));
    };
    for (const auto& g : c.gates) {
        int out = var(g.id);
        int a = var(g.a);
        switch (g.kind) {
            case Circuit::Kind::Not:
                add({-out, -a});
                add({out, a});
                break;
            case Circuit::Kind::And: {
                int b = var(g.b);
                add({-out, a});
                add({-out, b});
                add({out, -a, -b});
                break;
            }
            case Circuit::Kind::Or: {
                int b = var(g.b);
                add({out, -a});
                add({out, -b});
                add({-out, a, b});
                break;
            }
        }
    }
    f.clauses.push_back({var(c.output)});
    return f;
}

namespace {

// Exhaustive counting with unit propagation. assign: 0 unknown, 1 true,
// -1 false.
struct CnfCounter {
    const Cnf& f;
    std::vector<int> assign;

    explicit CnfCounter(const Cnf& f_) : f(f_), assign(static_cast<std::size_t>(f_.num_vars) + 1, 0) {}

    int value(int lit) const {
        int v = assign[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : -v;
    }

    Int count() {
        std::vector<char> occurs(assign.size(), 0);
        for (const auto& cl : f.clauses)
            for (int lit : cl) occurs[static_cast<std::size_t>(std::abs(lit))] = 1;
        unsigned free_vars = 0;
        for (int v = 1; v <= f.num_vars; ++v)
            if (!occurs[static_cast<std::size_t>(v)]) ++free_vars;
        Int base = rec();
        return base << free_vars;
    }

    // Returns the count over variables that occur in clauses.
    Int rec() {
        // Unit propagation to fixpoint.
        std::vector<int> trail;
        for (;;) {
            int unit = 0;
            for (const auto& cl : f.clauses) {
                int unassigned = 0, candidate = 0;
                bool satisfied = false;
                for (int lit : cl) {
                    int v = value(lit);
                    if (v > 0) { satisfied = true; break; }
                    if (v == 0) { ++unassigned; candidate = lit; }
                }
                if (satisfied) continue;
                if (unassigned == 0) {  // conflict
                    for (int lit : trail) assign[static_cast<std::size_t>(std::abs(lit))] = 0;
                    return 0;
                }
                if (unassigned == 1) { unit = candidate; break; }
            }
            if (unit == 0) break;
            assign[static_cast<std::size_t>(std::abs(unit))] = unit > 0 ? 1 : -1;
            trail.push_back(unit);
        }
        // Pick a branching variable from the first clause not yet satisfied.
        int branch = 0;
        for (const auto& cl : f.clauses) {
            bool satisfied = false;
            for (int lit : cl)
                if (value(lit) > 0) { satisfied = true; break; }
            if (satisfied) continue;
            for (int lit : cl)
                if (value(lit) == 0) { branch = std::abs(lit); break; }
            if (branch) break;
        }
        Int result;
        if (branch == 0) {
            // Every clause satisfied; the undetermined occurring variables are free.
            unsigned loose = 0;
            std::vector<char> occurs(assign.size(), 0);
            for (const auto& cl : f.clauses)
                for (int lit : cl) occurs[static_cast<std::size_t>(std::abs(lit))] = 1;
            for (int v = 1; v <= f.num_vars; ++v)
                if (occurs[static_cast<std::size_t>(v)] && assign[static_cast<std::size_t>(v)] == 0)
                    ++loose;
            result = Int(1) << loose;
        } else {
            result = 0;
            for (int val : {1, -1}) {
                assign[static_cast<std::size_t>(branch)] = val;
                result += rec();
            }
            assign[static_cast<std::size_t>(branch)] = 0;
        }
        for (int lit : trail) assign[static_cast<std::size_t>(std::abs(lit))] = 0;
        return result;
    }
};

struct OitCounter {
    const OneInThree& f;
    std::vector<int> assign;

    explicit OitCounter(const OneInThree& f_)
        : f(f_), assign(static_cast<std::size_t>(f_.num_vars) + 1, 0) {}

    int value(int lit) const {
        int v = assign[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : -v;
    }

    Int count() {
        std::vector<char> occurs(assign.size(), 0);
        for (const auto& t : f.triples)
            for (int lit : t) occurs[static_cast<std::size_t>(std::abs(lit))] = 1;
        unsigned free_vars = 0;
        for (int v = 1; v <= f.num_vars; ++v)
            if (!occurs[static_cast<std::size_t>(v)]) ++free_vars;
        return rec() << free_vars;
    }

    Int rec() {
        std::vector<int> trail;
        for (;;) {
            int forced = 0;
            for (const auto& t : f.triples) {
                int trues = 0, falses = 0;
                for (int lit : t) {
                    int v = value(lit);
                    if (v > 0) ++trues;
                    else if (v < 0) ++falses;
                }
                if (trues > 1 || falses == 3) {
                    for (int lit : trail) assign[static_cast<std::size_t>(std::abs(lit))] = 0;
                    return 0;
                }
                if (trues == 1 && trues + falses < 3) {
                    for (int lit : t)
                        if (value(lit) == 0) { forced = -lit; break; }
                    break;
                }
                if (trues == 0 && falses == 2) {
                    for (int lit : t)
                        if (value(lit) == 0) { forced = lit; break; }
                    break;
                }
            }
            if (forced == 0) break;
            assign[static_cast<std::size_t>(std::abs(forced))] = forced > 0 ? 1 : -1;
            trail.push_back(forced);
        }
        int branch = 0;
        for (const auto& t : f.triples) {
            for (int lit : t)
                if (value(lit) == 0) { branch = std::abs(lit); break; }
            if (branch) break;
        }
        Int result;
        if (branch == 0) {
            // All triples fully assigned and consistent (propagation finishes
            // every triple that has three values).
            result = 1;
            for (const auto& t : f.triples) {
                int trues = 0;
                for (int lit : t)
                    if (value(lit) > 0) ++trues;
                if (trues != 1) { result = 0; break; }
            }
        } else {
            result = 0;
            for (int val : {1, -1}) {
                assign[static_cast<std::size_t>(branch)] = val;
                result += rec();
            }
            assign[static_cast<std::size_t>(branch)] = 0;
        }
        for (int lit : trail) assign[static_cast<std::size_t>(std::abs(lit))] = 0;
        return result;
    }
};

}  // namespace

Int count_cnf(const Cnf& f, unsigned max_vars) {
    if (f.num_vars < 0 || static_cast<unsigned>(f.num_vars) > max_vars)
        throw std::invalid_argument("variable bound exceeded");
    for (const auto& cl : f.clauses)
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw std::invalid_argument("literal out of range");
    CnfCounter c(f);
    return c.count();
}

Int count_one_in_three(const OneInThree& f, unsigned max_vars) {
    if (f.num_vars < 0 || static_cast<unsigned>(f.num_vars) > max_vars)
        throw std::invalid_argument("variable bound exceeded");
    for (const auto& t : f.triples)
        for (int lit : t)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw std::invalid_argument("literal out of range");
    OitCounter c(f);
    return c.count();
}

OneInThree to_one_in_three(const Cnf& f) {
    // Normalize: drop tautologies and duplicate literals.
    std::vector<std::vector<int>> clauses;
    bool has_empty = false;
    for (std::vector<int> cl : f.clauses) {
        if (!simplify_clause(cl)) continue;
        if (cl.empty()) has_empty = true;
        if (cl.size() > 3) throw std::invalid_argument("clause width exceeds 3");
        clauses.push_back(std::move(cl));
    }

    OneInThree out;
    int next = f.num_vars;
    auto fresh = [&]() { return ++next; };

    bool need_forcing = has_empty;
    for (const auto& cl : clauses)
        if (cl.size() < 3) need_forcing = true;

    int t = 0, g1 = 0, g2 = 0, g3 = 0;
    if (need_forcing) {
        t = fresh(); g1 = fresh(); g2 = fresh(); g3 = fresh();
        // Unique solution t=1, g1=g2=g3=0.
        out.triples.push_back({t, g1, g2});
        out.triples.push_back({t, g2, g3});
        out.triples.push_back({t, g1, g3});
    }
    if (has_empty) {
        // Unsatisfiable marker: all three are forced false.
        out.triples.push_back({g1, g2, g3});
    }

    for (const auto& cl : clauses) {
        if (cl.empty()) continue;
        std::vector<int> lits = cl;
        while (lits.size() < 3) {
            int fpad = fresh();
            out.triples.push_back({fpad, g1, t});  // pins fpad = 0
            lits.push_back(fpad);
        }
        // Chain for l1 | l2 | l3, plus the anchor (u2, u4, u5): without it the
        // aux assignment is two-fold when l1 and l3 are true and l2 is false.
        int u1 = fresh(), u2 = fresh(), u3 = fresh(), u4 = fresh(), u5 = fresh();
        out.triples.push_back({-lits[0], u1, u2});
        out.triples.push_back({lits[1], u2, u3});
        out.triples.push_back({-lits[2], u3, u4});
        out.triples.push_back({u2, u4, u5});
    }
    out.num_vars = next;
    return out;
}

Hypergraph3 one_in_three_to_3dm(const OneInThree& f) {
    const std::size_t m = f.triples.size();
    const int n = f.num_vars;

    // Occurrences per variable in (triple, position) order.
    struct Occ { std::size_t triple; int pos; bool positive; };
    std::vector<std::vector<Occ>> occ(static_cast<std::size_t>(n) + 1);
    for (std::size_t c = 0; c < m; ++c)
        for (int p = 0; p < 3; ++p) {
            int lit = f.triples[c][static_cast<std::size_t>(p)];
            occ[static_cast<std::size_t>(std::abs(lit))].push_back({c, p, lit > 0});
        }

    std::vector<int> unused;
    for (int v = 1; v <= n; ++v)
        if (occ[static_cast<std::size_t>(v)].empty()) unused.push_back(v);
    const std::size_t uu = unused.size();

    if (m == 0 && uu == 0) return make_hypergraph3(1, {{1, 1, 1}});

    const int k = static_cast<int>(6 * m + 2 * uu);

    // Slot layouts. Slot 1: variable cycle anchors interleaved with the
    // constraint blocks in discovery order, so that each block's elements sit
    // right after the cycles that feed it (the matching counter branches on
    // low indices first and the blocks then prune inconsistent cycle choices
    // before unrelated variables multiply the search). Slot 2 mirrors slot 1.
    // Slot 3: tau/omega tip pair per occurrence, then pi/kappa per unused var.
    std::vector<int> var_base(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> block_base(m, 0);
    int acc = 0;
    for (std::size_t c = 0; c < m; ++c) {
        for (int p = 0; p < 3; ++p) {
            int v = std::abs(f.triples[c][static_cast<std::size_t>(p)]);
            if (var_base[static_cast<std::size_t>(v)] < 0) {
                var_base[static_cast<std::size_t>(v)] = acc;
                acc += static_cast<int>(occ[static_cast<std::size_t>(v)].size());
            }
        }
        block_base[c] = acc;
        acc += 3;
    }
    const int unused_base = acc;  // 2 per unused var

    auto tau = [&](std::size_t c, int p) { return static_cast<int>(6 * c) + 2 * p + 1; };
    auto omega = [&](std::size_t c, int p) { return static_cast<int>(6 * c) + 2 * p + 2; };
    const int tips_end = static_cast<int>(6 * m);

    std::vector<std::array<int, 3>> edges;

    // Variable cycles: selecting all P edges reads as "true", all Q as
    // "false". A tip is covered by the cycle exactly when its literal is
    // false, leaving true-literal taus and false-literal omegas for the
    // constraint blocks.
    for (int v = 1; v <= n; ++v) {
        const auto& os = occ[static_cast<std::size_t>(v)];
        if (os.empty()) continue;
        const std::size_t d = os.size();
        for (std::size_t i = 0; i < d; ++i) {
            int a_i = var_base[static_cast<std::size_t>(v)] + static_cast<int>(i) + 1;
            int a_next = var_base[static_cast<std::size_t>(v)] + static_cast<int>((i + 1) % d) + 1;
            int b_i = a_i;
            int tau_i = tau(os[i].triple, os[i].pos);
            int omega_i = omega(os[i].triple, os[i].pos);
            if (os[i].positive) {
                edges.push_back({a_i, b_i, omega_i});    // P: covered when true
                edges.push_back({a_next, b_i, tau_i});   // Q: covered when false
            } else {
                edges.push_back({a_i, b_i, tau_i});
                edges.push_back({a_next, b_i, omega_i});
            }
        }
    }

    // Constraint consumer blocks: a 3x3 grid over private (u_t, w_col) pairs.
    // Column 1 holds the taus, permuted so that every free-tip set reachable
    // from a satisfying choice is covered by exactly one grid permutation and
    // the other permutations repeat a tip.
    for (std::size_t c = 0; c < m; ++c) {
        int u[3], w[3];
        for (int t = 0; t < 3; ++t) {
            u[t] = block_base[c] + t + 1;
            w[t] = u[t];
        }
        const int tcell[3] = {tau(c, 0), tau(c, 2), tau(c, 1)};
        const int col2[3] = {omega(c, 2), omega(c, 1), omega(c, 0)};
        const int col3[3] = {omega(c, 1), omega(c, 0), omega(c, 2)};
        for (int t = 0; t < 3; ++t) {
            edges.push_back({u[t], w[0], tcell[t]});
            edges.push_back({u[t], w[1], col2[t]});
            edges.push_back({u[t], w[2], col3[t]});
        }
    }

    // Unused variables double the count: two interchangeable coverings.
    for (std::size_t i = 0; i < uu; ++i) {
        int a = unused_base + static_cast<int>(2 * i) + 1;
        int s = unused_base + static_cast<int>(2 * i) + 2;
        int pi = tips_end + static_cast<int>(2 * i) + 1;
        int kappa = tips_end + static_cast<int>(2 * i) + 2;
        edges.push_back({a, a, pi});
        edges.push_back({a, a, kappa});
        edges.push_back({s, s, pi});
        edges.push_back({s, s, kappa});
    }

    return make_hypergraph3(k, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

Circuit parse_circuit(std::istream& in) {
    Circuit c;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "input") {
            std::string name;
            if (!(ls >> name)) fail("expected input name");
            c.inputs.push_back(name);
        } else if (word == "gate") {
            Circuit::Gate g;
            std::string eq, kind;
            if (!(ls >> g.id >> eq >> kind) || eq != "=") fail("expected '<id> = <kind> ...'");
            if (kind == "NOT") {
                g.kind = Circuit::Kind::Not;
                if (!(ls >> g.a)) fail("NOT takes one operand");
            } else if (kind == "AND" || kind == "OR") {
                g.kind = kind == "AND" ? Circuit::Kind::And : Circuit::Kind::Or;
                if (!(ls >> g.a >> g.b)) fail(kind + " takes two operands");
            } else {
                fail("unknown gate kind " + kind);
            }
            c.gates.push_back(std::move(g));
        } else if (word == "output") {
            if (!(ls >> c.output)) fail("expected output id");
        } else {
            fail("unknown directive " + word);
        }
    }
    validate_circuit(c);
    return c;
}

std::string format_circuit(const Circuit& c) {
    std::ostringstream os;
    for (const auto& name : c.inputs) os << "input " << name << "\n";
    for (const auto& g : c.gates) {
        os << "gate " << g.id << " = ";
        switch (g.kind) {
            case Circuit::Kind::Not: os << "NOT " << g.a; break;
            case Circuit::Kind::And: os << "AND " << g.a << " " << g.b; break;
            case Circuit::Kind::Or: os << "OR " << g.a << " " << g.b; break;
        }
        os << "\n";
    }
    os << "output " << c.output << "\n";
    return os.str();
}

namespace {

std::vector<std::vector<int>> parse_zero_terminated(std::istream& in, int num_vars,
                                                    std::size_t expected) {
    std::vector<std::vector<int>> clauses;
    std::vector<int> cur;
    int lit;
    while (in >> lit) {
        if (lit == 0) {
            clauses.push_back(cur);
            cur.clear();
        } else {
            if (std::abs(lit) > num_vars)
                throw std::invalid_argument("literal out of range: " + std::to_string(lit));
            cur.push_back(lit);
        }
    }
    if (!cur.empty()) throw std::invalid_argument("unterminated clause");
    if (clauses.size() != expected)
        throw std::invalid_argument("clause count disagrees with header");
    return clauses;
}

}  // namespace

Cnf parse_dimacs(std::istream& in) {
    std::string line;
    Cnf f;
    std::size_t declared = 0;
    for (;;) {
        if (!std::getline(in, line)) throw std::invalid_argument("missing DIMACS header");
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string p, kind;
        if (!(ls >> p >> kind >> f.num_vars >> declared) || p != "p" || kind != "cnf")
            throw std::invalid_argument("bad DIMACS header: " + line);
        break;
    }
    f.clauses = parse_zero_terminated(in, f.num_vars, declared);
    for (const auto& cl : f.clauses)
        if (cl.size() > 3) throw std::invalid_argument("clause width exceeds 3");
    return f;
}

std::string format_dimacs(const Cnf& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& cl : f.clauses) {
        for (int lit : cl) os << lit << " ";
        os << "0\n";
    }
    return os.str();
}

OneInThree parse_oit(std::istream& in) {
    std::string line;
    OneInThree f;
    std::size_t declared = 0;
    for (;;) {
        if (!std::getline(in, line)) throw std::invalid_argument("missing header");
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string p, kind;
        if (!(ls >> p >> kind >> f.num_vars >> declared) || p != "p" || kind != "oit")
            throw std::invalid_argument("bad one-in-three header: " + line);
        break;
    }
    auto raw = parse_zero_terminated(in, f.num_vars, declared);
    for (const auto& cl : raw) {
        if (cl.size() != 3) throw std::invalid_argument("triples must have exactly 3 literals");
        std::set<int> vars{std::abs(cl[0]), std::abs(cl[1]), std::abs(cl[2])};
        if (vars.size() != 3) throw std::invalid_argument("triple variables must be distinct");
        f.triples.push_back({cl[0], cl[1], cl[2]});
    }
    return f;
}

std::string format_oit(const OneInThree& f) {
    std::ostringstream os;
    os << "p oit " << f.num_vars << " " << f.triples.size() << "\n";
    for (const auto& t : f.triples) os << t[0] << " " << t[1] << " " << t[2] << " 0\n";
    return os.str();
}

}  // namespace symchar
