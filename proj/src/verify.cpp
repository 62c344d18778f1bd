#include "symchar/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace symchar {

namespace {

class StageTimer {
  public:
    StageTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void add_stage(VerifyReport& rep, const std::string& name, const Int& left, const Int& right,
               double ms) {
    rep.stages.push_back({name, to_decimal(left), to_decimal(right), left == right, ms});
}

// Deterministic across platforms; distribution helpers from <random> are not.
std::uint64_t next_u64(std::mt19937_64& gen) { return gen(); }
unsigned below(std::mt19937_64& gen, unsigned bound) {
    return static_cast<unsigned>(next_u64(gen) % bound);
}

}  // namespace

std::string VerifyReport::text() const {
    std::ostringstream os;
    for (const auto& s : stages) {
        os << (s.pass ? "PASS" : "FAIL") << "  " << s.stage << ": " << s.left;
        if (s.left != s.right || !s.pass) os << " vs " << s.right;
        os << "  (" << s.elapsed_ms << " ms)\n";
    }
    os << (pass() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    return os.str();
}

Json VerifyReport::to_json() const {
    Json arr = Json::array();
    for (const auto& s : stages) {
        Json js;
        js["stage"] = s.stage;
        js["left"] = s.left;
        js["right"] = s.right;
        js["pass"] = s.pass;
        arr.push_back(std::move(js));
    }
    Json j;
    j["stages"] = std::move(arr);
    j["pass"] = pass();
    return j;
}

VerifyReport verify_pipeline(const Hypergraph3& e, const Hypergraph3& e_prime,
                             const VerifyOptions& opts) {
    VerifyReport rep;
    PipelineResult res = reduce_matching_pair(e, e_prime);
    if (res.join_result.j.edges.size() > opts.max_join_edges)
        throw std::invalid_argument("join too large for brute-force verification");

    StageTimer t0;
    Int c3 = count_3dm(e);
    Int c3p = count_3dm(e_prime);
    add_stage(rep, "counts: #3DM(E), #3DM(E')", c3, c3p, t0.ms());
    rep.stages.back().pass = true;  // informational row

    StageTimer t1;
    Int c4_no_hp = count_4dm(without_edge(res.join_result.j, res.join_result.h_prime));
    add_stage(rep, "join: #4DM(J\\{H'}) = #3DM(E)", c4_no_hp, c3, t1.ms());
    StageTimer t2;
    Int c4_no_h = count_4dm(without_edge(res.join_result.j, res.join_result.h));
    add_stage(rep, "join: #4DM(J\\{H}) = #3DM(E')", c4_no_h, c3p, t2.ms());

    const Int& delta = res.gadget.delta;
    StageTimer t3;
    SetPartitionInstance aux = res.gadget.as_setpartition();
    Int p0 = count_with_fixed_pair(aux, res.gadget.special_vertex, res.gadget.special_h, true);
    add_stage(rep, "gadget: |P0| = delta * #4DM(J\\{H'})", p0, delta * c4_no_hp, t3.ms());
    StageTimer t4;
    Int p1 = count_with_fixed_pair(aux, res.gadget.special_vertex, res.gadget.special_h_prime, true);
    add_stage(rep, "gadget: |P1| = delta * #4DM(J\\{H})", p1, delta * c4_no_h, t4.ms());
    StageTimer t5;
    Int ptotal = count_ordered_partitions(aux);
    add_stage(rep, "gadget: |P0| + |P1| covers all solutions", p0 + p1, ptotal, t5.ms());

    StageTimer t6;
    Int pbar = count_ordered_partitions({res.modified.c, res.modified.d_bar});
    add_stage(rep, "modified: P(c,dbar) = delta * #4DM(J\\{H'})", pbar, delta * c4_no_hp, t6.ms());
    StageTimer t7;
    Int pbarp = count_ordered_partitions({res.modified.c, res.modified.d_bar_prime});
    add_stage(rep, "modified: P(c,dbar') = delta * #4DM(J\\{H})", pbarp, delta * c4_no_h, t7.ms());

    StageTimer t8;
    add_stage(rep, "divisibility: delta | P(c,dbar)", pbar % delta, Int(0), t8.ms());
    add_stage(rep, "divisibility: delta | P(c,dbar')", pbarp % delta, Int(0), 0.0);

    StageTimer t9;
    CharJtOptions jt;
    jt.max_length = opts.char_jt_max_length;
    Int chi = char_jt(res.char_instance.lambda, res.char_instance.alpha, jt);
    add_stage(rep, "character: chi = delta * (#3DM(E) - #3DM(E'))", chi, delta * (c3 - c3p),
              t9.ms());
    return rep;
}

Circuit random_circuit(std::uint64_t seed, unsigned max_inputs, unsigned max_gates) {
    std::mt19937_64 gen(seed);
    Circuit c;
    unsigned n_inputs = 1 + below(gen, max_inputs);
    unsigned n_gates = 1 + below(gen, max_gates);
    std::vector<std::string> nodes;
    for (unsigned i = 0; i < n_inputs; ++i) {
        c.inputs.push_back("x" + std::to_string(i + 1));
        nodes.push_back(c.inputs.back());
    }
    for (unsigned g = 0; g < n_gates; ++g) {
        Circuit::Gate gate;
        gate.id = "g" + std::to_string(g + 1);
        unsigned kind = below(gen, 3);
        gate.a = nodes[below(gen, static_cast<unsigned>(nodes.size()))];
        if (kind == 0) {
            gate.kind = Circuit::Kind::Not;
        } else {
            gate.kind = kind == 1 ? Circuit::Kind::And : Circuit::Kind::Or;
            gate.b = nodes[below(gen, static_cast<unsigned>(nodes.size()))];
        }
        nodes.push_back(gate.id);
        c.gates.push_back(std::move(gate));
    }
    c.output = c.gates.back().id;
    return c;
}

VerifyReport verify_parsimony(std::uint64_t seed, unsigned instances, unsigned max_inputs,
                              unsigned max_gates) {
    VerifyReport rep;
    for (unsigned t = 0; t < instances; ++t) {
        Circuit c = random_circuit(seed + t, max_inputs, max_gates);
        StageTimer timer;
        Int direct = count_circuit_sat(c);
        Cnf f = tseytin(c);
        Int viacnf = count_cnf(f);
        OneInThree oit = to_one_in_three(f);
        Int viaoit = count_one_in_three(oit);
        Hypergraph3 g = one_in_three_to_3dm(oit);
        Int via3dm = count_3dm(g);
        bool ok = direct == viacnf && direct == viaoit && direct == via3dm;
        std::ostringstream left;
        left << direct << "/" << viacnf << "/" << viaoit << "/" << via3dm;
        rep.stages.push_back({"parsimony chain, instance " + std::to_string(t),
                              left.str(), to_decimal(direct), ok, timer.ms()});
    }
    return rep;
}

VerifyReport verify_identity(IdentityKind kind, unsigned n) {
    VerifyReport rep;
    std::vector<Partition> parts = partitions_of(n);
    switch (kind) {
        case IdentityKind::Rsk: {
            StageTimer t;
            Int total = 0;
            for (const Partition& lam : parts) {
                Int d = dimension(lam);
                total += d * d;
            }
            add_stage(rep, "sum of squared dimensions = n!", total, factorial(n), t.ms());
            break;
        }
        case IdentityKind::CharSum: {
            for (const Partition& lam : parts) {
                StageTimer t;
                Int total = 0;
                for (const Partition& mu : parts) {
                    Int chi = char_mn(lam, mu.parts());
                    total += (factorial(n) / z_factor(mu)) * chi * chi;
                }
                std::ostringstream name;
                name << "class-weighted square sum at lambda #" << (&lam - parts.data());
                add_stage(rep, name.str(), total, factorial(n), t.ms());
            }
            break;
        }
        case IdentityKind::Burnside: {
            for (const Partition& mu : parts) {
                StageTimer t;
                Int total = 0;
                for (const Partition& lam : parts) {
                    Int chi = char_mn(lam, mu.parts());
                    total += chi * chi;
                }
                std::ostringstream name;
                name << "column square sum at mu #" << (&mu - parts.data());
                add_stage(rep, name.str(), total, z_factor(mu), t.ms());
            }
            break;
        }
        case IdentityKind::RowCol: {
            for (const Partition& lam : parts) {
                StageTimer t;
                add_stage(rep, "column sum equals square-root count",
                          column_sum(lam), sqrt_count_oracle(lam), t.ms());
                if (n > 1) {
                    StageTimer t2;
                    Int rs = row_sum(lam);
                    rep.stages.push_back({"row sum is positive", to_decimal(rs), ">= 1",
                                          rs >= 1, t2.ms()});
                }
            }
            break;
        }
    }
    return rep;
}

}  // namespace symchar
