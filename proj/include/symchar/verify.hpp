#pragma once

#include "symchar/io.hpp"
#include "symchar/pipeline.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symchar {

struct StageRecord {
    std::string stage;
    std::string left;
    std::string right;
    bool pass = false;
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::vector<StageRecord> stages;

    bool pass() const {
        for (const auto& s : stages)
            if (!s.pass) return false;
        return true;
    }
    std::string text() const;
    Json to_json() const;  // timing fields excluded for byte-stable output
};

struct VerifyOptions {
    std::size_t max_join_edges = 12;  // |J| guard for the brute-force stages
    std::size_t char_jt_max_length = 16;
};

// Runs reduce_matching_pair and then re-derives every stage independently:
// the two 3DM counts, the two punctured 4DM counts, the split of the gadget
// count, the two modified counts with their delta divisibility, and finally
// the character value against delta * (#3DM(e) - #3DM(e')).
VerifyReport verify_pipeline(const Hypergraph3& e, const Hypergraph3& e_prime,
                             const VerifyOptions& opts = {});

// Seeded random circuits pushed through the counting chain.
VerifyReport verify_parsimony(std::uint64_t seed, unsigned instances = 25,
                              unsigned max_inputs = 4, unsigned max_gates = 6);

enum class IdentityKind { Rsk, CharSum, Burnside, RowCol };

// Exhaustive classical identity checks at a given n.
VerifyReport verify_identity(IdentityKind kind, unsigned n);

// Seeded random circuit, reproducible across runs.
Circuit random_circuit(std::uint64_t seed, unsigned max_inputs, unsigned max_gates);

}  // namespace symchar
