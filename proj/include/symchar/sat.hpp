#pragma once

#include "symchar/bigint.hpp"
#include "symchar/matchings.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace symchar {

// Boolean circuit over named nodes. Gate fan-in is fixed at two (NOT is
// unary); operands may only reference inputs or earlier gates.
struct Circuit {
    enum class Kind { Not, And, Or };
    struct Gate {
        std::string id;
        Kind kind;
        std::string a;
        std::string b;  // ignored for Not
    };
    std::vector<std::string> inputs;
    std::vector<Gate> gates;
    std::string output;
};

void validate_circuit(const Circuit& c);

// Exact model count by enumerating all input assignments.
Int count_circuit_sat(const Circuit& c, unsigned max_inputs = 20);

// CNF with clause width <= 3, DIMACS conventions (literals are nonzero signed
// variable indices).
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Model count preserved: gate variables are functionally determined.
Cnf tseytin(const Circuit& c);

// Exact count by exhaustive branching with unit propagation. Complete search;
// the bound caps the variable count, not the (instance-dependent) runtime.
Int count_cnf(const Cnf& f, unsigned max_vars = 4096);

struct OneInThree {
    int num_vars = 0;
    std::vector<std::array<int, 3>> triples;  // exactly-one-true constraints
};

// Satisfaction: exactly one true literal per triple, counted over all
// num_vars variables (vars in no triple are free).
Int count_one_in_three(const OneInThree& f, unsigned max_vars = 4096);

// Model count preserved. Width-3 clauses use a chain of one-in-three
// constraints plus one anchor constraint that pins the otherwise two-fold
// auxiliary solution; shorter clauses are first padded with variables forced
// false by a shared forcing block.
OneInThree to_one_in_three(const Cnf& f);

// Model count preserved; every coordinate of the output is covered. Each
// variable becomes a cycle of paired triples whose two consistent selections
// encode true/false; each one-in-three constraint becomes a 3x3 consumer
// block that absorbs exactly the tips its unique satisfying choice leaves
// free.
Hypergraph3 one_in_three_to_3dm(const OneInThree& f);

// Text formats.
Circuit parse_circuit(std::istream& in);
std::string format_circuit(const Circuit& c);
Cnf parse_dimacs(std::istream& in);
std::string format_dimacs(const Cnf& f);
OneInThree parse_oit(std::istream& in);
std::string format_oit(const OneInThree& f);

}  // namespace symchar
