#pragma once

#include "symchar/combinat.hpp"
#include "symchar/matchings.hpp"
#include "symchar/pipeline.hpp"
#include "symchar/setpartition.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace symchar {

// Serialized integers are decimal strings, never JSON numbers, so values
// round-trip at any magnitude. Key order is fixed for byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Composition& c);
Composition composition_from_json(const Json& j);

Json to_json(const SetPartitionInstance& inst);
SetPartitionInstance setpartition_from_json(const Json& j);

Json to_json(const JoinResult& jr);
JoinResult join_result_from_json(const Json& j);

Json to_json(const GadgetInstance& g);

Json to_json(const CharInstance& ci, const Int* delta = nullptr);

// Line format: "k <k>" (or "u <u>") then one edge per line.
Hypergraph3 parse_hypergraph3(std::istream& in);
std::string format_hypergraph3(const Hypergraph3& g);
Hypergraph4 parse_hypergraph4(std::istream& in);
std::string format_hypergraph4(const Hypergraph4& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace symchar
