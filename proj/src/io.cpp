#include "symchar/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symchar {

Json to_json(const Composition& c) {
    Json arr = Json::array();
    for (const Int& x : c) arr.push_back(to_decimal(x));
    return arr;
}

Composition composition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of decimal strings");
    Composition c;
    for (const auto& v : j) {
        if (v.is_string()) c.push_back(parse_decimal(v.get<std::string>()));
        else if (v.is_number_integer()) c.push_back(Int(v.get<long long>()));
        else throw std::invalid_argument("expected a decimal string entry");
    }
    return c;
}

Json to_json(const SetPartitionInstance& inst) {
    Json j;
    j["items"] = to_json(inst.items);
    j["bins"] = to_json(inst.bins);
    return j;
}

SetPartitionInstance setpartition_from_json(const Json& j) {
    return {composition_from_json(j.at("items")), composition_from_json(j.at("bins"))};
}

namespace {

template <std::size_t D>
Json edges_to_json(const std::vector<std::array<int, D>>& edges) {
    Json arr = Json::array();
    for (const auto& e : edges) {
        Json je = Json::array();
        for (int c : e) je.push_back(c);
        arr.push_back(std::move(je));
    }
    return arr;
}

template <std::size_t D>
std::vector<std::array<int, D>> edges_from_json(const Json& j) {
    std::vector<std::array<int, D>> edges;
    for (const auto& je : j) {
        if (!je.is_array() || je.size() != D)
            throw std::invalid_argument("bad edge arity");
        std::array<int, D> e{};
        for (std::size_t t = 0; t < D; ++t) e[t] = je[t].get<int>();
        edges.push_back(e);
    }
    return edges;
}

}  // namespace

Json to_json(const JoinResult& jr) {
    Json j;
    j["u"] = jr.j.u;
    j["edges"] = edges_to_json(jr.j.edges);
    j["h"] = edges_to_json<4>({jr.h})[0];
    j["h_prime"] = edges_to_json<4>({jr.h_prime})[0];
    return j;
}

JoinResult join_result_from_json(const Json& j) {
    JoinResult jr;
    jr.j = make_hypergraph4(j.at("u").get<int>(), edges_from_json<4>(j.at("edges")));
    auto h = edges_from_json<4>(Json::array({j.at("h")}));
    auto hp = edges_from_json<4>(Json::array({j.at("h_prime")}));
    jr.h = h[0];
    jr.h_prime = hp[0];
    return jr;
}

Json to_json(const GadgetInstance& g) {
    Json j;
    j["u"] = g.u;
    j["r"] = to_decimal(g.r);
    j["delta"] = to_decimal(g.delta);
    Json items = Json::array();
    for (const auto& it : g.items) {
        Json ji;
        switch (it.role) {
            case GadgetItem::Role::RealVertex:
                ji["role"] = "real-vertex";
                ji["i"] = it.i;
                ji["j"] = it.j;
                break;
            case GadgetItem::Role::DummyVertex:
                ji["role"] = "dummy-vertex";
                ji["i"] = it.i;
                ji["j"] = it.j;
                break;
            case GadgetItem::Role::Hyperedge: {
                ji["role"] = "hyperedge";
                Json e = Json::array();
                for (int c : it.edge) e.push_back(c);
                ji["edge"] = std::move(e);
                break;
            }
        }
        ji["size"] = to_decimal(it.size);
        items.push_back(std::move(ji));
    }
    j["items"] = std::move(items);
    j["bins"] = to_json(Composition(g.bins.begin(), g.bins.end()));
    j["special"] = {{"vertex", g.special_vertex},
                    {"first_hyperedge", g.special_h},
                    {"second_hyperedge", g.special_h_prime}};
    return j;
}

Json to_json(const CharInstance& ci, const Int* delta) {
    Json j;
    j["lambda"] = to_json(ci.lambda.parts());
    j["alpha"] = to_json(ci.alpha);
    if (delta) j["delta"] = to_decimal(*delta);
    Json d;
    d["p"] = to_decimal(ci.derivation.p);
    d["a"] = to_json(ci.derivation.a);
    d["b"] = to_json(ci.derivation.b);
    if (ci.derivation.m) d["m"] = to_decimal(*ci.derivation.m);
    if (ci.derivation.c) d["c"] = to_json(*ci.derivation.c);
    if (ci.derivation.d) d["d"] = to_json(*ci.derivation.d);
    if (ci.derivation.d_bar) d["d_bar"] = to_json(*ci.derivation.d_bar);
    if (ci.derivation.d_bar_prime) d["d_bar_prime"] = to_json(*ci.derivation.d_bar_prime);
    j["derivation"] = std::move(d);
    return j;
}

namespace {

template <std::size_t D>
std::pair<int, std::vector<std::array<int, D>>> parse_hypergraph(std::istream& in,
                                                                 const char* what) {
    std::string line;
    int k = -1;
    std::vector<std::array<int, D>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (k < 0) {
            if (first != "k" && first != "u")
                throw std::invalid_argument(std::string(what) + " line " + std::to_string(lineno) +
                                            ": expected 'k <int>' or 'u <int>' header");
            if (!(ls >> k) || k < 1)
                throw std::invalid_argument(std::string(what) + " line " + std::to_string(lineno) +
                                            ": bad ground set size");
            continue;
        }
        std::array<int, D> e{};
        e[0] = std::stoi(first);
        for (std::size_t t = 1; t < D; ++t)
            if (!(ls >> e[t]))
                throw std::invalid_argument(std::string(what) + " line " + std::to_string(lineno) +
                                            ": expected " + std::to_string(D) + " coordinates");
        int extra;
        if (ls >> extra)
            throw std::invalid_argument(std::string(what) + " line " + std::to_string(lineno) +
                                        ": trailing coordinates");
        edges.push_back(e);
    }
    if (k < 0) throw std::invalid_argument(std::string(what) + ": missing header");
    return {k, std::move(edges)};
}

template <std::size_t D>
std::string format_hypergraph(int k, const char* header,
                              const std::vector<std::array<int, D>>& edges) {
    std::ostringstream os;
    os << header << " " << k << "\n";
    for (const auto& e : edges) {
        for (std::size_t t = 0; t < D; ++t) os << (t ? " " : "") << e[t];
        os << "\n";
    }
    return os.str();
}

}  // namespace

Hypergraph3 parse_hypergraph3(std::istream& in) {
    auto [k, edges] = parse_hypergraph<3>(in, "hypergraph");
    return make_hypergraph3(k, std::move(edges));
}

std::string format_hypergraph3(const Hypergraph3& g) {
    return format_hypergraph<3>(g.k, "k", g.edges);
}

Hypergraph4 parse_hypergraph4(std::istream& in) {
    auto [u, edges] = parse_hypergraph<4>(in, "hypergraph");
    return make_hypergraph4(u, std::move(edges));
}

std::string format_hypergraph4(const Hypergraph4& g) {
    return format_hypergraph<4>(g.u, "u", g.edges);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace symchar
