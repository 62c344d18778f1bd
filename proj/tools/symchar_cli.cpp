#include "symchar/characters.hpp"
#include "symchar/io.hpp"
#include "symchar/pipeline.hpp"
#include "symchar/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace symchar;

namespace {

// Accepts either a JSON array of decimal strings or a bare comma list.
Composition parse_composition_arg(const std::string& s) {
    std::string t = s;
    std::size_t b = t.find_first_not_of(" \t");
    if (b != std::string::npos && t[b] == '[')
        return composition_from_json(Json::parse(t));
    Composition c;
    std::istringstream ls(t);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        c.push_back(parse_decimal(tok.substr(tok.find_first_not_of(" \t"),
                                             tok.find_last_not_of(" \t") -
                                                 tok.find_first_not_of(" \t") + 1)));
    }
    return c;
}

Hypergraph3 load_h3(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_hypergraph3(in);
}

Cnf load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in);
}

OneInThree load_oit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_oit(in);
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_circuit(in);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    write_file(path, content);
}

int report_exit(const VerifyReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.text();
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric-group character evaluation and counting reductions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- char ----------------------------------------------------------
    auto* cmd_char = app.add_subcommand("char", "character evaluation and identities");
    cmd_char->require_subcommand(1);

    std::string lambda_arg, mu_arg, method = "both";
    unsigned jt_bound = 8;
    auto* char_eval = cmd_char->add_subcommand("eval", "evaluate chi^lambda at cycle type mu");
    char_eval->add_option("--lambda", lambda_arg, "partition, e.g. '3,2' or JSON")->required();
    char_eval->add_option("--mu", mu_arg, "cycle type")->required();
    char_eval->add_option("--method", method, "mn, jt, or both")
        ->check(CLI::IsMember({"mn", "jt", "both"}));
    char_eval->add_option("--bound", jt_bound, "S_l enumeration bound for jt");
    char_eval->callback([&]() {
        Partition lam = Partition::from_composition(parse_composition_arg(lambda_arg));
        Composition mu = parse_composition_arg(mu_arg);
        if (method == "mn" || method == "both") std::cout << char_mn(lam, mu) << "\n";
        if (method == "jt" || method == "both") {
            CharJtOptions opts;
            opts.max_length = jt_bound;
            Int jt = char_jt(lam, mu, opts);
            if (method == "jt") std::cout << jt << "\n";
            else if (jt != char_mn(lam, mu))
                throw std::runtime_error("evaluator disagreement: jt gave " + to_decimal(jt));
            else std::cout << jt << "\n";
        }
    });

    unsigned table_n = 0;
    auto* char_table = cmd_char->add_subcommand("table", "print the character table of S_n");
    char_table->add_option("--n", table_n, "symmetric group degree")->required();
    char_table->callback([&]() {
        if (table_n > 10) throw std::runtime_error("table bound is n <= 10");
        auto parts = partitions_of(table_n);
        for (const auto& lam : parts) {
            for (std::size_t c = 0; c < parts.size(); ++c)
                std::cout << (c ? " " : "") << char_mn(lam, parts[c].parts());
            std::cout << "\n";
        }
    });

    unsigned id_n = 4;
    std::string which = "rsk";
    auto* char_identity = cmd_char->add_subcommand("identity", "check a classical identity");
    char_identity->add_option("--n", id_n, "symmetric group degree")->required();
    char_identity->add_option("--which", which, "rsk, charsum, burnside, or rowcol")
        ->check(CLI::IsMember({"rsk", "charsum", "burnside", "rowcol"}));
    char_identity->callback([&]() {
        if (id_n > 8) throw std::runtime_error("identity checks are bounded by n <= 8");
        IdentityKind kind = which == "rsk"        ? IdentityKind::Rsk
                            : which == "charsum"  ? IdentityKind::CharSum
                            : which == "burnside" ? IdentityKind::Burnside
                                                  : IdentityKind::RowCol;
        std::exit(report_exit(verify_identity(kind, id_n), format));
    });

    // ---- count ---------------------------------------------------------
    auto* cmd_count = app.add_subcommand("count", "exact counts");
    cmd_count->require_subcommand(1);

    std::string in_path, mode = "memo";
    long pair_i = -1, pair_j = -1;
    std::string pair_rel = "same";
    auto* count_sp = cmd_count->add_subcommand("setpartition", "ordered set partitions");
    count_sp->add_option("file", in_path, "instance JSON {items, bins}")->required();
    count_sp->add_option("--mode", mode, "memo or plain")->check(CLI::IsMember({"memo", "plain"}));
    count_sp->add_option("--pair-i", pair_i, "first item index (0-based)");
    count_sp->add_option("--pair-j", pair_j, "second item index (0-based)");
    count_sp->add_option("--pair", pair_rel, "same or split")->check(CLI::IsMember({"same", "split"}));
    count_sp->callback([&]() {
        SetPartitionInstance inst = setpartition_from_json(Json::parse(read_file(in_path)));
        CountMode m = mode == "plain" ? CountMode::Backtrack : CountMode::Memo;
        if (pair_i >= 0 || pair_j >= 0) {
            if (pair_i < 0 || pair_j < 0) throw std::runtime_error("need both --pair-i and --pair-j");
            std::cout << count_with_fixed_pair(inst, static_cast<std::size_t>(pair_i),
                                               static_cast<std::size_t>(pair_j),
                                               pair_rel == "same", m)
                      << "\n";
        } else {
            std::cout << count_ordered_partitions(inst, m) << "\n";
        }
    });

    std::string file3, file4, satfile, cnffile, oitfile;
    unsigned sat_bound = 20, var_bound = 4096;
    auto* count_3 = cmd_count->add_subcommand("3dm", "perfect matchings of a 3-dim hypergraph");
    count_3->add_option("file", file3)->required();
    count_3->callback([&]() { std::cout << count_3dm(load_h3(file3)) << "\n"; });
    auto* count_4 = cmd_count->add_subcommand("4dm", "perfect matchings of a 4-dim hypergraph");
    count_4->add_option("file", file4)->required();
    count_4->callback([&]() {
        std::ifstream in(file4);
        if (!in) throw std::runtime_error("cannot open " + file4);
        std::cout << count_4dm(parse_hypergraph4(in)) << "\n";
    });
    auto* count_sat = cmd_count->add_subcommand("sat", "circuit model count");
    count_sat->add_option("file", satfile)->required();
    count_sat->add_option("--bound", sat_bound, "max inputs");
    count_sat->callback([&]() { std::cout << count_circuit_sat(load_circuit(satfile), sat_bound) << "\n"; });
    auto* count_c = cmd_count->add_subcommand("cnf", "CNF model count");
    count_c->add_option("file", cnffile)->required();
    count_c->add_option("--bound", var_bound, "max variables");
    count_c->callback([&]() { std::cout << count_cnf(load_cnf(cnffile), var_bound) << "\n"; });
    auto* count_o = cmd_count->add_subcommand("oit", "one-in-three model count");
    count_o->add_option("file", oitfile)->required();
    count_o->add_option("--bound", var_bound, "max variables");
    count_o->callback([&]() { std::cout << count_one_in_three(load_oit(oitfile), var_bound) << "\n"; });

    // ---- reduce --------------------------------------------------------
    auto* cmd_reduce = app.add_subcommand("reduce", "instance transformations");
    cmd_reduce->require_subcommand(1);
    std::string in_a, in_b, out_path;

    auto* red_tseytin = cmd_reduce->add_subcommand("tseytin", "circuit -> 3CNF (DIMACS)");
    red_tseytin->add_option("circuit", in_a)->required();
    red_tseytin->add_option("out", out_path, "output path, '-' for stdout");
    red_tseytin->callback([&]() { emit(out_path, format_dimacs(tseytin(load_circuit(in_a)))); });

    auto* red_oit = cmd_reduce->add_subcommand("oit", "3CNF -> one-in-three");
    red_oit->add_option("cnf", in_a)->required();
    red_oit->add_option("out", out_path);
    red_oit->callback([&]() { emit(out_path, format_oit(to_one_in_three(load_cnf(in_a)))); });

    auto* red_3dm = cmd_reduce->add_subcommand("3dm", "one-in-three -> 3DM");
    red_3dm->add_option("oit", in_a)->required();
    red_3dm->add_option("out", out_path);
    red_3dm->callback([&]() { emit(out_path, format_hypergraph3(one_in_three_to_3dm(load_oit(in_a)))); });

    auto* red_join = cmd_reduce->add_subcommand("join", "two 3DM files -> join JSON");
    red_join->add_option("e", in_a)->required();
    red_join->add_option("e_prime", in_b)->required();
    red_join->add_option("out", out_path);
    red_join->callback([&]() {
        emit(out_path, to_json(join(load_h3(in_a), load_h3(in_b))).dump(2) + "\n");
    });

    auto* red_gadget = cmd_reduce->add_subcommand("gadget", "join JSON -> gadget JSON");
    red_gadget->add_option("join", in_a)->required();
    red_gadget->add_option("out", out_path);
    red_gadget->callback([&]() {
        JoinResult jr = join_result_from_json(Json::parse(read_file(in_a)));
        emit(out_path, to_json(build_gadget(jr)).dump(2) + "\n");
    });

    auto* red_modify = cmd_reduce->add_subcommand("modify", "join JSON -> modified instance JSON");
    red_modify->add_option("join", in_a)->required();
    red_modify->add_option("out", out_path);
    red_modify->callback([&]() {
        JoinResult jr = join_result_from_json(Json::parse(read_file(in_a)));
        GadgetInstance g = build_gadget(jr);
        ModifiedInstance mod = modify_gadget(g);
        Json j;
        j["c"] = to_json(mod.c);
        j["d"] = to_json(mod.d);
        j["d_bar"] = to_json(mod.d_bar);
        j["d_bar_prime"] = to_json(mod.d_bar_prime);
        j["delta"] = to_decimal(g.delta);
        emit(out_path, j.dump(2) + "\n");
    });

    auto* red_ci = cmd_reduce->add_subcommand("charinstance", "(c,d) JSON arrays -> character instance");
    red_ci->add_option("c", in_a, "JSON array file")->required();
    red_ci->add_option("d", in_b, "JSON array file")->required();
    red_ci->add_option("out", out_path);
    red_ci->callback([&]() {
        CharInstance ci = char_instance_diff(composition_from_json(Json::parse(read_file(in_a))),
                                             composition_from_json(Json::parse(read_file(in_b))));
        emit(out_path, to_json(ci).dump(2) + "\n");
    });

    auto* red_pars = cmd_reduce->add_subcommand("parsimonious", "(a,b) JSON arrays -> character instance");
    red_pars->add_option("a", in_a)->required();
    red_pars->add_option("b", in_b)->required();
    red_pars->add_option("out", out_path);
    red_pars->callback([&]() {
        CharInstance ci = parsimonious_encode(composition_from_json(Json::parse(read_file(in_a))),
                                              composition_from_json(Json::parse(read_file(in_b))));
        emit(out_path, to_json(ci).dump(2) + "\n");
    });

    auto* red_pipe = cmd_reduce->add_subcommand("pipeline", "two 3DM files -> character instance");
    red_pipe->add_option("e", in_a)->required();
    red_pipe->add_option("e_prime", in_b)->required();
    red_pipe->add_option("out", out_path);
    red_pipe->callback([&]() {
        PipelineResult res = reduce_matching_pair(load_h3(in_a), load_h3(in_b));
        emit(out_path, to_json(res.char_instance, &res.delta).dump(2) + "\n");
    });

    // ---- verify --------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "cross-checked verification harnesses");
    cmd_verify->require_subcommand(1);
    std::uint64_t seed = 1;
    unsigned count_arg = 25, bound_arg = 12, ident_max_n = 6;

    auto* ver_pipe = cmd_verify->add_subcommand("pipeline", "stage-by-stage chain verification");
    ver_pipe->add_option("e", in_a)->required();
    ver_pipe->add_option("e_prime", in_b)->required();
    ver_pipe->add_option("--bound", bound_arg, "max |J| for brute-force stages");
    ver_pipe->callback([&]() {
        VerifyOptions opts;
        opts.max_join_edges = bound_arg;
        std::exit(report_exit(verify_pipeline(load_h3(in_a), load_h3(in_b), opts), format));
    });

    auto* ver_pars = cmd_verify->add_subcommand("parsimony", "random circuits through the chain");
    ver_pars->add_option("--seed", seed, "RNG seed");
    ver_pars->add_option("--count", count_arg, "number of instances");
    ver_pars->callback([&]() { std::exit(report_exit(verify_parsimony(seed, count_arg), format)); });

    auto* ver_id = cmd_verify->add_subcommand("identities", "classical identities up to a bound");
    ver_id->add_option("--max-n", ident_max_n, "check all n up to this bound (<= 8)");
    ver_id->callback([&]() {
        if (ident_max_n > 8) throw std::runtime_error("identity checks are bounded by n <= 8");
        VerifyReport all;
        for (unsigned n = 0; n <= ident_max_n; ++n)
            for (IdentityKind kind : {IdentityKind::Rsk, IdentityKind::CharSum,
                                      IdentityKind::Burnside, IdentityKind::RowCol}) {
                if (kind == IdentityKind::RowCol && n > 7) continue;
                VerifyReport rep = verify_identity(kind, n);
                for (auto& s : rep.stages) {
                    s.stage = "n=" + std::to_string(n) + " " + s.stage;
                    all.stages.push_back(s);
                }
            }
        std::exit(report_exit(all, format));
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
