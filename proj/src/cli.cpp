#include "turan/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/enumerate.hpp"
#include "turan/formula.hpp"
#include "turan/graph6.hpp"
#include "turan/packing.hpp"

namespace turan::cli {

namespace {

int cmd_value(std::int64_t n, std::int64_t k, std::ostream& out) {
    out << regime_name(regime(n, k)) << ' ' << ex_kp3(n, k) << '\n';
    return 0;
}

int cmd_construct(std::int64_t n, std::int64_t k, const std::string& format, std::ostream& out) {
    ExtremalFamily family = extremal_graphs(n, k);
    if (family.graphs.empty())
        throw std::invalid_argument("order too large to realize graphs (limit " +
                                    std::to_string(Graph::max_vertices) + ")");
    bool first = true;
    for (const Graph& g : family.graphs) {
        if (format == "graph6") {
            out << encode_graph6(g) << '\n';
        } else {
            if (!first) out << '\n';
            for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
        }
        first = false;
    }
    return 0;
}

int cmd_pack(int k, const std::string& input, std::istream& in, std::ostream& out) {
    std::string line;
    if (input.empty() || input == "-") {
        if (!std::getline(in, line)) throw std::invalid_argument("no graph6 input on stdin");
    } else {
        std::ifstream file(input);
        if (!file) throw std::invalid_argument("cannot open input file: " + input);
        if (!std::getline(file, line)) throw std::invalid_argument("no graph6 input in file: " + input);
    }
    Graph g = decode_graph6(line);
    auto witness = contains_k_p3(g, k);
    if (!witness) {
        out << "no\n";
        return 1;
    }
    out << "yes\n";
    for (const PathTriple& t : *witness) out << t.x << ' ' << t.y << ' ' << t.z << '\n';
    return 0;
}

int cmd_verify(int n, int k, int jobs, bool as_json, std::ostream& out) {
    VerificationReport report = verify_turan(n, k, jobs);
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["n"] = report.n;
        doc["k"] = report.k;
        doc["regime"] = regime_name(regime(n, k));
        doc["formula_value"] = report.formula_value;
        doc["observed_max"] = report.observed_max;
        doc["extremal_graph6"] = nlohmann::ordered_json::array();
        for (const CanonicalForm& f : report.extremal_forms) doc["extremal_graph6"].push_back(f.bytes);
        doc["agree"] = report.agree;
        doc["graphs_scanned"] = report.graphs_scanned;
        doc["elapsed_ms"] = report.elapsed_ms;
        out << doc.dump() << '\n';
    } else {
        out << "n " << report.n << '\n';
        out << "k " << report.k << '\n';
        out << "regime " << regime_name(regime(n, k)) << '\n';
        out << "formula_value " << report.formula_value << '\n';
        out << "observed_max " << report.observed_max << '\n';
        for (const CanonicalForm& f : report.extremal_forms) out << "extremal_graph6 " << f.bytes << '\n';
        out << "agree " << (report.agree ? "true" : "false") << '\n';
        out << "graphs_scanned " << report.graphs_scanned << '\n';
        out << "elapsed_ms " << report.elapsed_ms << '\n';
    }
    return report.agree ? 0 : 1;
}

int cmd_lemmas(int n, int k, bool as_json, std::ostream& out) {
    LemmaSweepReport report = verify_lemmas(n, k);
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["n"] = report.n;
        doc["k"] = report.k;
        doc["graphs_scanned"] = report.graphs_scanned;
        doc["applicable"] = report.applicable;
        doc["checked_edgeless"] = report.checked_edgeless;
        doc["checked_one_edge"] = report.checked_one_edge;
        doc["checked_many_edges"] = report.checked_many_edges;
        doc["skipped"] = report.skipped;
        doc["violations"] = nlohmann::ordered_json::array();
        for (const LemmaSweepViolation& v : report.violations) {
            nlohmann::ordered_json item;
            item["graph6"] = v.graph6;
            item["lemma"] = lemma_name(v.lemma);
            item["path_index"] = v.detail.triple_index;
            item["vertices"] = v.detail.vertices;
            item["observed"] = v.detail.observed;
            item["allowed"] = v.detail.allowed;
            doc["violations"].push_back(item);
        }
        doc["elapsed_ms"] = report.elapsed_ms;
        out << doc.dump() << '\n';
    } else {
        out << "n " << report.n << '\n';
        out << "k " << report.k << '\n';
        out << "graphs_scanned " << report.graphs_scanned << '\n';
        out << "applicable " << report.applicable << '\n';
        out << "checked_edgeless " << report.checked_edgeless << '\n';
        out << "checked_one_edge " << report.checked_one_edge << '\n';
        out << "checked_many_edges " << report.checked_many_edges << '\n';
        out << "skipped " << report.skipped << '\n';
        for (const LemmaSweepViolation& v : report.violations) {
            out << "violation " << v.graph6 << ' ' << lemma_name(v.lemma) << " path " << v.detail.triple_index
                << " observed " << v.detail.observed << " allowed " << v.detail.allowed << '\n';
        }
        out << "violations " << report.violations.size() << '\n';
        out << "elapsed_ms " << report.elapsed_ms << '\n';
    }
    return report.violations.empty() ? 0 : 1;
}

int cmd_bounds(std::int64_t n, std::int64_t k, std::ostream& out) {
    GorgolBounds lb = gorgol_lower_bounds(n, k);
    std::int64_t value = ex_kp3(n, k);
    out << "erdos_gallai_p3 " << erdos_gallai_bound(n, 3) << '\n';
    out << "gorgol_clique " << lb.clique_side << '\n';
    out << "gorgol_hub " << lb.hub_side << '\n';
    const char* attained = lb.clique_side == lb.hub_side ? "both"
                           : lb.clique_side > lb.hub_side ? "clique"
                                                          : "hub";
    out << "attained " << attained << '\n';
    out << "ex " << value << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Turan numbers, extremal graphs and packing checks for disjoint 3-vertex paths"};
    app.require_subcommand(1);

    std::int64_t n = 0, k = 0;
    int jobs = 1;
    bool as_json = false;
    std::string format = "graph6";
    std::string input;

    auto* value = app.add_subcommand("value", "print the regime and ex(n, k*P3)");
    value->add_option("--n", n)->required();
    value->add_option("--k", k)->required();

    auto* construct = app.add_subcommand("construct", "print every extremal graph");
    construct->add_option("--n", n)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* pack = app.add_subcommand("pack", "test one graph6 graph for k disjoint paths");
    pack->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    pack->add_option("--input", input, "graph6 file, or - for stdin");

    auto* verify = app.add_subcommand("verify", "exhaustively verify one (n, k) instance");
    verify->add_option("--n", n)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json);

    auto* lemmas = app.add_subcommand("lemmas", "sweep the leftover lemmas over all free graphs");
    lemmas->add_option("--n", n)->required();
    lemmas->add_option("--k", k)->required();
    lemmas->add_flag("--json", as_json);

    auto* bounds = app.add_subcommand("bounds", "print the classical bounds for (n, k)");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--k", k)->required();

    std::vector<const char*> argv;
    argv.push_back("turan");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (value->parsed()) return cmd_value(n, k, out);
        if (construct->parsed()) return cmd_construct(n, k, format, out);
        if (pack->parsed()) return cmd_pack(static_cast<int>(k), input, in, out);
        if (verify->parsed()) return cmd_verify(static_cast<int>(n), static_cast<int>(k), jobs, as_json, out);
        if (lemmas->parsed()) return cmd_lemmas(static_cast<int>(n), static_cast<int>(k), as_json, out);
        if (bounds->parsed()) return cmd_bounds(n, k, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace turan::cli
