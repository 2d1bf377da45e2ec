// Command-line front end for the ndl library.
//
// Exit codes: 0 success / affirmative verdict, 1 negative verdict,
// 2 malformed or unusable input, 3 size cap exceeded, 4 neighborhood degree
// lists do not match.  Data goes to stdout, diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndl/errors.hpp"
#include "ndl/graph.hpp"
#include "ndl/graphicality.hpp"
#include "ndl/io.hpp"
#include "ndl/oracle.hpp"
#include "ndl/realization.hpp"
#include "ndl/reconstruction.hpp"
#include "ndl/tableau.hpp"
#include "ndl/uniqueness.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw ndl::parse_error("cannot open file: " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string first_content_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b != std::string::npos) return line;
    }
    throw ndl::parse_error("empty input");
}

bool looks_like_edge_list(const std::string& line) {
    std::istringstream in(line);
    int a = 0;
    int b = 0;
    return static_cast<bool>(in >> a >> b);
}

// Format names: graph6, edges, json (graph object), tableau (row array).
// Empty means sniff by extension, then by content.  graph6 never contains
// digits, so a leading integer pair reliably marks an edge list.
std::string detect_format(const std::string& path, const std::string& content,
                          const std::string& override) {
    if (!override.empty()) return override;
    if (path != "-") {
        if (ends_with(path, ".g6")) return "graph6";
        if (ends_with(path, ".edges")) return "edges";
    }
    const std::string line = first_content_line(content);
    if (line[line.find_first_not_of(" \t")] == '{') return "json";
    if (line[line.find_first_not_of(" \t")] == '[') return "tableau";
    if (looks_like_edge_list(line)) return "edges";
    return "graph6";
}

ndl::Graph parse_graph(const std::string& content, const std::string& format) {
    if (format == "graph6") return ndl::graph_from_graph6(first_content_line(content));
    if (format == "edges") return ndl::graph_from_edge_list(content);
    if (format == "json") return ndl::graph_from_json(content);
    if (format == "tableau")
        throw ndl::parse_error("expected a graph, found a tableau");
    throw ndl::parse_error("unknown format: " + format);
}

ndl::Graph load_graph(const std::string& path, const std::string& override) {
    const std::string content = read_input(path);
    return parse_graph(content, detect_format(path, content, override));
}

ndl::Tableau load_tableau(const std::string& path, const std::string& override) {
    const std::string content = read_input(path);
    const std::string format = detect_format(path, content, override);
    if (format != "tableau" && format != "json")
        throw ndl::parse_error("expected a tableau (JSON array of rows)");
    return ndl::tableau_from_json(content);
}

std::variant<ndl::Graph, ndl::Tableau> load_graph_or_tableau(const std::string& path,
                                                             const std::string& override) {
    const std::string content = read_input(path);
    const std::string format = detect_format(path, content, override);
    if (format == "tableau") return ndl::tableau_from_json(content);
    return parse_graph(content, format);
}

std::string move_json(const ndl::NSwitch& m) {
    return nlohmann::json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}}.dump();
}

int run(int argc, char** argv) {
    CLI::App app{"neighborhood degree list toolkit"};
    app.require_subcommand(1);
    std::string input;
    std::string input2;
    std::string format;
    bool canonical = false;
    bool witness = false;
    int max_n = 6;

    CLI::App* cmd_ndl = app.add_subcommand("ndl", "print the neighborhood degree list of a graph");
    cmd_ndl->add_option("graph", input, "graph file or -")->required();
    cmd_ndl->add_flag("--canonical", canonical, "canonical row order instead of labeled");
    cmd_ndl->add_option("--format", format, "graph6 | edges | json");

    CLI::App* cmd_check = app.add_subcommand("check", "test a tableau for feasibility and graphicality");
    cmd_check->add_option("tableau", input, "tableau file or -")->required();
    cmd_check->add_option("--format", format, "tableau");

    CLI::App* cmd_realize = app.add_subcommand("realize", "construct a realization of a tableau");
    cmd_realize->add_option("tableau", input, "tableau file or -")->required();
    cmd_realize->add_option("--format", format, "tableau");

    CLI::App* cmd_unique = app.add_subcommand("unique", "decide uniqueness of the realization");
    cmd_unique->add_option("input", input, "graph or tableau file, or -")->required();
    cmd_unique->add_flag("--witness", witness, "print an N-switch when not unique");
    cmd_unique->add_option("--format", format, "graph6 | edges | json | tableau");

    CLI::App* cmd_path = app.add_subcommand("switch-path", "N-switch sequence between two realizations");
    cmd_path->add_option("graph-a", input, "graph file or -")->required();
    cmd_path->add_option("graph-b", input2, "graph file")->required();
    cmd_path->add_option("--format", format, "graph6 | edges | json");

    CLI::App* cmd_deck = app.add_subcommand("deck", "print the vertex-deleted deck of a graph");
    cmd_deck->add_option("graph", input, "graph file or -")->required();
    cmd_deck->add_option("--format", format, "graph6 | edges | json");

    CLI::App* cmd_recon = app.add_subcommand("reconstruct", "recover invariants from a deck file");
    cmd_recon->add_option("deck", input, "deck file or -")->required();

    CLI::App* cmd_count = app.add_subcommand("count-realizations", "exhaustively count labeled realizations");
    cmd_count->add_option("tableau", input, "tableau file or -")->required();
    cmd_count->add_option("--max-n", max_n, "largest vertex count to attempt (default 6)");
    cmd_count->add_option("--format", format, "tableau");

    CLI11_PARSE(app, argc, argv);

    if (cmd_ndl->parsed()) {
        ndl::Tableau t = ndl::ndl_of(load_graph(input, format));
        std::cout << ndl::to_json(canonical ? ndl::canonicalize(t) : t) << '\n';
        return 0;
    }
    if (cmd_check->parsed()) {
        ndl::TableauCheck chk = ndl::check_tableau(load_tableau(input, format));
        std::cout << "feasible: " << (chk.feasible ? "yes" : "no") << '\n';
        std::cout << "graphic: " << (chk.graphic ? "yes" : "no") << '\n';
        for (int k : chk.failed_same) std::cout << "class " << k << ": not graphic\n";
        for (const auto& [k, l] : chk.failed_cross)
            std::cout << "cross (" << k << "," << l << "): not bigraphic\n";
        return chk.graphic ? 0 : 1;
    }
    if (cmd_realize->parsed()) {
        ndl::Graph g = ndl::realize_ndl(load_tableau(input, format));
        std::cout << ndl::to_graph6(g) << '\n' << ndl::to_edge_list(g);
        return 0;
    }
    if (cmd_unique->parsed()) {
        auto loaded = load_graph_or_tableau(input, format);
        bool unique = false;
        std::optional<ndl::NSwitch> mv;
        if (std::holds_alternative<ndl::Graph>(loaded)) {
            const ndl::Graph& g = std::get<ndl::Graph>(loaded);
            unique = ndl::is_ndl_unique_graph(g);
            if (!unique && witness) mv = ndl::non_uniqueness_witness(g);
        } else {
            const ndl::Tableau& t = std::get<ndl::Tableau>(loaded);
            unique = ndl::is_ndl_unique_tableau(t);
            if (!unique && witness) mv = ndl::non_uniqueness_witness(ndl::realize_ndl(t));
        }
        std::cout << (unique ? "unique" : "not unique") << '\n';
        if (mv) std::cout << move_json(*mv) << '\n';
        return unique ? 0 : 1;
    }
    if (cmd_path->parsed()) {
        ndl::Graph a = load_graph(input, format);
        ndl::Graph b = load_graph(input2, format);
        if (a.vertex_count() != b.vertex_count())
            throw ndl::mismatch_error("graphs have different vertex counts");
        std::cout << ndl::to_json(ndl::switch_sequence(a, b)) << '\n';
        return 0;
    }
    if (cmd_deck->parsed()) {
        std::cout << ndl::to_deck_text(ndl::deck_of(load_graph(input, format)));
        return 0;
    }
    if (cmd_recon->parsed()) {
        ndl::Deck d = ndl::deck_from_text(read_input(input));
        nlohmann::json out;
        out["edge_count"] = ndl::edge_count_from_deck(d);
        out["degree_sequence"] = ndl::degrees_from_deck(d).sequence;
        out["ndl"] = nlohmann::json::parse(ndl::to_json(ndl::ndl_from_deck(d)));
        std::cout << out.dump() << '\n';
        return 0;
    }
    if (cmd_count->parsed()) {
        ndl::Tableau t = load_tableau(input, format);
        if (t.size() > max_n)
            throw ndl::cap_error("tableau has " + std::to_string(t.size()) +
                                 " rows, over the --max-n limit " + std::to_string(max_n));
        std::cout << ndl::oracle::enumerate_labeled_realizations(t).size() << '\n';
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ndl::cap_error& e) {
        std::cerr << "ndltool: " << e.what() << '\n';
        return 3;
    } catch (const ndl::mismatch_error& e) {
        std::cerr << "ndltool: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "ndltool: " << e.what() << '\n';
        return 2;
    }
}
