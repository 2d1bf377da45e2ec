#include "ndl/io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ndl/errors.hpp"

namespace ndl {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(trim(line));
    return out;
}

int parse_int(const std::string& token, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + ": not an integer: '" + token + "'");
    }
    if (used != token.size())
        throw parse_error(std::string(what) + ": trailing junk in '" + token + "'");
    return value;
}

json parse_json(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw parse_error(std::string(what) + ": invalid JSON");
    return doc;
}

int json_int(const json& v, const char* what) {
    if (!v.is_number_integer())
        throw parse_error(std::string(what) + ": expected an integer");
    return v.get<int>();
}

// graph6 size header
std::string encode_size(long long n) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    return out;
}

}  // namespace

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
    std::vector<std::string> lines = lines_of(text);
    std::size_t at = 0;
    while (at < lines.size() && lines[at].empty()) ++at;
    if (at == lines.size()) throw parse_error("edge list: missing header line");
    std::istringstream head(lines[at]);
    std::string tok_n, tok_m, extra;
    head >> tok_n >> tok_m;
    if (tok_m.empty() || (head >> extra))
        throw parse_error("edge list: header must be 'n <edge-count>'");
    const int n = parse_int(tok_n, "edge list header");
    const int m = parse_int(tok_m, "edge list header");
    if (n < 0 || m < 0) throw parse_error("edge list: negative header value");
    ++at;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i, ++at) {
        while (at < lines.size() && lines[at].empty()) ++at;
        if (at >= lines.size()) throw parse_error("edge list: fewer edge lines than declared");
        std::istringstream row(lines[at]);
        std::string tok_u, tok_v;
        row >> tok_u >> tok_v;
        if (tok_v.empty() || (row >> extra))
            throw parse_error("edge list: malformed line '" + lines[at] + "'");
        const int u = parse_int(tok_u, "edge list");
        const int v = parse_int(tok_v, "edge list");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: vertex out of range on line '" + lines[at] + "'");
        edges.push_back({u, v});
    }
    for (; at < lines.size(); ++at)
        if (!lines[at].empty()) throw parse_error("edge list: more edge lines than declared");
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("edge list: ") + ex.what());
    }
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out = encode_size(n);
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::string data(static_cast<std::size_t>((bits + 5) / 6), 0);
    long long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (g.has_edge(u, v)) data[k / 6] |= static_cast<char>(1 << (5 - k % 6));
    for (char& c : data) c = static_cast<char>(c + 63);
    return out + data;
}

Graph graph_from_graph6(const std::string& text) {
    std::string s = trim(text);
    const std::string prefix = ">>graph6<<";
    if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
    if (s.empty()) throw parse_error("graph6: empty input");
    for (unsigned char c : s)
        if (c < 63 || c > 126)
            throw parse_error("graph6: byte " + std::to_string(int(c)) + " out of range");

    long long n = 0;
    std::size_t pos = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw parse_error("graph6: truncated size header");
        n = (static_cast<long long>(s[1] - 63) << 12) | (static_cast<long long>(s[2] - 63) << 6) |
            static_cast<long long>(s[3] - 63);
        pos = 4;
        if (n < 63) throw parse_error("graph6: non-shortest size header");
    } else {
        if (s.size() < 8) throw parse_error("graph6: truncated size header");
        n = 0;
        for (int i = 2; i < 8; ++i) n = (n << 6) | (s[i] - 63);
        pos = 8;
        if (n < 258048) throw parse_error("graph6: non-shortest size header");
    }
    if (n > 1000000) throw parse_error("graph6: vertex count " + std::to_string(n) + " too large");

    const long long bits = n * (n - 1) / 2;
    const long long want = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != want)
        throw parse_error("graph6: expected " + std::to_string(want) + " data bytes, got " +
                          std::to_string(s.size() - pos));

    std::vector<Edge> edges;
    long long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((s[pos + k / 6] - 63) & (1 << (5 - k % 6))) edges.push_back({u, v});
    for (long long pad = bits; pad < want * 6; ++pad)
        if ((s[pos + pad / 6] - 63) & (1 << (5 - pad % 6)))
            throw parse_error("graph6: nonzero padding bits");
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}}.dump();
}

Graph graph_from_json(const std::string& text) {
    json doc = parse_json(text, "graph json");
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw parse_error("graph json: expected {\"n\": ..., \"edges\": [...]}");
    const int n = json_int(doc["n"], "graph json n");
    if (!doc["edges"].is_array()) throw parse_error("graph json: edges must be an array");
    std::vector<Edge> edges;
    for (const json& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("graph json: each edge must be a pair");
        const int u = json_int(e[0], "graph json edge");
        const int v = json_int(e[1], "graph json edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("graph json: vertex out of range in edge");
        edges.push_back({u, v});
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("graph json: ") + ex.what());
    }
}

std::string to_json(const Tableau& t) {
    json rows = json::array();
    for (const std::vector<int>& row : t.rows()) rows.push_back(row);
    return rows.dump();
}

Tableau tableau_from_json(const std::string& text) {
    json doc = parse_json(text, "tableau json");
    if (!doc.is_array()) throw parse_error("tableau json: expected an array of rows");
    std::vector<std::vector<int>> rows;
    for (const json& r : doc) {
        if (!r.is_array()) throw parse_error("tableau json: each row must be an array");
        std::vector<int> row;
        for (const json& v : r) {
            const int x = json_int(v, "tableau json entry");
            if (x < 0) throw parse_error("tableau json: negative entry");
            row.push_back(x);
        }
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

std::string to_json(const SwitchPath& path) {
    json moves = json::array();
    for (const NSwitch& m : path.moves)
        moves.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}});
    return moves.dump();
}

SwitchPath switch_path_from_json(const std::string& text) {
    json doc = parse_json(text, "switch path json");
    if (!doc.is_array()) throw parse_error("switch path json: expected an array of moves");
    SwitchPath path;
    for (const json& m : doc) {
        if (!m.is_object() || !m.contains("a") || !m.contains("b") || !m.contains("c") ||
            !m.contains("d"))
            throw parse_error("switch path json: each move needs fields a, b, c, d");
        path.moves.push_back({json_int(m["a"], "switch path a"), json_int(m["b"], "switch path b"),
                              json_int(m["c"], "switch path c"), json_int(m["d"], "switch path d")});
    }
    return path;
}

std::string to_deck_text(const Deck& d) {
    std::ostringstream out;
    out << d.size() << '\n';
    for (const Graph& c : d.cards()) out << to_graph6(c) << '\n';
    return out.str();
}

Deck deck_from_text(const std::string& text) {
    std::vector<std::string> lines = lines_of(text);
    std::size_t at = 0;
    while (at < lines.size() && lines[at].empty()) ++at;
    if (at == lines.size()) throw parse_error("deck: missing card count line");
    const int n = parse_int(lines[at], "deck card count");
    if (n < 1) throw parse_error("deck: card count must be positive");
    ++at;
    std::vector<Graph> cards;
    for (int i = 0; i < n; ++i, ++at) {
        while (at < lines.size() && lines[at].empty()) ++at;
        if (at >= lines.size()) throw parse_error("deck: fewer cards than declared");
        cards.push_back(graph_from_graph6(lines[at]));
    }
    for (; at < lines.size(); ++at)
        if (!lines[at].empty()) throw parse_error("deck: more cards than declared");
    return Deck(std::move(cards));
}

}  // namespace ndl
