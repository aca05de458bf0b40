#include "sgt/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sgt {

std::string to_text(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return out.str();
}

namespace {

// Strip comments, return whitespace-split tokens with their line numbers.
std::vector<std::pair<std::string, int>> tokenize(std::istream& in) {
    std::vector<std::pair<std::string, int>> toks;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.emplace_back(t, lineno);
    }
    return toks;
}

int parse_int(const std::pair<std::string, int>& tok, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok.first, &pos);
        if (pos != tok.first.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw FormatError("line " + std::to_string(tok.second) + ": bad " +
                          what + " '" + tok.first + "'");
    }
}

}  // namespace

SignedGraph from_text_stream(std::istream& in) {
    auto toks = tokenize(in);
    size_t i = 0;
    auto next = [&](const char* what) -> const std::pair<std::string, int>& {
        if (i >= toks.size())
            throw FormatError(std::string("unexpected end of input, wanted ") +
                              what);
        return toks[i++];
    };
    int n = parse_int(next("vertex count"), "vertex count");
    int m = parse_int(next("edge count"), "edge count");
    if (m < 0) throw FormatError("negative edge count");
    std::vector<SignedEdge> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        int u = parse_int(next("edge endpoint"), "edge endpoint");
        int v = parse_int(next("edge endpoint"), "edge endpoint");
        const auto& st = next("edge sign");
        int s;
        if (st.first == "+")
            s = +1;
        else if (st.first == "-")
            s = -1;
        else
            throw FormatError("line " + std::to_string(st.second) +
                              ": bad edge sign '" + st.first + "'");
        if (u >= v)
            throw FormatError("line " + std::to_string(st.second) +
                              ": edge endpoints must satisfy u < v");
        edges.push_back({u, v, s});
    }
    if (i != toks.size())
        throw FormatError("line " + std::to_string(toks[i].second) +
                          ": trailing content '" + toks[i].first + "'");
    try {
        return SignedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

SignedGraph from_text(const std::string& text) {
    std::istringstream in(text);
    return from_text_stream(in);
}

std::string to_json_text(const SignedGraph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({e.u, e.v, e.sign});
    return j.dump(2) + "\n";
}

SignedGraph from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw FormatError("JSON graph must be {\"n\":..., \"edges\":[...]}");
    std::vector<SignedEdge> edges;
    try {
        int n = j["n"].get<int>();
        for (const auto& t : j["edges"]) {
            if (!t.is_array() || t.size() != 3)
                throw FormatError("each edge must be [u, v, sign]");
            edges.push_back(
                {t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
        }
        return SignedGraph(n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad JSON graph: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

SignedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return from_json_text(buf.str());
    return from_text(buf.str());
}

void write_graph_file(const SignedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        out << to_json_text(g);
    else
        out << to_text(g);
    if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace sgt
