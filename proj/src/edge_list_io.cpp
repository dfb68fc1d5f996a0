#include "dirdiam/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dirdiam {

namespace detail {

bool next_record(std::istream &in, std::vector<std::string> &tokens,
                 std::vector<std::string> *comments) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        if (line[first] == '#') {
            if (comments != nullptr) {
                std::string body = line.substr(first + 1);
                if (!body.empty() && body.back() == '\r') {
                    body.pop_back();
                }
                comments->push_back(std::move(body));
            }
            continue;
        }
        tokens.clear();
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            tokens.push_back(tok);
        }
        return true;
    }
    return false;
}

std::uint64_t parse_unsigned(const std::string &token, const char *what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(std::string("bad ") + what + ": '" + token + "'");
    }
    return value;
}

std::int64_t parse_signed(const std::string &token, const char *what) {
    std::int64_t value = 0;
    const char *begin = token.data();
    if (!token.empty() && token[0] == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(std::string("bad ") + what + ": '" + token + "'");
    }
    return value;
}

} // namespace detail

DirectedGraph read_edge_list(std::istream &in, std::vector<std::string> *comments) {
    std::vector<std::string> tok;
    if (!detail::next_record(in, tok, comments)) {
        throw ParseError("missing edge-list header");
    }
    if (tok.size() != 3 || (tok[2] != "w" && tok[2] != "u")) {
        throw ParseError("edge-list header must be 'n m w|u'");
    }
    std::uint64_t n = detail::parse_unsigned(tok[0], "vertex count");
    std::uint64_t m = detail::parse_unsigned(tok[1], "edge count");
    bool weighted = tok[2] == "w";
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!detail::next_record(in, tok, comments)) {
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        }
        if (tok.size() != (weighted ? 3u : 2u)) {
            throw ParseError("malformed edge line " + std::to_string(i + 1));
        }
        std::uint64_t u = detail::parse_unsigned(tok[0], "vertex id");
        std::uint64_t v = detail::parse_unsigned(tok[1], "vertex id");
        if (u >= n || v >= n) {
            throw ParseError("vertex id out of range on edge line " + std::to_string(i + 1));
        }
        Weight w = weighted ? detail::parse_signed(tok[2], "weight") : 1;
        if (w < 0) {
            throw ParseError("negative weight on edge line " + std::to_string(i + 1));
        }
        edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
    if (detail::next_record(in, tok, comments)) {
        throw ParseError("trailing data after " + std::to_string(m) + " edges");
    }
    return DirectedGraph(n, std::move(edges));
}

void write_edge_list(std::ostream &out, const DirectedGraph &g,
                     const std::vector<std::string> &comments) {
    bool weighted = g.weighted();
    out << g.num_vertices() << ' ' << g.num_edges() << ' ' << (weighted ? 'w' : 'u') << '\n';
    for (const std::string &c : comments) {
        out << '#' << c << '\n';
    }
    for (const Edge &e : g.edges()) {
        out << e.source << ' ' << e.target;
        if (weighted) {
            out << ' ' << e.weight;
        }
        out << '\n';
    }
}

DirectedGraph read_edge_list_file(const std::string &path, std::vector<std::string> *comments) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return read_edge_list(in, comments);
}

void write_edge_list_file(const std::string &path, const DirectedGraph &g,
                          const std::vector<std::string> &comments) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open " + path + " for writing");
    }
    write_edge_list(out, g, comments);
}

} // namespace dirdiam
