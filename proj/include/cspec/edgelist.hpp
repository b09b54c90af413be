#pragma once

// Edge-list text format: first line "n m", then m lines "u v" with 1-based
// endpoints; lines starting with '#' are comments. serialize() emits the
// canonical form (arcs sorted), so parse -> serialize is bit-exact on
// canonical input.

#include <istream>
#include <sstream>
#include <string>

#include "cspec/digraph.hpp"

namespace cspec {

inline Digraph parse_edge_list(std::istream& in) {
    auto next_data_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_data_line(line)) throw input_error("edge list: missing header line");
    long long n = 0, m = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0) throw input_error("edge list: header must be \"n m\"");
        std::string rest;
        if (hs >> rest) throw input_error("edge list: trailing tokens in header");
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line)) throw input_error("edge list: expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u >> v)) throw input_error("edge list: malformed arc line: " + line);
        std::string rest;
        if (ls >> rest) throw input_error("edge list: trailing tokens in arc line: " + line);
        if (u < 1 || u > n || v < 1 || v > n) throw input_error("edge list: endpoint out of range in line: " + line);
        arcs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (next_data_line(line)) throw input_error("edge list: unexpected extra line: " + line);
    return Digraph::from_arc_list(static_cast<int>(n), std::move(arcs));
}

inline Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string serialize_edge_list(const Digraph& d) {
    std::string out = std::to_string(d.vertex_count()) + " " + std::to_string(d.arc_count()) + "\n";
    for (const auto& [u, v] : d.arcs()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

} // namespace cspec
