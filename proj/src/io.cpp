#include "probesort/io.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "probesort/errors.hpp"

namespace probesort {

namespace {

// Pulls the next line that carries data, skipping blank and '#' lines.
// Returns false at end of stream; `line_no` tracks the physical line.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

int parse_int_token(std::istringstream& iss, const char* what, int line_no) {
    long long value;
    if (!(iss >> value)) {
        throw parse_error(std::string("expected ") + what, line_no);
    }
    if (value < INT32_MIN || value > INT32_MAX) {
        throw parse_error(std::string(what) + " out of range", line_no);
    }
    return static_cast<int>(value);
}

void expect_line_end(std::istringstream& iss, int line_no) {
    std::string rest;
    if (iss >> rest) {
        throw parse_error("unexpected trailing token '" + rest + "'", line_no);
    }
}

}  // namespace

comparison_graph load_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_data_line(in, line, line_no)) {
        throw parse_error("missing header line \"n m\"");
    }
    std::istringstream header(line);
    const int n = parse_int_token(header, "vertex count", line_no);
    const int m = parse_int_token(header, "edge count", line_no);
    expect_line_end(header, line_no);
    if (n < 1) throw parse_error("vertex count must be at least 1", line_no);
    if (m < 0) throw parse_error("edge count must be non-negative", line_no);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    std::vector<char> seen;  // duplicate detection with line attribution
    const bool dense_check = n <= 8192;
    if (dense_check) seen.assign(static_cast<std::size_t>(n) * n, 0);

    for (int k = 0; k < m; ++k) {
        if (!next_data_line(in, line, line_no)) {
            throw parse_error("expected " + std::to_string(m) + " edges, got " +
                              std::to_string(k));
        }
        std::istringstream row(line);
        const int u = parse_int_token(row, "vertex id", line_no);
        const int v = parse_int_token(row, "vertex id", line_no);
        expect_line_end(row, line_no);
        if (u == v) throw self_loop("self loop at vertex " + std::to_string(u), line_no);
        if (u < 0 || v >= n || u >= v) {
            throw parse_error("edge must satisfy 0 <= u < v < n, got " +
                                  std::to_string(u) + " " + std::to_string(v),
                              line_no);
        }
        if (dense_check) {
            char& slot = seen[static_cast<std::size_t>(u) * n + v];
            if (slot) {
                throw duplicate_edge("duplicate edge {" + std::to_string(u) + "," +
                                         std::to_string(v) + "}",
                                     line_no);
            }
            slot = 1;
        }
        edges.emplace_back(u, v);
    }
    if (next_data_line(in, line, line_no)) {
        throw parse_error("unexpected data after " + std::to_string(m) + " edges",
                          line_no);
    }
    return comparison_graph(n, std::move(edges));
}

void save_graph(std::ostream& out, const comparison_graph& g,
                std::string_view comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<int> load_order(std::istream& in, int n) {
    std::string line;
    int line_no = 0;
    if (!next_data_line(in, line, line_no)) {
        throw parse_error("missing order line");
    }
    std::istringstream row(line);
    std::vector<int> order;
    order.reserve(n);
    for (int i = 0; i < n; ++i) {
        order.push_back(parse_int_token(row, "vertex id", line_no));
    }
    expect_line_end(row, line_no);
    if (next_data_line(in, line, line_no)) {
        throw parse_error("unexpected data after the order line", line_no);
    }
    // ground_truth validates that this is a permutation; do it here so the
    // caller gets a line-free message from one place
    std::vector<char> used(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n) {
            throw parse_error("order entry " + std::to_string(v) + " out of range");
        }
        if (used[v]) {
            throw parse_error("vertex " + std::to_string(v) + " appears twice in order");
        }
        used[v] = 1;
    }
    return order;
}

void save_order(std::ostream& out, std::span<const int> order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
        out << (i ? " " : "") << order[i];
    }
    out << "\n";
}

std::vector<std::pair<int, int>> load_orientation(std::istream& in, int n) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, int>> directed;
    while (next_data_line(in, line, line_no)) {
        std::istringstream row(line);
        const int u = parse_int_token(row, "vertex id", line_no);
        const int v = parse_int_token(row, "vertex id", line_no);
        expect_line_end(row, line_no);
        if (u == v) throw self_loop("self loop at vertex " + std::to_string(u), line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw parse_error("vertex id out of range [0," + std::to_string(n) + ")",
                              line_no);
        }
        directed.emplace_back(u, v);
    }
    return directed;
}

void save_orientation(std::ostream& out, const comparison_graph& g,
                      const orientation_store& o) {
    for (auto [u, v] : o.directed_edges(g)) out << u << " " << v << "\n";
}

coloring load_coloring(std::istream& in, int n) {
    std::string line;
    int line_no = 0;
    if (!next_data_line(in, line, line_no)) {
        throw parse_error("missing coloring line");
    }
    std::istringstream row(line);
    coloring c;
    c.color.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int f = parse_int_token(row, "color", line_no);
        if (f < 1) throw parse_error("colors must be positive", line_no);
        c.color.push_back(f);
        c.num_colors = std::max(c.num_colors, f);
    }
    expect_line_end(row, line_no);
    if (next_data_line(in, line, line_no)) {
        throw parse_error("unexpected data after the coloring line", line_no);
    }
    return c;
}

void save_coloring(std::ostream& out, const coloring& c) {
    for (std::size_t i = 0; i < c.color.size(); ++i) {
        out << (i ? " " : "") << c.color[i];
    }
    out << "\n";
}

}  // namespace probesort
