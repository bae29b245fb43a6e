#ifndef PROBESORT_IO_HPP
#define PROBESORT_IO_HPP

#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "probesort/coloring.hpp"
#include "probesort/graph.hpp"
#include "probesort/orientation.hpp"

namespace probesort {

// Text formats, UTF-8, LF newlines. '#' starts a comment line.
//
//   graph:        header "n m", then m lines "u v" with 0 <= u < v < n
//   order:        one line of n vertex ids, position = rank (first = minimum)
//   orientation:  m lines "u v" meaning u -> v, sorted lexicographically
//   coloring:     one line of n colors, the i-th being f(i) >= 1

comparison_graph load_graph(std::istream& in);
void save_graph(std::ostream& out, const comparison_graph& g,
                std::string_view comment = {});

std::vector<int> load_order(std::istream& in, int n);
void save_order(std::ostream& out, std::span<const int> order);

/// Directed pairs as written; u != v and ids < n are enforced, agreement
/// with a graph is the verifier's job.
std::vector<std::pair<int, int>> load_orientation(std::istream& in, int n);
void save_orientation(std::ostream& out, const comparison_graph& g,
                      const orientation_store& o);

coloring load_coloring(std::istream& in, int n);
void save_coloring(std::ostream& out, const coloring& c);

}  // namespace probesort

#endif
