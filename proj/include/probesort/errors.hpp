#ifndef PROBESORT_ERRORS_HPP
#define PROBESORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace probesort {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vertex id is outside [0, n).
struct invalid_vertex : error {
    using error::error;
};

/// A probe was requested for a pair that is not an edge of G.
struct forbidden_pair : error {
    using error::error;
};

/// Malformed input file. `line` is 1-based, 0 when not applicable.
struct parse_error : error {
    int line;
    parse_error(const std::string& msg, int line_no = 0)
        : error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

struct duplicate_edge : parse_error {
    using parse_error::parse_error;
};

struct self_loop : parse_error {
    using parse_error::parse_error;
};

/// A coloring handed to color_solve is not proper for the forbidden graph.
struct invalid_coloring : error {
    using error::error;
};

/// A caller-side contract was broken (sizes, missing orientations, ...).
struct precondition_violated : error {
    using error::error;
};

/// The clique bound k underestimates the true requirement; callers may
/// retry with a larger k.
struct k_too_small : error {
    using error::error;
};

/// The two survivor sets of a pivot computation do not intersect.
struct empty_intersection : error {
    using error::error;
};

/// Exact routine invoked above its size cap.
struct too_large : error {
    using error::error;
};

/// Nuts-and-bolts instances need an even vertex count.
struct odd_n : error {
    using error::error;
};

/// A proven property failed at runtime; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

}  // namespace probesort

#endif
