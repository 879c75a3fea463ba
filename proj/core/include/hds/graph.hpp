#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hds/core.hpp"

namespace hds {

/// Simple graph on [n]; edges (i, j) with i < j in strictly increasing order.
struct Graph {
    Int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    friend bool operator==(const Graph&, const Graph&) = default;
};

DegreeSequence graph_degrees(const Graph& g);

// Erdős–Gallai in the two-index form: the total is even and, with d sorted
// non-increasing, sum_{i<=j} d_i - sum_{i>l} d_i <= j(l-1) for all 1<=j<=l<=n.
bool eg_check(const DegreeSequence& d);

// Havel–Hakimi: repeatedly join the vertex of largest residual degree to the
// next largest ones (ties to the lowest index). std::nullopt when d is not
// graphical.
std::optional<Graph> hh_realize(const DegreeSequence& d);

inline constexpr Int kGraphBruteforceMaxN = 7;

// Exhaustive over all 2^C(n,2) graphs. Throws Error{TooLarge} for n > 7.
bool graph_bruteforce(const DegreeSequence& d);

} // namespace hds
