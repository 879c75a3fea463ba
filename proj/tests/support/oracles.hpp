#pragma once

// Test-only reference computations. These go through the 0/1 incidence-vector
// view or plain enumeration and share no code path with the library routines
// they check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hds/core.hpp"

namespace hds::testing {

inline std::vector<std::vector<Int>> all_incidence_vectors(Int n) {
    std::vector<std::vector<Int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != 3) continue;
        std::vector<Int> x(static_cast<std::size_t>(n), 0);
        for (Int v = 0; v < n; ++v) x[v] = (mask >> v) & 1u;
        out.push_back(std::move(x));
    }
    // Lexicographic order on index triples is reverse order on the 0/1 vectors.
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline Int inner(const std::vector<Int>& u, const std::vector<Int>& v) {
    Int s = 0;
    for (std::size_t t = 0; t < u.size(); ++t) s += u[t] * v[t];
    return s;
}

inline std::vector<Int> vector_sum(const std::vector<std::vector<Int>>& vs, Int n) {
    std::vector<Int> s(static_cast<std::size_t>(n), 0);
    for (const auto& v : vs)
        for (std::size_t t = 0; t < v.size(); ++t) s[t] += v[t];
    return s;
}

inline Triple to_triple(const std::vector<Int>& x) {
    std::vector<Vertex> idx;
    for (std::size_t v = 0; v < x.size(); ++v)
        if (x[v]) idx.push_back(static_cast<Vertex>(v));
    return {idx[0], idx[1], idx[2]};
}

/// Exhaustive simple-graph search by recursion over vertex pairs, independent
/// of the library's bitmask oracle.
inline bool graphical_by_search(std::vector<Int> d, Int u = 0, Int v = 1) {
    const Int n = static_cast<Int>(d.size());
    if (u >= n - 1 || n < 2) return std::all_of(d.begin(), d.end(), [](Int x) { return x == 0; });
    if (v >= n) {
        if (d[u] != 0) return false;
        return graphical_by_search(d, u + 1, u + 2);
    }
    if (d[u] > 0 && d[v] > 0) {
        --d[u];
        --d[v];
        if (graphical_by_search(d, u, v + 1)) return true;
        ++d[u];
        ++d[v];
    }
    return graphical_by_search(d, u, v + 1);
}

} // namespace hds::testing
