#include "hds/graph.hpp"

#include <algorithm>
#include <functional>

namespace hds {

DegreeSequence graph_degrees(const Graph& g) {
    std::vector<Int> d(static_cast<std::size_t>(g.n), 0);
    for (auto [i, j] : g.edges) {
        if (i < 0 || j <= i || j >= g.n) {
            throw Error(ErrorKind::InvalidArgument, "graph edge out of range");
        }
        ++d[i];
        ++d[j];
    }
    return DegreeSequence(std::move(d));
}

bool eg_check(const DegreeSequence& d) {
    if (d.total() % 2 != 0) return false;

    std::vector<Int> s(d.values().begin(), d.values().end());
    std::sort(s.begin(), s.end(), std::greater<>());
    const Int n = static_cast<Int>(s.size());

    // prefix[t] = s_1 + ... + s_t (1-based), so the tail sum past l is
    // prefix[n] - prefix[l].
    std::vector<Int> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (Int t = 0; t < n; ++t) prefix[t + 1] = checked_add(prefix[t], s[t]);

    for (Int j = 1; j <= n; ++j) {
        for (Int l = j; l <= n; ++l) {
            const Int lhs = prefix[j] - (prefix[n] - prefix[l]);
            if (lhs > checked_mul(j, l - 1)) return false;
        }
    }
    return true;
}

std::optional<Graph> hh_realize(const DegreeSequence& d) {
    const Int n = d.size();
    std::vector<Int> residual(d.values().begin(), d.values().end());
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    Graph g{n, {}};

    auto by_residual = [&](Vertex a, Vertex b) {
        if (residual[a] != residual[b]) return residual[a] > residual[b];
        return a < b;
    };

    while (true) {
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), by_residual);
        if (n == 0 || residual[order[0]] == 0) break;

        const Vertex hub = order[0];
        const Int need = residual[hub];
        if (need > n - 1) return std::nullopt;
        for (Int t = 1; t <= need; ++t) {
            const Vertex u = order[t];
            if (residual[u] == 0) return std::nullopt;
            --residual[u];
            g.edges.emplace_back(std::min(hub, u), std::max(hub, u));
        }
        residual[hub] = 0;
    }

    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool graph_bruteforce(const DegreeSequence& d) {
    const Int n = d.size();
    if (n > kGraphBruteforceMaxN) {
        throw Error(ErrorKind::TooLarge, "graph brute force limited to n <= 7");
    }
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    const std::uint32_t subsets = 1u << slots.size();
    std::vector<Int> deg(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (std::size_t e = 0; e < slots.size(); ++e) {
            if (mask & (1u << e)) {
                ++deg[slots[e].first];
                ++deg[slots[e].second];
            }
        }
        if (std::equal(deg.begin(), deg.end(), d.values().begin())) return true;
    }
    return false;
}

} // namespace hds
