#include "eacws/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace eacws {

std::vector<std::vector<std::size_t>> GraphSpec::neighbor_lists() const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& lst : adj) std::sort(lst.begin(), lst.end());
    return adj;
}

GraphSpec ring_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("ring graph requires n >= 3");
    GraphSpec g{"ring", n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        g.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

GraphSpec custom_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    if (n < 1) throw std::invalid_argument("graph requires n >= 1");
    for (auto& [a, b] : edges) {
        if (a >= n || b >= n) throw std::invalid_argument("graph edge endpoint out of range");
        if (a == b) throw std::invalid_argument("graph may not contain loops");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return GraphSpec{"custom", n, std::move(edges)};
}

}  // namespace eacws
