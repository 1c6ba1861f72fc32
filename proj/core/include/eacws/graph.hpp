#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eacws {

// Simple undirected graph on the sender qubits, 0-based vertices.
struct GraphSpec {
    std::string kind;  // "ring" or "custom"
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // a < b, sorted

    std::vector<std::vector<std::size_t>> neighbor_lists() const;
    bool operator==(const GraphSpec&) const = default;
};

// Cycle 0-1-...-(n-1)-0; requires n >= 3.
GraphSpec ring_graph(std::size_t n);
// Validates vertex range and rejects loops; duplicate edges collapse.
GraphSpec custom_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

}  // namespace eacws
