#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rgglab/geometry.hpp"

namespace rgglab {

struct Neighbor {
    std::uint32_t index;
    double length;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

using VertexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected graph embedded in [0,1]^d with Euclidean edge lengths, stored as CSR.
///
/// Invariants: symmetric adjacency, rows sorted by neighbor index, no self-loops,
/// no duplicate edges, every length equals the Euclidean distance of its endpoints.
class GeometricGraph {
public:
    GeometricGraph() = default;

    /// Builds from an arbitrary pair list: pairs are symmetrized and deduplicated.
    /// Self-loops or out-of-range endpoints throw.
    GeometricGraph(PointSet vertices, std::vector<VertexPair> pairs);

    const PointSet& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return adjacency_.size() / 2; }
    std::size_t dim() const { return vertices_.dim(); }

    std::span<const Neighbor> neighbors(std::size_t v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(std::size_t v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(std::size_t u, std::size_t v) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<VertexPair> edges() const;

    friend bool operator==(const GeometricGraph&, const GeometricGraph&) = default;

private:
    PointSet vertices_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adjacency_;
};

/// Text dump: `d n m`, n lines of d coordinates, m lines `u v` (0-based, u < v).
void write_graph(std::ostream& os, const GeometricGraph& g);
GeometricGraph read_graph(std::istream& is);

/// Shortest round-trip decimal for a double (locale independent).
std::string format_double(double x);

}  // namespace rgglab
