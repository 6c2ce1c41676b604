#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rgglab/geometry.hpp"
#include "rgglab/graph.hpp"

namespace rgglab {

struct ComponentLabeling {
    std::vector<std::size_t> label;  // 0..k-1, numbered by first vertex of each component
    std::vector<std::size_t> sizes;  // indexed by label

    std::size_t count() const { return sizes.size(); }
};

ComponentLabeling connected_components(const GeometricGraph& g);

/// n minus the size of the largest component; 0 for connected or empty graphs.
std::size_t largest_component_deficit(const GeometricGraph& g);

/// As above, counting only the vertices flagged in `members` (components are still
/// those of g; unflagged vertices are ignored).
std::size_t largest_component_deficit(const GeometricGraph& g, const std::vector<bool>& members);

struct PathResult {
    double length = 0.0;
    std::vector<std::size_t> path;  // u, ..., v
};

/// Minimum-length path under edge lengths; among shortest paths the lexicographically
/// smallest vertex sequence is returned. nullopt when u and v are disconnected.
std::optional<PathResult> shortest_path(const GeometricGraph& g, std::size_t u, std::size_t v);

/// Graph distances from `source` to each of `targets` (nullopt when unreachable).
/// The search stops once every target is settled.
std::vector<std::optional<double>> distances_to(const GeometricGraph& g, std::size_t source,
                                                std::span<const std::size_t> targets);

/// dist(g, u, v) / denominator; nullopt when disconnected. Throws if denominator <= 0.
std::optional<double> stretch(const GeometricGraph& g, std::size_t u, std::size_t v, double denominator);

/// Closed axis-aligned box [lo, hi].
class AxisBox {
public:
    AxisBox(Point lo, Point hi);
    static AxisBox unit_cube(std::size_t d);

    const Point& lo() const { return lo_; }
    const Point& hi() const { return hi_; }
    std::size_t dim() const { return lo_.dim(); }
    double volume() const;

    /// Closed membership: boundary points are inside.
    bool contains(PointView x) const;
    /// Open-interior membership.
    bool contains_interior(PointView x) const;
    /// Intersection; nullopt when the boxes are disjoint (touching boxes intersect).
    std::optional<AxisBox> intersect(const AxisBox& other) const;
    /// True when the intersection has positive volume.
    bool overlaps_interior(const AxisBox& other) const;

    friend bool operator==(const AxisBox&, const AxisBox&) = default;

private:
    Point lo_;
    Point hi_;
};

struct Restriction {
    GeometricGraph graph;
    std::vector<std::size_t> original_index;  // new vertex -> old vertex
};

/// Subgraph induced by the vertices inside `box` (closed); for a convex box this keeps
/// exactly the edges whose segment lies in the box.
Restriction restrict_to_region(const GeometricGraph& g, const AxisBox& box);

struct OccupancyReport {
    std::size_t cells = 0;
    std::size_t empty_cells = 0;
    std::size_t shifted_cells = 0;
    std::size_t shifted_empty_cells = 0;
};

/// Grid of side eps over [0,1]^d (boundary cells clipped). Counts cells that meet the
/// region's interior and how many of them hold no sample; repeats the count for the grid
/// shifted by eps/2 on every axis, keeping shifted cells that meet a kept base cell.
OccupancyReport tessellation_occupancy(const PointSet& points, std::span<const AxisBox> region, double eps);

}  // namespace rgglab
