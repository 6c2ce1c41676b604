#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rgglab/geometry.hpp"

namespace rgglab {

/// Uniform bucket grid over [0,1]^d. A point's cell is floor(coord / h) per axis.
///
/// Queries scan the (2m+1)^d block of cells around the query cell, m = ceil(r / h),
/// or, when that block is larger than the set of occupied cells, walk the occupied
/// cells directly. Either way the result is exact for any radius.
class GridIndex {
public:
    /// `cell_side` is raised to the smallest side whose cell keys fit in 64 bits.
    GridIndex(const PointSet& points, double cell_side);

    double cell_side() const { return h_; }
    std::size_t dim() const { return dim_; }
    std::size_t occupied_cells() const { return cells_.size(); }

    /// Calls fn(index, squared_distance) for every indexed point within distance r of q.
    /// Visit order is deterministic but unspecified.
    template <class Fn>
    void for_each_within(const PointSet& points, PointView q, double r, Fn&& fn) const;

    /// Cell coordinates of a point (exposed for tests).
    std::vector<std::int64_t> cell_of(PointView p) const;

private:
    struct Range {
        std::uint32_t begin;
        std::uint32_t end;
    };

    std::uint64_t encode(const std::int64_t* cell) const;
    void decode(std::uint64_t key, std::int64_t* cell) const;
    template <class Fn>
    void scan_cell(const PointSet& points, const Range& range, PointView q, double r2, Fn& fn) const;

    std::size_t dim_ = 0;
    double h_ = 1.0;
    std::int64_t per_axis_ = 1;
    std::unordered_map<std::uint64_t, Range> cells_;
    std::vector<std::uint64_t> occupied_keys_;  // ascending
    std::vector<std::uint32_t> order_;          // point indices grouped by cell
};

/// Indices i with ||points[i] - q|| <= r, ascending.
std::vector<std::size_t> radius_neighbors(const PointSet& points, const GridIndex& index, PointView q, double r);

/// Same, for the query point points[vertex]; the vertex itself is excluded.
std::vector<std::size_t> radius_neighbors(const PointSet& points, const GridIndex& index, std::size_t vertex,
                                          double r);

// ---------------------------------------------------------------------------

template <class Fn>
void GridIndex::scan_cell(const PointSet& points, const Range& range, PointView q, double r2, Fn& fn) const {
    const double* base = points.flat().data();
    for (std::uint32_t k = range.begin; k < range.end; ++k) {
        const std::uint32_t idx = order_[k];
        const double* p = base + static_cast<std::size_t>(idx) * dim_;
        double s = 0.0;
        for (std::size_t a = 0; a < dim_; ++a) {
            const double t = p[a] - q[a];
            s += t * t;
        }
        if (s <= r2) fn(static_cast<std::size_t>(idx), s);
    }
}

template <class Fn>
void GridIndex::for_each_within(const PointSet& points, PointView q, double r, Fn&& fn) const {
    if (q.size() != dim_) throw std::invalid_argument("GridIndex: query dimension mismatch");
    if (!(r >= 0.0)) throw std::invalid_argument("GridIndex: radius must be >= 0");
    if (cells_.empty()) return;
    const double r2 = r * r;
    const std::int64_t m = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(r / h_)));

    std::int64_t center[64];
    for (std::size_t a = 0; a < dim_; ++a) center[a] = static_cast<std::int64_t>(std::floor(q[a] / h_));

    // Block size (2m+1)^d, saturating.
    double block = 1.0;
    for (std::size_t a = 0; a < dim_; ++a) block *= static_cast<double>(2 * m + 1);

    if (block > static_cast<double>(occupied_keys_.size())) {
        std::int64_t cell[64];
        for (std::uint64_t key : occupied_keys_) {
            decode(key, cell);
            bool near = true;
            for (std::size_t a = 0; a < dim_ && near; ++a) near = std::llabs(cell[a] - center[a]) <= m;
            if (near) scan_cell(points, cells_.at(key), q, r2, fn);
        }
        return;
    }

    std::int64_t offset[64];
    std::int64_t cell[64];
    for (std::size_t a = 0; a < dim_; ++a) offset[a] = -m;
    for (;;) {
        bool inside = true;
        for (std::size_t a = 0; a < dim_; ++a) {
            cell[a] = center[a] + offset[a];
            if (cell[a] < 0 || cell[a] >= per_axis_) inside = false;
        }
        if (inside) {
            if (auto it = cells_.find(encode(cell)); it != cells_.end()) scan_cell(points, it->second, q, r2, fn);
        }
        std::size_t a = 0;
        while (a < dim_ && offset[a] == m) offset[a++] = -m;
        if (a == dim_) break;
        ++offset[a];
    }
}

}  // namespace rgglab
