#include "rgglab/grid_index.hpp"

#include <algorithm>
#include <limits>

namespace rgglab {

namespace {

constexpr std::size_t kMaxDim = 64;

// Cells per axis for side h over [0,1]: indices 0..floor(1/h).
std::int64_t cells_per_axis(double h) { return static_cast<std::int64_t>(std::floor(1.0 / h)) + 1; }

bool key_space_fits(std::int64_t per_axis, std::size_t dim) {
    double total = 1.0;
    for (std::size_t a = 0; a < dim; ++a) total *= static_cast<double>(per_axis);
    return total < 0x1.0p62;
}

}  // namespace

GridIndex::GridIndex(const PointSet& points, double cell_side) : dim_(points.dim()) {
    if (dim_ == 0 || dim_ > kMaxDim) throw std::invalid_argument("GridIndex: dimension must be in [1, 64]");
    if (!(cell_side >= 0.0)) throw std::invalid_argument("GridIndex: cell side must be >= 0");
    if (points.size() > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("GridIndex: too many points");

    h_ = std::max(cell_side, 1e-300);
    while (!key_space_fits(cells_per_axis(h_), dim_)) {
        // Smallest side whose key space fits; larger cells keep queries exact.
        const double target = std::pow(0x1.0p62, 1.0 / static_cast<double>(dim_)) - 2.0;
        h_ = std::max(h_ * 2.0, 1.0 / std::max(target, 1.0));
    }
    per_axis_ = cells_per_axis(h_);

    const std::size_t n = points.size();
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(n);
    std::int64_t cell[kMaxDim];
    for (std::size_t i = 0; i < n; ++i) {
        const PointView p = points[i];
        for (std::size_t a = 0; a < dim_; ++a) {
            cell[a] = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor(p[a] / h_)), 0, per_axis_ - 1);
        }
        keyed[i] = {encode(cell), static_cast<std::uint32_t>(i)};
    }
    std::sort(keyed.begin(), keyed.end());

    order_.resize(n);
    cells_.reserve(n);
    for (std::size_t k = 0; k < n;) {
        std::size_t e = k;
        while (e < n && keyed[e].first == keyed[k].first) {
            order_[e] = keyed[e].second;
            ++e;
        }
        cells_.emplace(keyed[k].first, Range{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(e)});
        occupied_keys_.push_back(keyed[k].first);
        k = e;
    }
}

std::uint64_t GridIndex::encode(const std::int64_t* cell) const {
    std::uint64_t key = 0;
    for (std::size_t a = dim_; a-- > 0;) key = key * static_cast<std::uint64_t>(per_axis_) + static_cast<std::uint64_t>(cell[a]);
    return key;
}

void GridIndex::decode(std::uint64_t key, std::int64_t* cell) const {
    for (std::size_t a = 0; a < dim_; ++a) {
        cell[a] = static_cast<std::int64_t>(key % static_cast<std::uint64_t>(per_axis_));
        key /= static_cast<std::uint64_t>(per_axis_);
    }
}

std::vector<std::int64_t> GridIndex::cell_of(PointView p) const {
    std::vector<std::int64_t> cell(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
        cell[a] = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor(p[a] / h_)), 0, per_axis_ - 1);
    }
    return cell;
}

std::vector<std::size_t> radius_neighbors(const PointSet& points, const GridIndex& index, PointView q, double r) {
    if (points.dim() != index.dim()) throw std::invalid_argument("radius_neighbors: index built over other dimension");
    std::vector<std::size_t> out;
    index.for_each_within(points, q, r, [&](std::size_t i, double) { out.push_back(i); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> radius_neighbors(const PointSet& points, const GridIndex& index, std::size_t vertex,
                                          double r) {
    if (vertex >= points.size()) throw std::out_of_range("radius_neighbors: vertex index out of range");
    std::vector<std::size_t> out;
    index.for_each_within(points, points[vertex], r, [&](std::size_t i, double) {
        if (i != vertex) out.push_back(i);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rgglab
