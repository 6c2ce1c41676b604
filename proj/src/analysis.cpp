#include "rgglab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "rgglab/detail/dijkstra.hpp"

namespace rgglab {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

auto graph_edges(const GeometricGraph& g) {
    return [&g](std::size_t u, auto&& relax) {
        for (const auto& nb : g.neighbors(u)) relax(nb.index, nb.length);
    };
}

void check_vertex(const GeometricGraph& g, std::size_t v, const char* what) {
    if (v >= g.vertex_count()) throw std::out_of_range(std::string(what) + ": vertex index out of range");
}

}  // namespace

ComponentLabeling connected_components(const GeometricGraph& g) {
    const std::size_t n = g.vertex_count();
    UnionFind uf(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (const auto& nb : g.neighbors(u)) {
            if (u < nb.index) uf.unite(u, nb.index);
        }
    }
    ComponentLabeling out;
    out.label.assign(n, 0);
    std::vector<std::size_t> root_label(n, detail::kNoParent);
    for (std::size_t u = 0; u < n; ++u) {
        const std::size_t root = uf.find(u);
        if (root_label[root] == detail::kNoParent) {
            root_label[root] = out.sizes.size();
            out.sizes.push_back(0);
        }
        out.label[u] = root_label[root];
        ++out.sizes[out.label[u]];
    }
    return out;
}

std::size_t largest_component_deficit(const GeometricGraph& g) {
    const auto cc = connected_components(g);
    if (cc.sizes.empty()) return 0;
    return g.vertex_count() - *std::max_element(cc.sizes.begin(), cc.sizes.end());
}

std::size_t largest_component_deficit(const GeometricGraph& g, const std::vector<bool>& members) {
    if (members.size() != g.vertex_count()) throw std::invalid_argument("largest_component_deficit: member mask size mismatch");
    const auto cc = connected_components(g);
    std::vector<std::size_t> sizes(cc.count(), 0);
    std::size_t total = 0;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (members[u]) {
            ++sizes[cc.label[u]];
            ++total;
        }
    }
    if (total == 0) return 0;
    return total - *std::max_element(sizes.begin(), sizes.end());
}

std::optional<PathResult> shortest_path(const GeometricGraph& g, std::size_t u, std::size_t v) {
    check_vertex(g, u, "shortest_path");
    check_vertex(g, v, "shortest_path");
    if (u == v) return PathResult{0.0, {u}};

    // Distances to v. Every vertex that can lie on a shortest u-v path has distance at
    // most dist(u), so the search stops once it settles anything farther.
    std::vector<bool> settled(g.vertex_count(), false);
    double horizon = detail::kUnreached;
    const auto tree = detail::dijkstra(g.vertex_count(), v, graph_edges(g), [&](std::size_t x, double d) {
        if (d > horizon) return true;
        settled[x] = true;
        if (x == u) horizon = d * (1.0 + 1e-12);
        return false;
    });
    if (!settled[u]) return std::nullopt;

    const double total = tree.dist[u];
    const double tol = 1e-12 * std::max(1.0, total);
    PathResult out;
    out.path.push_back(u);
    std::vector<bool> visited(g.vertex_count(), false);
    visited[u] = true;
    std::size_t x = u;
    while (x != v) {
        std::size_t next = detail::kNoParent;
        double step = 0.0;
        for (const auto& nb : g.neighbors(x)) {  // ascending index: first match is smallest
            if (visited[nb.index] || !settled[nb.index]) continue;
            if (std::abs(nb.length + tree.dist[nb.index] - tree.dist[x]) <= tol) {
                next = nb.index;
                step = nb.length;
                break;
            }
        }
        if (next == detail::kNoParent) {
            // Numerical corner case: fall back to the search tree toward v.
            next = tree.parent[x];
            step = distance(g.vertices()[x], g.vertices()[next]);
        }
        out.length += step;
        out.path.push_back(next);
        visited[next] = true;
        x = next;
    }
    return out;
}

std::vector<std::optional<double>> distances_to(const GeometricGraph& g, std::size_t source,
                                                std::span<const std::size_t> targets) {
    check_vertex(g, source, "distances_to");
    std::vector<bool> wanted(g.vertex_count(), false);
    std::size_t remaining = 0;
    for (std::size_t t : targets) {
        check_vertex(g, t, "distances_to");
        if (!wanted[t]) {
            wanted[t] = true;
            ++remaining;
        }
    }
    const auto tree = detail::dijkstra(g.vertex_count(), source, graph_edges(g), [&](std::size_t x, double) {
        if (wanted[x]) {
            wanted[x] = false;
            --remaining;
        }
        return remaining == 0;
    });
    std::vector<std::optional<double>> out;
    out.reserve(targets.size());
    for (std::size_t t : targets) {
        if (tree.dist[t] == detail::kUnreached) {
            out.emplace_back(std::nullopt);
        } else {
            out.emplace_back(tree.dist[t]);
        }
    }
    return out;
}

std::optional<double> stretch(const GeometricGraph& g, std::size_t u, std::size_t v, double denominator) {
    if (!(denominator > 0.0)) throw std::invalid_argument("stretch: denominator must be > 0");
    const std::size_t target[] = {v};
    const auto d = distances_to(g, u, target);
    if (!d[0]) return std::nullopt;
    return *d[0] / denominator;
}

// ---------------------------------------------------------------------------

AxisBox::AxisBox(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.dim() != hi_.dim() || lo_.dim() == 0) throw std::invalid_argument("AxisBox: corner dimensions differ or are zero");
    for (std::size_t a = 0; a < lo_.dim(); ++a) {
        if (!(lo_[a] <= hi_[a])) throw std::invalid_argument("AxisBox: lo must not exceed hi");
    }
}

AxisBox AxisBox::unit_cube(std::size_t d) {
    return AxisBox(Point(std::vector<double>(d, 0.0)), Point(std::vector<double>(d, 1.0)));
}

double AxisBox::volume() const {
    double v = 1.0;
    for (std::size_t a = 0; a < dim(); ++a) v *= hi_[a] - lo_[a];
    return v;
}

bool AxisBox::contains(PointView x) const {
    if (x.size() != dim()) throw std::invalid_argument("AxisBox::contains: dimension mismatch");
    for (std::size_t a = 0; a < dim(); ++a) {
        if (x[a] < lo_[a] || x[a] > hi_[a]) return false;
    }
    return true;
}

bool AxisBox::contains_interior(PointView x) const {
    if (x.size() != dim()) throw std::invalid_argument("AxisBox::contains_interior: dimension mismatch");
    for (std::size_t a = 0; a < dim(); ++a) {
        if (!(x[a] > lo_[a] && x[a] < hi_[a])) return false;
    }
    return true;
}

std::optional<AxisBox> AxisBox::intersect(const AxisBox& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("AxisBox::intersect: dimension mismatch");
    std::vector<double> lo(dim()), hi(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        lo[a] = std::max(lo_[a], other.lo_[a]);
        hi[a] = std::min(hi_[a], other.hi_[a]);
        if (lo[a] > hi[a]) return std::nullopt;
    }
    return AxisBox(Point(std::move(lo)), Point(std::move(hi)));
}

bool AxisBox::overlaps_interior(const AxisBox& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("AxisBox::overlaps_interior: dimension mismatch");
    for (std::size_t a = 0; a < dim(); ++a) {
        if (!(std::max(lo_[a], other.lo_[a]) < std::min(hi_[a], other.hi_[a]))) return false;
    }
    return true;
}

Restriction restrict_to_region(const GeometricGraph& g, const AxisBox& box) {
    const auto& pts = g.vertices();
    if (box.dim() != pts.dim()) throw std::invalid_argument("restrict_to_region: dimension mismatch");
    constexpr std::size_t kDropped = detail::kNoParent;
    std::vector<std::size_t> remap(g.vertex_count(), kDropped);
    Restriction out;
    std::vector<double> flat;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (box.contains(pts[u])) {
            remap[u] = out.original_index.size();
            out.original_index.push_back(u);
            const PointView p = pts[u];
            flat.insert(flat.end(), p.begin(), p.end());
        }
    }
    std::vector<VertexPair> pairs;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (remap[u] == kDropped) continue;
        for (const auto& nb : g.neighbors(u)) {
            if (u < nb.index && remap[nb.index] != kDropped) {
                pairs.emplace_back(static_cast<std::uint32_t>(remap[u]), static_cast<std::uint32_t>(remap[nb.index]));
            }
        }
    }
    out.graph = GeometricGraph(PointSet(pts.dim(), std::move(flat), pts.seed()), std::move(pairs));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Per-axis cell layout of a (possibly shifted) grid over [0,1].
struct AxisCells {
    double eps;
    double shift;  // 0 for the base grid, eps / 2 for the shifted one
    std::int64_t count;

    double lower(std::int64_t k) const { return std::max(0.0, k * eps - shift); }
    double upper(std::int64_t k) const { return std::min(1.0, (k + 1) * eps - shift); }
    std::int64_t of(double x) const {
        return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor((x + shift) / eps)), 0, count - 1);
    }
};

AxisCells make_axis(double eps, double shift) {
    // Cell k exists while its lower bound lies inside [0,1).
    std::int64_t count = 0;
    while (count * eps - shift < 1.0) ++count;
    return AxisCells{eps, shift, count};
}

std::size_t linear_index(std::span<const std::int64_t> cell, std::int64_t count) {
    std::size_t idx = 0;
    for (std::size_t a = cell.size(); a-- > 0;) idx = idx * static_cast<std::size_t>(count) + static_cast<std::size_t>(cell[a]);
    return idx;
}

AxisBox cell_box(std::span<const std::int64_t> cell, const AxisCells& axis) {
    std::vector<double> lo(cell.size()), hi(cell.size());
    for (std::size_t a = 0; a < cell.size(); ++a) {
        lo[a] = axis.lower(cell[a]);
        hi[a] = axis.upper(cell[a]);
    }
    return AxisBox(Point(std::move(lo)), Point(std::move(hi)));
}

// Advances an odometer over [0, count)^d; false when it wraps.
bool next_cell(std::vector<std::int64_t>& cell, std::int64_t count) {
    for (auto& c : cell) {
        if (++c < count) return true;
        c = 0;
    }
    return false;
}

}  // namespace

OccupancyReport tessellation_occupancy(const PointSet& points, std::span<const AxisBox> region, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("tessellation_occupancy: eps must lie in (0, 1]");
    const std::size_t d = points.dim();
    if (d > 20) throw std::invalid_argument("tessellation_occupancy: dimension above 20 not supported");
    for (const auto& b : region) {
        if (b.dim() != d) throw std::invalid_argument("tessellation_occupancy: region dimension mismatch");
    }
    const AxisCells base = make_axis(eps, 0.0);
    const AxisCells shifted = make_axis(eps, 0.5 * eps);
    if (std::pow(static_cast<double>(shifted.count), static_cast<double>(d)) > 5e7) {
        throw std::invalid_argument("tessellation_occupancy: grid too fine for this dimension");
    }

    auto occupied = [&](const AxisCells& axis) {
        std::unordered_set<std::size_t> occ;
        std::vector<std::int64_t> cell(d);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const PointView p = points[i];
            for (std::size_t a = 0; a < d; ++a) cell[a] = axis.of(p[a]);
            occ.insert(linear_index(cell, axis.count));
        }
        return occ;
    };

    OccupancyReport report;
    const auto base_occ = occupied(base);
    std::unordered_set<std::size_t> kept;
    std::vector<std::int64_t> cell(d, 0);
    do {
        const AxisBox box = cell_box(cell, base);
        const bool meets = std::any_of(region.begin(), region.end(), [&](const AxisBox& r) { return box.overlaps_interior(r); });
        if (meets) {
            const std::size_t idx = linear_index(cell, base.count);
            kept.insert(idx);
            ++report.cells;
            if (!base_occ.contains(idx)) ++report.empty_cells;
        }
    } while (next_cell(cell, base.count));

    // Shifted cell k overlaps base cells k-1 and k on each axis.
    const auto shifted_occ = occupied(shifted);
    std::fill(cell.begin(), cell.end(), 0);
    std::vector<std::int64_t> probe(d);
    do {
        bool meets = false;
        for (std::size_t mask = 0; mask < (std::size_t{1} << d) && !meets; ++mask) {
            bool valid = true;
            for (std::size_t a = 0; a < d; ++a) {
                probe[a] = cell[a] - static_cast<std::int64_t>((mask >> a) & 1U);
                if (probe[a] < 0 || probe[a] >= base.count) valid = false;
            }
            if (!valid) continue;
            const AxisBox sbox = cell_box(cell, shifted);
            const AxisBox bbox = cell_box(probe, base);
            meets = kept.contains(linear_index(probe, base.count)) && sbox.overlaps_interior(bbox);
        }
        if (meets) {
            ++report.shifted_cells;
            if (!shifted_occ.contains(linear_index(cell, shifted.count))) ++report.shifted_empty_cells;
        }
    } while (next_cell(cell, shifted.count));
    return report;
}

}  // namespace rgglab
