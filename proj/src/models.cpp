#include "rgglab/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rgglab/diagnostics.hpp"
#include "rgglab/grid_index.hpp"
#include "rgglab/rng.hpp"

namespace rgglab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

// Substream tags; keep stable, they are part of the reproducibility contract.
constexpr std::uint64_t kBluetoothTag = 0xB1;
constexpr std::uint64_t kEmbeddedTag = 0xE3;

std::vector<VertexPair> radius_pairs(const PointSet& points, double r, const auto& admit) {
    std::vector<VertexPair> pairs;
    if (points.empty()) return pairs;
    const GridIndex index(points, r);
    for (std::size_t i = 0; i < points.size(); ++i) {
        index.for_each_within(points, points[i], r, [&](std::size_t j, double d2) {
            if (j > i && admit(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), d2)) {
                pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            }
        });
    }
    return pairs;
}

std::vector<VertexPair> bluetooth_pairs(const PointSet& points, const BluetoothModel& m, const EdgeFilter& keep) {
    std::vector<VertexPair> pairs;
    if (points.empty()) return pairs;
    const GridIndex index(points, m.r);
    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 0; i < points.size(); ++i) {
        candidates.clear();
        index.for_each_within(points, points[i], m.r, [&](std::size_t j, double) {
            if (j != i) candidates.push_back(static_cast<std::uint32_t>(j));
        });
        const std::size_t m_count = candidates.size();
        const std::size_t picks = std::min<std::size_t>(static_cast<std::size_t>(m.c), m_count);
        Xoshiro256ss rng(derive_seed(m.seed, {kBluetoothTag, i}));
        // Partial Fisher-Yates over ranks 0..m_count-1 in ascending vertex order, with the
        // displaced slots kept sparsely; each chosen rank is then resolved by selection.
        std::vector<std::pair<std::size_t, std::size_t>> moved;
        const auto slot = [&](std::size_t k) {
            for (const auto& [pos, val] : moved) {
                if (pos == k) return val;
            }
            return k;
        };
        for (std::size_t k = 0; k < picks; ++k) {
            const std::size_t pick = k + static_cast<std::size_t>(rng.below(m_count - k));
            const std::size_t rank = slot(pick);
            const std::size_t displaced = slot(k);
            std::erase_if(moved, [&](const auto& e) { return e.first == pick || e.first == k; });
            moved.emplace_back(pick, displaced);
            const auto nth = candidates.begin() + static_cast<std::ptrdiff_t>(rank);
            std::nth_element(candidates.begin(), nth, candidates.end());
            const auto u = static_cast<std::uint32_t>(i);
            const auto v = *nth;
            const auto lo = std::min(u, v), hi = std::max(u, v);
            if (keep(lo, hi)) pairs.emplace_back(lo, hi);
        }
    }
    return pairs;
}

std::vector<VertexPair> embedded_pairs(const PointSet& points, const EmbeddedModel& m, const EdgeFilter& keep) {
    std::vector<VertexPair> pairs;
    const std::size_t n = points.size();
    if (m.p <= 0.0 || n < 2) return pairs;
    const double log_q = std::log1p(-m.p);  // -inf when p == 1
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Xoshiro256ss rng(derive_seed(m.seed, {kEmbeddedTag, i}));
        std::size_t j = i;
        for (;;) {
            // Geometric number of rejected pairs before the next admitted one.
            std::size_t skip = 0;
            if (m.p < 1.0) {
                const double g = std::floor(std::log(rng.uniform_open_closed()) / log_q);
                skip = g >= static_cast<double>(n) ? n : static_cast<std::size_t>(g);
            }
            j += skip + 1;
            if (j >= n) break;
            const auto u = static_cast<std::uint32_t>(i), v = static_cast<std::uint32_t>(j);
            if (keep(u, v)) pairs.emplace_back(u, v);
        }
    }
    return pairs;
}

}  // namespace

double soft_phi(double z, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("soft_phi: radius must be > 0");
    if (z > r) return 0.0;
    return 1.0 - z / r;
}

double evaluate_phi(const PhiSpec& phi, double z, double r) {
    if (z > r) return 0.0;
    return std::visit(
        Overloaded{
            [&](const LinearDecay&) { return soft_phi(z, r); },
            [&](const ConstantPhi& c) { return c.q; },
            [&](const PiecewiseLinearPhi& t) {
                const double x = r > 0.0 ? z / r : 0.0;
                const auto& b = t.breakpoints;
                if (x <= b.front().first) return b.front().second;
                if (x >= b.back().first) return b.back().second;
                const auto hi = std::upper_bound(b.begin(), b.end(), x,
                                                 [](double v, const auto& bp) { return v < bp.first; });
                const auto lo = hi - 1;
                const double w = (x - lo->first) / (hi->first - lo->first);
                return lo->second + w * (hi->second - lo->second);
            },
        },
        phi);
}

void validate(const ConnectionModel& model) {
    auto check_radius = [](double r) {
        if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("connection model: radius must be finite and >= 0");
    };
    std::visit(Overloaded{
                   [&](const DiskModel& m) { check_radius(m.r); },
                   [&](const BluetoothModel& m) {
                       check_radius(m.r);
                       if (m.c < 1) throw std::invalid_argument("bluetooth model: c must be >= 1");
                       if (m.c < 2) warn("bluetooth model: c = 1 is below the usual lower bound of 2");
                   },
                   [&](const SoftModel& m) {
                       if (!(m.r > 0.0) || !std::isfinite(m.r)) throw std::invalid_argument("soft model: radius must be finite and > 0");
                       if (const auto* c = std::get_if<ConstantPhi>(&m.phi); c && !in_unit_interval(c->q)) {
                           throw std::invalid_argument("soft model: constant phi must lie in [0,1]");
                       }
                       if (const auto* t = std::get_if<PiecewiseLinearPhi>(&m.phi)) {
                           if (t->breakpoints.empty()) throw std::invalid_argument("soft model: empty phi table");
                           for (std::size_t k = 0; k < t->breakpoints.size(); ++k) {
                               const auto& [x, p] = t->breakpoints[k];
                               if (!in_unit_interval(p)) throw std::invalid_argument("soft model: phi table value outside [0,1]");
                               if (k > 0 && !(x > t->breakpoints[k - 1].first)) {
                                   throw std::invalid_argument("soft model: phi table must be strictly ascending");
                               }
                           }
                       }
                   },
                   [&](const EmbeddedModel& m) {
                       if (!in_unit_interval(m.p)) throw std::invalid_argument("embedded model: p must lie in [0,1]");
                   },
               },
               model);
}

std::string model_name(const ConnectionModel& model) {
    return std::visit(Overloaded{
                          [](const DiskModel&) { return std::string("disk"); },
                          [](const BluetoothModel&) { return std::string("bluetooth"); },
                          [](const SoftModel&) { return std::string("soft"); },
                          [](const EmbeddedModel&) { return std::string("embedded"); },
                      },
                      model);
}

GeometricGraph build_graph(const PointSet& points, const ConnectionModel& model) {
    return build_graph(points, model, [](std::uint32_t, std::uint32_t) { return true; });
}

GeometricGraph build_graph(const PointSet& points, const ConnectionModel& model, const EdgeFilter& keep) {
    validate(model);
    if (points.size() > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("build_graph: too many points");
    std::vector<VertexPair> pairs = std::visit(
        Overloaded{
            [&](const DiskModel& m) {
                return radius_pairs(points, m.r, [&](std::uint32_t i, std::uint32_t j, double) { return keep(i, j); });
            },
            [&](const BluetoothModel& m) { return bluetooth_pairs(points, m, keep); },
            [&](const SoftModel& m) {
                return radius_pairs(points, m.r, [&](std::uint32_t i, std::uint32_t j, double d2) {
                    // Strict comparison with a [0,1) draw gives probability exactly phi.
                    return pair_uniform(m.seed, i, j) < evaluate_phi(m.phi, std::sqrt(d2), m.r) && keep(i, j);
                });
            },
            [&](const EmbeddedModel& m) { return embedded_pairs(points, m, keep); },
        },
        model);
    return GeometricGraph(points, std::move(pairs));
}

}  // namespace rgglab
