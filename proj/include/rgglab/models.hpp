#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rgglab/geometry.hpp"
#include "rgglab/graph.hpp"

namespace rgglab {

/// phi(z) = 1 - z / r inside the radius.
struct LinearDecay {};

struct ConstantPhi {
    double q = 1.0;
};

/// Piecewise-linear phi over normalized distance z / r; clamped to the end values
/// between breakpoints' extremes, zero beyond the radius.
struct PiecewiseLinearPhi {
    std::vector<std::pair<double, double>> breakpoints;  // (z / r, probability), ascending in z / r
};

using PhiSpec = std::variant<LinearDecay, ConstantPhi, PiecewiseLinearPhi>;

/// Two-branch linear decay: 0 when z > r, 1 - z / r otherwise. Throws if r <= 0.
double soft_phi(double z, double r);

/// Evaluates phi at distance z for connection radius r; result in [0, 1].
double evaluate_phi(const PhiSpec& phi, double z, double r);

struct DiskModel {
    double r = 0.0;
};

struct BluetoothModel {
    double r = 0.0;
    int c = 2;
    std::uint64_t seed = 0;
};

struct SoftModel {
    double r = 0.0;
    PhiSpec phi = LinearDecay{};
    std::uint64_t seed = 0;
};

struct EmbeddedModel {
    double p = 0.0;
    std::uint64_t seed = 0;
};

using ConnectionModel = std::variant<DiskModel, BluetoothModel, SoftModel, EmbeddedModel>;

/// Throws std::invalid_argument on out-of-range parameters. Warns when a Bluetooth
/// fan-out is below 2.
void validate(const ConnectionModel& model);

/// Short identifier used in CSV output: disk, bluetooth, soft, embedded.
std::string model_name(const ConnectionModel& model);

/// Returns true when the candidate pair (u, v), u < v, should be kept.
using EdgeFilter = std::function<bool(std::uint32_t u, std::uint32_t v)>;

/// Builds the random graph of `model` over `points`.
///
/// Disk keeps every pair within r. Bluetooth lets each vertex pick min(c, |candidates|)
/// of its radius neighbors without replacement from its own substream, then symmetrizes.
/// Soft admits each pair within r iff pair_uniform(seed, i, j) < phi(distance). Embedded
/// admits every pair with probability p, drawn row by row with geometric skips.
GeometricGraph build_graph(const PointSet& points, const ConnectionModel& model);

/// As above; every admitted candidate pair must also pass `keep`.
GeometricGraph build_graph(const PointSet& points, const ConnectionModel& model, const EdgeFilter& keep);

}  // namespace rgglab
