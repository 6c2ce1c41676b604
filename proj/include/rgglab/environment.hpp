#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgglab/analysis.hpp"
#include "rgglab/geometry.hpp"

namespace rgglab {

/// Free space F = [0,1]^d minus the union of obstacles. Obstacles are open boxes, so F
/// is closed: obstacle faces, edges and corners are free.
class Environment {
public:
    explicit Environment(std::size_t dim, std::vector<AxisBox> obstacles = {});

    std::size_t dim() const { return dim_; }
    const std::vector<AxisBox>& obstacles() const { return obstacles_; }

    friend bool operator==(const Environment&, const Environment&) = default;

private:
    std::size_t dim_;
    std::vector<AxisBox> obstacles_;
};

/// 2^d cubes of side (coverage / 2^d)^(1/d), one centered in each half-cube.
Environment make_toy_scenario(int d, double coverage);

/// True iff x lies in no obstacle interior. Throws for points outside [0,1]^d.
bool is_free(const Environment& env, PointView x);

/// Exact slab test: true iff the closed segment xy misses every obstacle interior.
bool collision_free_segment(const Environment& env, PointView x, PointView y);

/// 1 - sum of obstacle volumes when obstacles are pairwise interior-disjoint; otherwise
/// a 10^6-sample Monte Carlo estimate (deterministic seed).
double free_volume(const Environment& env);

struct GeodesicOptions {
    int resolution = 0;    // lattice nodes per axis minus one; 0 picks a per-dimension default
    int move_radius = 0;   // moves to lattice offsets with max-norm <= this; 0 picks a default
    bool shortcut = true;  // greedy line-of-sight smoothing of the lattice path
};

/// Length of a short free path from x to y found on a lattice of spacing 1/resolution,
/// using every primitive move with max-norm <= move_radius (collision-checked), followed
/// by line-of-sight shortcutting. Always the length of a genuine free path, hence an upper
/// bound on the geodesic. nullopt when no path exists at this resolution.
/// Throws when x or y is not free.
std::optional<double> geodesic_estimate(const Environment& env, PointView x, PointView y, GeodesicOptions options = {});

/// JSON schema: {"dim": d, "obstacles": [[lo_1..lo_d, hi_1..hi_d], ...]}.
Environment parse_environment(const std::string& json_text);
Environment load_environment(const std::string& path);
std::string environment_to_json(const Environment& env);

}  // namespace rgglab
