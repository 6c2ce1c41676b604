#include "rgglab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rgglab/rng.hpp"

namespace rgglab {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {}

PointSet::PointSet(std::size_t dim, std::vector<double> flat, std::uint64_t seed)
    : dim_(dim), flat_(std::move(flat)), seed_(seed) {
    if (dim_ == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
    if (flat_.size() % dim_ != 0) throw std::invalid_argument("PointSet: coordinate count not a multiple of dim");
    for (double c : flat_) {
        if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("PointSet: coordinate outside [0,1]");
    }
}

PointSet PointSet::from_points(const std::vector<Point>& points, std::uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("PointSet::from_points: need at least one point to fix dim");
    const std::size_t d = points.front().dim();
    std::vector<double> flat;
    flat.reserve(points.size() * d);
    for (const auto& p : points) {
        if (p.dim() != d) throw std::invalid_argument("PointSet::from_points: mixed dimensions");
        flat.insert(flat.end(), p.coords().begin(), p.coords().end());
    }
    return PointSet(d, std::move(flat), seed);
}

double squared_distance(PointView a, PointView b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

double distance(PointView a, PointView b) { return std::sqrt(squared_distance(a, b)); }

double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("unit_ball_volume: dimension must be >= 1, got " + std::to_string(d));
    const double half = 0.5 * d;
    return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
}

Thresholds thresholds(int d) {
    if (d < 2) throw std::invalid_argument("thresholds: dimension must be >= 2, got " + std::to_string(d));
    const double theta = unit_ball_volume(d);
    const double inv_d = 1.0 / d;
    const double gamma_star = 2.0 * std::pow(2.0 * d * theta, -inv_d);
    return Thresholds{
        .gamma_star = gamma_star,
        .gamma_star_star = d * std::pow(2.0, 1.0 + inv_d),
        .soft_gamma = std::pow(d + 1.0, inv_d) * gamma_star,
        .theta_d = theta,
    };
}

double connection_radius(std::int64_t n, double gamma, int d) {
    if (n < 2) throw std::invalid_argument("connection_radius: n must be >= 2");
    if (d < 1) throw std::invalid_argument("connection_radius: dimension must be >= 1");
    if (!(gamma >= 0.0)) throw std::invalid_argument("connection_radius: gamma must be >= 0");
    const double nn = static_cast<double>(n);
    return gamma * std::pow(std::log(nn) / nn, 1.0 / d);
}

double bluetooth_threshold(std::int64_t n) {
    const double ln = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
    if (ln <= 1.0) throw std::invalid_argument("bluetooth_threshold: need ln ln n > 0 (n >= 3)");
    return std::sqrt(2.0 * ln / std::log(ln));
}

PointSet sample_uniform(std::size_t n, int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("sample_uniform: dimension must be >= 1");
    Xoshiro256ss rng(seed);
    std::vector<double> flat(n * static_cast<std::size_t>(d));
    for (auto& c : flat) c = rng.uniform();
    return PointSet(static_cast<std::size_t>(d), std::move(flat), seed);
}

bool in_unit_cube(PointView x) {
    for (double c : x) {
        if (!(c >= 0.0 && c <= 1.0)) return false;
    }
    return true;
}

}  // namespace rgglab
