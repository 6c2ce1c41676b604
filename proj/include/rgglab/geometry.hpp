#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rgglab {

using PointView = std::span<const double>;

/// A point in R^d. Domain points live in [0,1]^d; intermediate geometry is unrestricted.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords) : coords_(coords) {}
    explicit Point(PointView view) : coords_(view.begin(), view.end()) {}

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

    PointView view() const { return coords_; }
    operator PointView() const { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

/// n points of a common dimension, stored row-major, with the seed that produced them.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t dim, std::vector<double> flat, std::uint64_t seed = 0);
    static PointSet from_points(const std::vector<Point>& points, std::uint64_t seed = 0);

    std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
    bool empty() const { return flat_.empty(); }
    std::size_t dim() const { return dim_; }
    std::uint64_t seed() const { return seed_; }

    PointView operator[](std::size_t i) const { return {flat_.data() + i * dim_, dim_}; }
    Point point(std::size_t i) const { return Point((*this)[i]); }
    const std::vector<double>& flat() const { return flat_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> flat_;
    std::uint64_t seed_ = 0;
};

double squared_distance(PointView a, PointView b);
double distance(PointView a, PointView b);

/// Lebesgue measure of the unit ball in R^d.
double unit_ball_volume(int d);

struct Thresholds {
    double gamma_star;       // disk connectivity constant 2 (2 d theta_d)^(-1/d)
    double gamma_star_star;  // Bluetooth radius constant d 2^(1 + 1/d)
    double soft_gamma;       // (d+1)^(1/d) gamma_star, for linear-decay soft graphs
    double theta_d;
};

Thresholds thresholds(int d);

/// gamma (ln n / n)^(1/d).
double connection_radius(std::int64_t n, double gamma, int d);

/// sqrt(2 ln n / ln ln n), the Bluetooth fan-out threshold.
double bluetooth_threshold(std::int64_t n);

/// n i.i.d. uniform points in [0,1)^d from an xoshiro256** stream seeded with `seed`.
PointSet sample_uniform(std::size_t n, int d, std::uint64_t seed);

bool in_unit_cube(PointView x);

}  // namespace rgglab
