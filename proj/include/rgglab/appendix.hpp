#pragma once

#include <cstdint>

#include "rgglab/geometry.hpp"

namespace rgglab {

/// Number of axes on which the r-ball around x pokes out of the unit cube.
/// Throws unless 0 < r < 1/2 and x in [0,1]^d.
int classify_region(PointView x, double r);

/// Volume of R_j: binom(d, j) 2^j (1 - 2r)^(d-j) r^j. Throws unless 0 <= j <= d, 0 <= r < 1/2.
double region_volume(int d, int j, double r);

struct IntegralEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
};

/// Integral over the unit cube of phi(|y - x|) dy for the linear decay phi of radius r.
/// Exact (theta_d r^d / (d+1)) for interior points, otherwise Monte Carlo over the
/// r-ball with `mc_samples` draws seeded by `seed`. Boundary points need >= 1000 samples.
IntegralEstimate inner_integral(PointView x, double r, std::int64_t mc_samples, std::uint64_t seed);

inline constexpr std::int64_t kDefaultOuterSamples = 1'000'000;
inline constexpr std::int64_t kDefaultInnerSamples = 10'000;

/// n times the cube integral of exp(-n * inner_integral(x)), with r = connection_radius(n, gamma, d).
/// The R_0 share is exact; the outer samples are split evenly over R_1..R_d and drawn
/// uniformly inside each region. Throws if r >= 1/2.
IntegralEstimate estimate_In(std::int64_t n, double gamma, int d, std::int64_t outer_samples, std::uint64_t seed,
                             std::int64_t inner_samples = kDefaultInnerSamples);

}  // namespace rgglab
