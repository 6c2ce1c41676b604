#include "rgglab/appendix.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rgglab/rng.hpp"

namespace rgglab {

namespace {

void check_radius(double r) {
    if (!(r > 0.0 && r < 0.5)) throw std::invalid_argument("radius must lie in (0, 1/2)");
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Uniform point of R_j: j distinct boundary axes, each within r of a random side.
void sample_region_point(Xoshiro256ss& rng, int d, int j, double r, std::vector<double>& x) {
    std::vector<int> axes(d);
    std::iota(axes.begin(), axes.end(), 0);
    for (int i = 0; i < j; ++i) {
        const auto k = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - i)));
        std::swap(axes[i], axes[k]);
    }
    for (int i = 0; i < d; ++i) {
        const int a = axes[i];
        if (i < j) {
            const double t = r * rng.uniform();
            x[a] = (rng.next() >> 63) ? 1.0 - t : t;
        } else {
            x[a] = r + (1.0 - 2.0 * r) * rng.uniform();
        }
    }
}

}  // namespace

int classify_region(PointView x, double r) {
    check_radius(r);
    if (!in_unit_cube(x)) throw std::invalid_argument("classify_region: point outside the unit cube");
    int j = 0;
    for (double c : x) j += std::min(c, 1.0 - c) < r;
    return j;
}

double region_volume(int d, int j, double r) {
    if (d < 1 || j < 0 || j > d) throw std::invalid_argument("region_volume: need 0 <= j <= d");
    if (!(r >= 0.0 && r < 0.5)) throw std::invalid_argument("region_volume: radius must lie in [0, 1/2)");
    return binomial(d, j) * std::ldexp(1.0, j) * std::pow(1.0 - 2.0 * r, d - j) * std::pow(r, j);
}

IntegralEstimate inner_integral(PointView x, double r, std::int64_t mc_samples, std::uint64_t seed) {
    const int d = static_cast<int>(x.size());
    const double ball = unit_ball_volume(d) * std::pow(r, d);
    if (classify_region(x, r) == 0) return {ball / (d + 1), 0.0, 0};
    if (mc_samples < 1000) throw std::invalid_argument("inner_integral: boundary points need >= 1000 samples");

    // y = x + r rho u with u uniform on the sphere and rho = U^(1/d); phi(|y - x|) = 1 - rho.
    Xoshiro256ss rng(seed);
    std::vector<double> dir(d);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t k = 0; k < mc_samples; ++k) {
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& c : dir) {
                c = rng.normal();
                norm2 += c * c;
            }
        } while (norm2 == 0.0);
        const double rho = std::pow(rng.uniform(), 1.0 / d);
        const double scale = r * rho / std::sqrt(norm2);
        bool inside = true;
        for (int a = 0; a < d && inside; ++a) {
            const double y = x[a] + scale * dir[a];
            inside = y >= 0.0 && y <= 1.0;
        }
        const double f = inside ? 1.0 - rho : 0.0;
        sum += f;
        sum_sq += f * f;
    }
    const double m = static_cast<double>(mc_samples);
    const double mean = sum / m;
    const double var = std::max(0.0, sum_sq / m - mean * mean);
    return {ball * mean, ball * std::sqrt(var / (m - 1.0)), mc_samples};
}

IntegralEstimate estimate_In(std::int64_t n, double gamma, int d, std::int64_t outer_samples, std::uint64_t seed,
                             std::int64_t inner_samples) {
    if (!(gamma > 0.0)) throw std::invalid_argument("estimate_In: gamma must be > 0");
    const double r = connection_radius(n, gamma, d);
    if (!(r < 0.5)) throw std::invalid_argument("estimate_In: connection radius must be < 1/2");
    if (outer_samples < d) throw std::invalid_argument("estimate_In: need at least d outer samples");
    const double nd = static_cast<double>(n);

    const double interior = unit_ball_volume(d) * std::pow(r, d) / (d + 1);
    double value = region_volume(d, 0, r) * std::exp(-nd * interior);
    double variance = 0.0;

    std::vector<double> x(d);
    for (int j = 1; j <= d; ++j) {
        const std::int64_t count = outer_samples / d + (j <= outer_samples % d ? 1 : 0);
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::int64_t k = 0; k < count; ++k) {
            const auto ju = static_cast<std::uint64_t>(j);
            const auto ku = static_cast<std::uint64_t>(k);
            Xoshiro256ss rng(derive_seed(seed, {ju, ku}));
            sample_region_point(rng, d, j, r, x);
            const double inner = inner_integral(x, r, inner_samples, derive_seed(seed, {ju, ku, 1})).value;
            const double f = std::exp(-nd * inner);
            sum += f;
            sum_sq += f * f;
        }
        const double c = static_cast<double>(count);
        const double mean = sum / c;
        const double var = count > 1 ? std::max(0.0, (sum_sq - c * mean * mean) / (c - 1.0)) : 0.0;
        const double vol = region_volume(d, j, r);
        value += vol * mean;
        variance += vol * vol * var / c;
    }
    return {nd * value, nd * std::sqrt(variance), outer_samples};
}

}  // namespace rgglab
