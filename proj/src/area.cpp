#include "apollo/area.hpp"

#include <random>

#include "apollo/errors.hpp"

namespace apollo {

double area_estimate(int depth_value, std::int64_t samples, std::uint64_t rng_seed, int cap) {
    if (samples < 1) throw UsageError("area estimate needs at least one sample");
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto open_unit = [&] {
        double v;
        do v = unit(rng);
        while (v == 0.0);
        return v;
    };
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double x = open_unit();
        const double y = open_unit();
        const auto r = depth_scaled_float(x, y, {cap, false});
        if (r.finite() && r.steps == depth_value) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

Rational parabolic_region_area() {
    // for fixed x the region is y ≥ (1 − √x)², and the upper root exceeds 1
    const Rational integral_sqrt(2, 3);  // ∫₀¹ √x dx
    const Rational integral_x(1, 2);
    return Rational(2) * integral_sqrt - integral_x;
}

}  // namespace apollo
