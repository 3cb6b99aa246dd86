#pragma once

#include <cstdint>

#include "apollo/depth.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// Monte-Carlo fraction of the open unit square where δ(1, x, y) equals
/// depth_value (float mode). Deterministic for a given seed.
double area_estimate(int depth_value, std::int64_t samples, std::uint64_t rng_seed, int cap = kDefaultCap);

/// Exact area of {(x−y)² + 1 ≤ 2(x+y)} ∩ [0,1]², from ∫₀¹ (2√x − x) dx.
Rational parabolic_region_area();

}  // namespace apollo
