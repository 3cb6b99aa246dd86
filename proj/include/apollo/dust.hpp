#pragma once

#include <array>
#include <vector>

#include "apollo/coordinates.hpp"
#include "apollo/descartes.hpp"

namespace apollo {

/// A circle stored as curvature k and curvature-weighted centre w = k·centre,
/// the pair that reflects linearly.
struct Circle {
    double k;
    double wx, wy;

    double radius() const { return 1.0 / k; }
    double cx() const { return wx / k; }
    double cy() const { return wy / k; }
};

/// |distance − |1/k₁ + 1/k₂|| ≤ tolerance (signed radii, so internal
/// tangency with a negative-curvature circle works too).
bool tangent(const Circle& a, const Circle& b, double tolerance = 1e-9);

/// Curvature and complex Descartes relations plus pairwise tangency.
bool is_descartes_configuration(const std::array<Circle, 4>& q, double tolerance = 1e-9);

/// The (−1, 2, 2, 3) window configuration with the outer circle centred at 0.
std::array<Circle, 4> window_seed();

/// Every circle of the packing generated by `seed` with curvature ≤ bound.
std::vector<Circle> packing_circles(const std::array<Circle, 4>& seed, double curvature_bound);

struct DustPoint {
    Tricycle<double> tricycle;  // ascending curvatures
    Point<double> moduli;       // x ≤ y
};

/// Moduli images of all positive tricycles in the packing up to the
/// curvature bound, deduplicated. Throws DomainError for a non-Descartes seed.
std::vector<DustPoint> dust_points(const std::array<Circle, 4>& seed, double curvature_bound);

}  // namespace apollo
