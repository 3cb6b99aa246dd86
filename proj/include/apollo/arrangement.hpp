#pragma once

#include <array>
#include <string>
#include <vector>

#include "apollo/conic.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// A disk chain between the unit disk and the zero-curvature line. Symbols
/// are "0" (the line), "1" (the unit disk), "x", "y" and the unknown names.
struct ArrangementSpec {
    struct Linear {
        std::array<std::string, 2> pair;    // u, v
        std::array<std::string, 3> triple;  // u + v = 2(w1 + w2 + w3)
    };

    std::string name;
    std::vector<std::string> unknowns;
    std::vector<Linear> linear;
    std::array<std::string, 4> quadratic;  // Descartes quadruple
};

/// c0 + cx·x + cy·y.
struct Affine {
    Rational c0, cx, cy;
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// Each unknown as an affine function of x and y. Throws UsageError
/// ("underdetermined arrangement") for a singular or non-square system.
std::vector<Affine> solve_chain(const ArrangementSpec& spec);

/// Substitutes the solved chain into the quadruple's Descartes relation.
/// A result without quadratic terms comes back flagged degenerate().
Conic derive_conic(const ArrangementSpec& spec);

/// JSON: {"name", "unknowns": [...], "linear": [{"pair": [u,v],
/// "triple": [w1,w2,w3]}], "quadratic": [k1,k2,k3,k4]}. Throws ParseError.
ArrangementSpec arrangement_from_json(const std::string& text);
std::string arrangement_to_json(const ArrangementSpec& spec);

/// The shipped depth-4 fixtures.
ArrangementSpec case1_spec();
ArrangementSpec case1_5_spec();
ArrangementSpec case2_spec();

}  // namespace apollo
