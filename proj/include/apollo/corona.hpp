#pragma once

#include <array>
#include <vector>

#include "apollo/conic.hpp"
#include "apollo/stern_brocot.hpp"

namespace apollo {

struct XCoronaEntry {
    SBPair pair;  // E[p,m]
    int row;      // = plateau depth
    Rational tangent_x;
    Conic conic;
};

/// E[p,m] for all tree nodes p/m ≤ 1 with row ≤ max_row, by tangent_x.
std::vector<XCoronaEntry> x_corona(int max_row);

struct NeighborTangency {
    SBPair neighbor;
    Point<Rational> point;
};

struct ParabolicEntry {
    SBPair pair;  // F[p,q]
    int row;      // tree row; 0 for the axes
    int depth;    // row + 1; 0 for the axes
    bool axis;    // F[1,0] is the x-axis, F[0,1] the y-axis
    Point<Rational> point;  // contact with the parabola
    std::vector<NeighborTangency> tangencies;  // with the two generating ancestors
};

/// Axes first, then tree rows 1..max_row, each row by increasing p/q.
std::vector<ParabolicEntry> parabolic_corona(int max_row);

struct DiagonalEntry {
    int n;
    SBPair lower;  // E[1,n]
    SBPair upper;  // E[1,n+1]
    Point<Rational> point;      // (1/(2n(n+1)), 1/(2n(n+1)))
    Point<Rational> y_contact;  // E[1,n+1] ∩ (x = 0) = (0, 1/(n+1)²)
};

/// n = 1..count.
std::vector<DiagonalEntry> diagonal_chain(int count);

struct MainChainEntry {
    int n;
    SBPair lower;  // E[n−1,n]
    SBPair upper;  // E[n,n+1]
    Point<Rational> point;  // ((n−1)/(n+1), 1/(2n(n+1)))
};

/// n = 2..count; every point is cross-checked against tangency_point.
std::vector<MainChainEntry> main_chain(int count);

/// Barycentric images of the three tangency families.
std::array<Rational, 3> barycentric_main_chain(int n);
std::array<Rational, 3> barycentric_parabola_contact(int n);
std::array<Rational, 3> barycentric_diagonal(int n);

}  // namespace apollo
