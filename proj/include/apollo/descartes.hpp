#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "apollo/errors.hpp"
#include "apollo/quad_value.hpp"
#include "apollo/rational.hpp"

namespace apollo {

// Curvatures of three (four) mutually tangent disks.
template <class T>
using Tricycle = std::array<T, 3>;
template <class T>
using Quadruple = std::array<T, 4>;

template <class T>
struct Completions {
    T minus;  // a+b+c − 2√(ab+bc+ca)
    T plus;   // a+b+c + 2√(ab+bc+ca)
};

/// Both disks completing a rational tricycle, exactly in Q[√(ab+bc+ca)].
/// Throws DomainError when ab+bc+ca < 0.
Completions<QuadValue> completions(const Tricycle<Rational>& t);

/// Floating-point completions; Real needs +,−,*, sqrt (found by ADL or std).
template <class Real>
Completions<Real> completions_float(const Tricycle<Real>& t) {
    using std::sqrt;
    const Real q = t[0] * t[1] + t[1] * t[2] + t[2] * t[0];
    if (q < Real(0)) throw DomainError("tricycle is not completable: ab+bc+ca < 0");
    const Real sum = t[0] + t[1] + t[2];
    const Real root = sqrt(q);
    return {sum - (root + root), sum + (root + root)};
}

/// Replaces entry `index` by its Apollonian reflection 2·(sum of others) − entry.
template <class T>
Quadruple<T> reflect(Quadruple<T> q, std::size_t index) {
    if (index > 3) throw UsageError("reflect index must be 0..3");
    T others = q[(index + 1) % 4];
    others = others + q[(index + 2) % 4];
    others = others + q[(index + 3) % 4];
    q[index] = others + others - q[index];
    return q;
}

/// (a+b+c+d)² − 2(a²+b²+c²+d²); zero exactly for a Descartes quadruple.
template <class T>
T descartes_residual(const Quadruple<T>& q) {
    T sum = q[0];
    T squares = q[0] * q[0];
    for (std::size_t i = 1; i < 4; ++i) {
        sum = sum + q[i];
        squares = squares + q[i] * q[i];
    }
    return sum * sum - (squares + squares);
}

/// Float Descartes test with tolerance scaled by the square of the largest
/// curvature magnitude.
bool satisfies_descartes(const Quadruple<double>& q, double tolerance = 1e-9);

/// Exact Descartes test; all entries must share one radicand.
bool satisfies_descartes(const Quadruple<QuadValue>& q);

/// Embeds rationals into Q[√D].
Tricycle<QuadValue> lift(const Tricycle<Rational>& t, const Rational& D);
Quadruple<QuadValue> lift(const Quadruple<Rational>& q, const Rational& D);

}  // namespace apollo
