#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "apollo/big_float.hpp"
#include "apollo/descartes.hpp"
#include "apollo/quad_value.hpp"
#include "apollo/rational.hpp"

namespace apollo {

inline constexpr int kDefaultCap = 21;
// Float trajectories that shrink below this are treated as non-terminating.
inline constexpr double kUnderflowGuard = 1e-300;

enum class DepthKind { Finite, ReachedCap };

struct DepthOptions {
    int cap = kDefaultCap;
    bool trace = false;
};

/// Finite(steps) or ReachedCap(cap). For Finite, `terminal` is the first
/// nonpositive value produced (the major curvature) and, when requested,
/// `trace[i]` is the triple after step i+1.
template <class T>
struct DepthResult {
    DepthKind kind = DepthKind::Finite;
    int steps = 0;
    int cap = kDefaultCap;
    std::optional<T> terminal;
    std::vector<Tricycle<T>> trace;

    bool finite() const { return kind == DepthKind::Finite; }
    bool reached_cap() const { return kind == DepthKind::ReachedCap; }
};

/// Index of the greatest entry, lowest index on ties.
template <class T, class Greater>
std::size_t argmax(const Tricycle<T>& t, Greater greater) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < 3; ++j)
        if (greater(t[j], t[best])) best = j;
    return best;
}

/// Exact Apollonian depth of a rational tricycle. Every curvature of the
/// trajectory lies in Q[√(ab+bc+ca)].
DepthResult<QuadValue> depth(const Tricycle<Rational>& t, DepthOptions options = {});

/// δ(1, x, y).
DepthResult<QuadValue> depth_scaled(const Rational& x, const Rational& y, DepthOptions options = {});

/// Float-mode depth over any real type providing arithmetic, ordering and
/// sqrt (double, BigFloat).
template <class Real>
DepthResult<Real> depth_float(Tricycle<Real> t, DepthOptions options = {}) {
    using std::sqrt;
    if (options.cap < 1) throw UsageError("depth cap must be at least 1");
    DepthResult<Real> result;
    result.cap = options.cap;
    const Real zero(0.0);
    for (const Real& v : t) {
        if (!(zero < v)) {
            result.terminal = v;
            return result;
        }
    }
    const Real guard(kUnderflowGuard);
    for (int step = 1; step <= options.cap; ++step) {
        const std::size_t i = argmax(t, [](const Real& a, const Real& b) { return b < a; });
        const Real root = sqrt(t[0] * t[1] + t[1] * t[2] + t[2] * t[0]);
        Real next = (t[0] + t[1] + t[2]) - (root + root);
        t[i] = next;
        if (options.trace) result.trace.push_back(t);
        if (!(zero < next)) {
            result.steps = step;
            result.terminal = std::move(next);
            return result;
        }
        if (next < guard) break;
    }
    result.kind = DepthKind::ReachedCap;
    result.steps = options.cap;
    return result;
}

template <class Real>
DepthResult<Real> depth_scaled_float(const Real& x, const Real& y, DepthOptions options = {}) {
    return depth_float<Real>({Real(1.0), x, y}, options);
}

/// The first nonpositive curvature of the process (signed); absent when the
/// cap is reached.
std::optional<QuadValue> major_curvature(const Tricycle<Rational>& t, int cap = kDefaultCap);
std::optional<double> major_curvature_float(const Tricycle<double>& t, int cap = kDefaultCap);

/// (φ−√φ, 1, φ+√φ).
Tricycle<double> golden_seed();
Tricycle<BigFloat> golden_seed(mpfr_prec_t bits);
/// (φ−√φ, (φ−√φ)²), the moduli image of the golden seed.
std::pair<double, double> golden_moduli_point();
/// Working precision that keeps the golden trajectory positive for `cap`
/// steps (rounding error grows by a factor ≈ φ+√φ per step).
mpfr_prec_t golden_precision_bits(int cap);

}  // namespace apollo
