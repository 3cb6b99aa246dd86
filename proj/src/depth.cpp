#include "apollo/depth.hpp"

#include "apollo/errors.hpp"

namespace apollo {

namespace {

bool greater(const QuadValue& a, const QuadValue& b) { return quad_compare(a, b) > 0; }

}  // namespace

DepthResult<QuadValue> depth(const Tricycle<Rational>& t, DepthOptions options) {
    if (options.cap < 1) throw UsageError("depth cap must be at least 1");
    DepthResult<QuadValue> result;
    result.cap = options.cap;
    for (const Rational& v : t) {
        if (v.sign() <= 0) {
            result.terminal = QuadValue(v);
            return result;
        }
    }
    // Step 1 roots the seed radicand; afterwards the dropped maximum m and
    // its reflection 2·sum − m are the two completions, so no new roots.
    const Rational q0 = t[0] * t[1] + t[1] * t[2] + t[2] * t[0];
    Tricycle<QuadValue> cur = lift(t, q0);
    std::size_t i = argmax(cur, greater);
    const Rational sum0 = t[0] + t[1] + t[2];
    QuadValue dropped = cur[i];
    QuadValue next(sum0, Rational(-2), q0);
    cur[i] = next;
    for (int step = 1;; ++step) {
        if (options.trace) result.trace.push_back(cur);
        if (next.sign() <= 0) {
            result.steps = step;
            result.terminal = std::move(next);
            return result;
        }
        if (step >= options.cap) break;
        i = argmax(cur, greater);
        const QuadValue sum = cur[0] + cur[1] + cur[2];
        QuadValue other = sum + sum - dropped;
        next = quad_compare(other, dropped) < 0 ? std::move(other) : dropped;
        if (quad_compare(next, cur[i]) >= 0) throw DefectError("depth trajectory failed to decrease");
        dropped = std::move(cur[i]);
        cur[i] = next;
    }
    result.kind = DepthKind::ReachedCap;
    result.steps = options.cap;
    return result;
}

DepthResult<QuadValue> depth_scaled(const Rational& x, const Rational& y, DepthOptions options) {
    return depth({Rational(1), x, y}, options);
}

std::optional<QuadValue> major_curvature(const Tricycle<Rational>& t, int cap) {
    auto r = depth(t, {cap, false});
    if (!r.finite()) return std::nullopt;
    return r.terminal;
}

std::optional<double> major_curvature_float(const Tricycle<double>& t, int cap) {
    auto r = depth_float(t, {cap, false});
    if (!r.finite()) return std::nullopt;
    return r.terminal;
}

Tricycle<double> golden_seed() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double root = std::sqrt(phi);
    return {phi - root, 1.0, phi + root};
}

Tricycle<BigFloat> golden_seed(mpfr_prec_t bits) {
    const BigFloat one(1.0, bits);
    const BigFloat phi = (one + sqrt(BigFloat(5.0, bits))) / BigFloat(2.0, bits);
    const BigFloat root = sqrt(phi);
    return {phi - root, one, phi + root};
}

std::pair<double, double> golden_moduli_point() {
    const auto t = golden_seed(128);
    // (1/c, a/c): since (φ−√φ)(φ+√φ) = 1 this is (φ−√φ, (φ−√φ)²)
    const BigFloat x = t[1] / t[2];
    const BigFloat y = t[0] / t[2];
    return {x.to_double(), y.to_double()};
}

mpfr_prec_t golden_precision_bits(int cap) { return 64 + 2 * static_cast<mpfr_prec_t>(cap); }

}  // namespace apollo
