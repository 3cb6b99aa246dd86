#include "apollo/descartes.hpp"

#include <algorithm>

namespace apollo {

Completions<QuadValue> completions(const Tricycle<Rational>& t) {
    const Rational q = t[0] * t[1] + t[1] * t[2] + t[2] * t[0];
    if (q.sign() < 0) throw DomainError("tricycle is not completable: ab+bc+ca < 0");
    const Rational sum = t[0] + t[1] + t[2];
    return {QuadValue(sum, Rational(-2), q), QuadValue(sum, Rational(2), q)};
}

bool satisfies_descartes(const Quadruple<double>& q, double tolerance) {
    double scale = 1.0;
    for (double k : q) scale = std::max(scale, std::abs(k));
    return std::abs(descartes_residual(q)) <= tolerance * scale * scale;
}

bool satisfies_descartes(const Quadruple<QuadValue>& q) { return descartes_residual(q).sign() == 0; }

Tricycle<QuadValue> lift(const Tricycle<Rational>& t, const Rational& D) {
    return {QuadValue(t[0], D), QuadValue(t[1], D), QuadValue(t[2], D)};
}

Quadruple<QuadValue> lift(const Quadruple<Rational>& q, const Rational& D) {
    return {QuadValue(q[0], D), QuadValue(q[1], D), QuadValue(q[2], D), QuadValue(q[3], D)};
}

}  // namespace apollo
