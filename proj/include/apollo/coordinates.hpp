#pragma once

#include <array>
#include <cstddef>

#include "apollo/descartes.hpp"
#include "apollo/errors.hpp"

namespace apollo {

template <class T>
struct Point {
    T x;
    T y;
    friend bool operator==(const Point&, const Point&) = default;
};

/// (a, b, c) ↦ (a/c, b/c) with c the greatest entry (lowest index on ties);
/// the two other entries keep their input order. Entries must be positive.
template <class T>
Point<T> reduce_to_moduli(const Tricycle<T>& t) {
    const T zero(0);
    for (const T& v : t)
        if (!(zero < v)) throw DomainError("reduce_to_moduli needs positive curvatures");
    std::size_t c = 0;
    for (std::size_t j = 1; j < 3; ++j)
        if (t[c] < t[j]) c = j;
    const std::size_t a = c == 0 ? 1 : 0;
    const std::size_t b = c == 2 ? 1 : 2;
    return {t[a] / t[c], t[b] / t[c]};
}

/// Normalizes a triple to sum 1.
template <class T>
std::array<T, 3> barycentric(const Tricycle<T>& t) {
    const T sum = t[0] + t[1] + t[2];
    if (sum == T(0)) throw DomainError("barycentric coordinates need a nonzero sum");
    return {t[0] / sum, t[1] / sum, t[2] / sum};
}

}  // namespace apollo
