#include "apollo/dust.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <set>
#include <utility>

#include "apollo/errors.hpp"

namespace apollo {

namespace {

Circle reflect_circle(const std::array<Circle, 4>& q, std::size_t i) {
    Circle out{0, 0, 0};
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == i) continue;
        out.k += 2 * q[j].k;
        out.wx += 2 * q[j].wx;
        out.wy += 2 * q[j].wy;
    }
    out.k -= q[i].k;
    out.wx -= q[i].wx;
    out.wy -= q[i].wy;
    return out;
}

// Grid key for deduplication at a resolution far below any feature size.
std::array<long long, 3> key_of(const Circle& c) {
    constexpr double grid = 1e-7;
    return {std::llround(c.k / grid), std::llround(c.cx() / grid), std::llround(c.cy() / grid)};
}

}  // namespace

bool tangent(const Circle& a, const Circle& b, double tolerance) {
    const double d = std::hypot(a.cx() - b.cx(), a.cy() - b.cy());
    return std::abs(d - std::abs(a.radius() + b.radius())) <= tolerance;
}

bool is_descartes_configuration(const std::array<Circle, 4>& q, double tolerance) {
    Quadruple<double> k{q[0].k, q[1].k, q[2].k, q[3].k};
    if (!satisfies_descartes(k, tolerance)) return false;
    using C = std::complex<double>;
    C sum = 0, squares = 0;
    double scale = 1;
    for (const auto& c : q) {
        const C w(c.wx, c.wy);
        sum += w;
        squares += w * w;
        scale = std::max(scale, std::abs(w));
    }
    if (std::abs(sum * sum - 2.0 * squares) > tolerance * scale * scale) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!tangent(q[i], q[j], tolerance)) return false;
    return true;
}

std::array<Circle, 4> window_seed() {
    return {Circle{-1, 0, 0}, Circle{2, -1, 0}, Circle{2, 1, 0}, Circle{3, 0, 2}};
}

std::vector<Circle> packing_circles(const std::array<Circle, 4>& seed, double curvature_bound) {
    std::vector<Circle> circles;
    std::set<std::array<long long, 3>> seen;
    auto add = [&](const Circle& c) {
        if (seen.insert(key_of(c)).second) circles.push_back(c);
    };
    for (const auto& c : seed)
        if (c.k <= curvature_bound) add(c);
    // (quadruple, index just created); the root reflects every position
    std::deque<std::pair<std::array<Circle, 4>, int>> queue{{seed, -1}};
    while (!queue.empty()) {
        auto [q, last] = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < 4; ++i) {
            if (static_cast<int>(i) == last) continue;
            const Circle c = reflect_circle(q, i);
            if (c.k > curvature_bound || (last >= 0 && c.k <= q[i].k)) continue;
            add(c);
            auto next = q;
            next[i] = c;
            queue.emplace_back(next, static_cast<int>(i));
        }
    }
    return circles;
}

std::vector<DustPoint> dust_points(const std::array<Circle, 4>& seed, double curvature_bound) {
    if (!is_descartes_configuration(seed)) throw DomainError("dust seed is not a Descartes configuration");
    for (const auto& c : seed)
        if (!(curvature_bound > c.k)) throw DomainError("curvature bound must exceed every seed curvature");
    const auto circles = packing_circles(seed, curvature_bound);
    const std::size_t n = circles.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (tangent(circles[i], circles[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<DustPoint> out;
    std::set<std::pair<long long, long long>> seen;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : adj[i]) {
            if (j <= i) continue;
            for (std::size_t l : adj[j]) {
                if (l <= j) continue;
                if (std::find(adj[i].begin(), adj[i].end(), l) == adj[i].end()) continue;
                Tricycle<double> t{circles[i].k, circles[j].k, circles[l].k};
                if (t[0] <= 0 || t[1] <= 0 || t[2] <= 0) continue;
                std::sort(t.begin(), t.end());
                const auto pt = reduce_to_moduli(t);
                if (seen.insert({std::llround(pt.x * 1e12), std::llround(pt.y * 1e12)}).second) out.push_back({t, pt});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DustPoint& a, const DustPoint& b) {
        return std::pair(a.moduli.x, a.moduli.y) < std::pair(b.moduli.x, b.moduli.y);
    });
    return out;
}

}  // namespace apollo
