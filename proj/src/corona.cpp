#include "apollo/corona.hpp"

#include <algorithm>

#include "apollo/errors.hpp"

namespace apollo {

std::vector<XCoronaEntry> x_corona(int max_row) {
    if (max_row < 1) throw UsageError("x_corona needs max_row ≥ 1");
    std::vector<XCoronaEntry> out;
    for (const SBNode& node : sb_tree(max_row)) {
        if (node.pair.p() > node.pair.q()) continue;
        out.push_back({node.pair, node.row, node.pair.squared(), corona_conic(node.pair.p(), node.pair.q())});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tangent_x < b.tangent_x; });
    return out;
}

std::vector<ParabolicEntry> parabolic_corona(int max_row) {
    if (max_row < 1) throw UsageError("parabolic_corona needs max_row ≥ 1");
    std::vector<ParabolicEntry> out;
    out.push_back({SBPair(1, 0), 0, 0, true, parabola_point(1, 0), {}});
    out.push_back({SBPair(0, 1), 0, 0, true, parabola_point(0, 1), {}});
    auto nodes = sb_tree(max_row);
    std::stable_sort(nodes.begin(), nodes.end(), [](const SBNode& a, const SBNode& b) { return a.row < b.row; });
    for (const SBNode& node : nodes) {
        const auto& pr = node.pair;
        ParabolicEntry e{pr, node.row, node.row + 1, false, parabola_point(pr.p(), pr.q()), {}};
        for (const SBPair& nb : {node.left, node.right})
            e.tangencies.push_back({nb, parabolic_tangency(pr.p(), pr.q(), nb.p(), nb.q())});
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<DiagonalEntry> diagonal_chain(int count) {
    if (count < 1) throw UsageError("diagonal_chain needs count ≥ 1");
    std::vector<DiagonalEntry> out;
    for (int n = 1; n <= count; ++n) {
        const Rational t = Rational(1, 2L * n * (n + 1));
        const Point<Rational> pt{t, t};
        if (tangency_point(1, n, 1, n + 1) != pt) throw DefectError("diagonal chain point disagrees with tangency_point");
        out.push_back({n, SBPair(1, n), SBPair(1, n + 1), pt, tangency_point(1, n + 1, 0, 1)});
    }
    return out;
}

std::vector<MainChainEntry> main_chain(int count) {
    if (count < 2) throw UsageError("main_chain needs count ≥ 2");
    std::vector<MainChainEntry> out;
    for (int n = 2; n <= count; ++n) {
        const Point<Rational> pt{Rational(n - 1, n + 1), Rational(1, 2L * n * (n + 1))};
        if (tangency_point(n - 1, n, n, n + 1) != pt) throw DefectError("main chain point disagrees with tangency_point");
        out.push_back({n, SBPair(n - 1, n), SBPair(n, n + 1), pt});
    }
    return out;
}

std::array<Rational, 3> barycentric_main_chain(int n) {
    const long d = 4L * n * n + 1;
    return {Rational(1, d), Rational(2L * n * (n - 1), d), Rational(2L * n * (n + 1), d)};
}

std::array<Rational, 3> barycentric_parabola_contact(int n) {
    const long d = 2L * (n * n - n + 1);
    return {Rational(1, d), Rational(long(n - 1) * (n - 1), d), Rational(long(n) * n, d)};
}

std::array<Rational, 3> barycentric_diagonal(int n) {
    const long d = long(n) * n - n + 1;
    return {Rational(long(n) * (n - 1), d), Rational(1, 2 * d), Rational(1, 2 * d)};
}

}  // namespace apollo
