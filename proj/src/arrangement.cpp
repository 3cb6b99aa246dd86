#include "apollo/arrangement.hpp"

#include <map>
#include <optional>

#include "json.hpp"

#include "apollo/errors.hpp"

namespace apollo {

namespace {

Affine add(const Affine& a, const Affine& b) { return {a.c0 + b.c0, a.cx + b.cx, a.cy + b.cy}; }
Affine scale(const Affine& a, const Rational& k) { return {a.c0 * k, a.cx * k, a.cy * k}; }

// Index of an unknown, or nullopt for the fixed symbols.
std::optional<std::size_t> unknown_index(const ArrangementSpec& spec, const std::string& s) {
    for (std::size_t i = 0; i < spec.unknowns.size(); ++i)
        if (spec.unknowns[i] == s) return i;
    return std::nullopt;
}

Affine fixed_symbol(const std::string& s) {
    if (s == "0") return {Rational(0), Rational(0), Rational(0)};
    if (s == "1") return {Rational(1), Rational(0), Rational(0)};
    if (s == "x") return {Rational(0), Rational(1), Rational(0)};
    if (s == "y") return {Rational(0), Rational(0), Rational(1)};
    throw UsageError("unknown arrangement symbol: " + s);
}

// Quadratic polynomial in x, y as coefficients of x², xy, y², x, y, 1.
using Poly = std::array<Rational, 6>;

Poly product(const Affine& a, const Affine& b) {
    return {a.cx * b.cx,
            a.cx * b.cy + a.cy * b.cx,
            a.cy * b.cy,
            a.cx * b.c0 + a.c0 * b.cx,
            a.cy * b.c0 + a.c0 * b.cy,
            a.c0 * b.c0};
}

}  // namespace

std::vector<Affine> solve_chain(const ArrangementSpec& spec) {
    const std::size_t n = spec.unknowns.size();
    if (spec.linear.size() != n) throw UsageError("underdetermined arrangement: need one linear relation per unknown");
    for (std::size_t i = 0; i < n; ++i)
        for (const std::string& f : {std::string("0"), std::string("1"), std::string("x"), std::string("y")})
            if (spec.unknowns[i] == f) throw UsageError("unknown name clashes with a fixed symbol: " + f);

    // Row i: Σ M[i][j] s_j = rhs[i] with rhs affine in x, y.
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Affine> rhs(n, Affine{Rational(0), Rational(0), Rational(0)});
    for (std::size_t i = 0; i < n; ++i) {
        auto put = [&](const std::string& s, const Rational& k) {
            if (auto j = unknown_index(spec, s))
                M[i][*j] += k;
            else
                rhs[i] = add(rhs[i], scale(fixed_symbol(s), -k));
        };
        for (const auto& s : spec.linear[i].pair) put(s, Rational(1));
        for (const auto& s : spec.linear[i].triple) put(s, Rational(-2));
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && M[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw UsageError("underdetermined arrangement: singular linear system");
        std::swap(M[pivot], M[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = Rational(1) / M[col][col];
        for (auto& v : M[col]) v *= inv;
        rhs[col] = scale(rhs[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            const Rational k = M[r][col];
            for (std::size_t c = 0; c < n; ++c) M[r][c] -= k * M[col][c];
            rhs[r] = add(rhs[r], scale(rhs[col], -k));
        }
    }
    return rhs;
}

Conic derive_conic(const ArrangementSpec& spec) {
    const auto solved = solve_chain(spec);
    std::array<Affine, 4> k;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& s = spec.quadratic[i];
        const auto j = unknown_index(spec, s);
        k[i] = j ? solved[*j] : fixed_symbol(s);
    }
    // (Σk)² − 2Σk²
    Affine sum = k[0];
    for (std::size_t i = 1; i < 4; ++i) sum = add(sum, k[i]);
    Poly poly = product(sum, sum);
    for (const auto& ki : k) {
        const Poly sq = product(ki, ki);
        for (std::size_t c = 0; c < 6; ++c) poly[c] -= Rational(2) * sq[c];
    }
    return Conic(poly);
}

ArrangementSpec arrangement_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        ArrangementSpec spec;
        spec.name = j.value("name", std::string());
        spec.unknowns = j.at("unknowns").get<std::vector<std::string>>();
        for (const auto& rel : j.at("linear")) {
            ArrangementSpec::Linear l;
            l.pair = rel.at("pair").get<std::array<std::string, 2>>();
            l.triple = rel.at("triple").get<std::array<std::string, 3>>();
            spec.linear.push_back(std::move(l));
        }
        spec.quadratic = j.at("quadratic").get<std::array<std::string, 4>>();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad arrangement JSON: ") + e.what());
    }
}

std::string arrangement_to_json(const ArrangementSpec& spec) {
    nlohmann::json j;
    j["name"] = spec.name;
    j["unknowns"] = spec.unknowns;
    j["linear"] = nlohmann::json::array();
    for (const auto& l : spec.linear) j["linear"].push_back({{"pair", l.pair}, {"triple", l.triple}});
    j["quadratic"] = spec.quadratic;
    return j.dump(2);
}

ArrangementSpec case1_spec() {
    return {"case1",
            {"s1", "s2", "s3"},
            {{{"0", "s2"}, {"x", "y", "s1"}}, {{"s1", "s3"}, {"x", "y", "s2"}}, {{"s2", "1"}, {"x", "y", "s3"}}},
            {"0", "s1", "x", "y"}};
}

ArrangementSpec case1_5_spec() {
    auto spec = case1_spec();
    spec.name = "case1_5";
    spec.quadratic = {"1", "s3", "x", "y"};
    return spec;
}

ArrangementSpec case2_spec() {
    return {"case2",
            {"s1", "s2", "s3"},
            {{{"0", "s2"}, {"s1", "s3", "y"}}, {{"s1", "x"}, {"s2", "s3", "y"}}, {{"s3", "1"}, {"x", "y", "s2"}}},
            {"1", "x", "y", "s2"}};
}

}  // namespace apollo
