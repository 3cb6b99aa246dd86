#include "apollo/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "apollo/arrangement.hpp"
#include "apollo/conic.hpp"
#include "apollo/coordinates.hpp"
#include "apollo/corona.hpp"
#include "apollo/depth.hpp"
#include "apollo/errors.hpp"
#include "apollo/registry.hpp"

namespace apollo {

void Report::add(std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

void Report::add(std::string name, std::string expected, std::string actual, bool pass) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["notes"] = notes;
    j["passed"] = passed();
    j["failures"] = failures();
    return j;
}

namespace {

std::string text(const Point<Rational>& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

std::string e_label(std::int64_t p, std::int64_t m) { return "E[" + std::to_string(p) + "," + std::to_string(m) + "]"; }
std::string f_label(const SBPair& s) { return "F[" + std::to_string(s.p()) + "," + std::to_string(s.q()) + "]"; }

int exact_depth_at(const Point<Rational>& pt) {
    // cap well above any plateau probed here; ReachedCap reads as −1
    const auto r = depth_scaled(pt.x, pt.y, {2000, false});
    return r.finite() ? r.steps : -1;
}

Point<Rational> step_toward(const Point<Rational>& from, const Point<Rational>& to, const Rational& eps) {
    const Rational dx = to.x - from.x, dy = to.y - from.y;
    const Rational s = std::max(abs(dx), abs(dy));
    return {from.x + eps * dx / s, from.y + eps * dy / s};
}

// Conic coefficients in binary64 for fast sampling.
struct FastConic {
    std::array<double, 6> c;
    explicit FastConic(const Conic& k) {
        for (int i = 0; i < 6; ++i) c[i] = k.coefficients()[i].to_double();
    }
    double eval(double x, double y) const { return c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x + c[4] * y + c[5]; }
};

int depth_of_x_member(const SBPair& s) { return s.p() == 0 ? 0 : sb_row_of(s); }
int depth_of_f_member(const SBPair& s) { return (s.p() == 0 || s.q() == 0) ? 0 : sb_row_of(s) + 1; }

}  // namespace

Report verify_corona(int max_row, int samples_per_ellipse, std::uint64_t seed) {
    Report rep{"theorem1", {}, {}};
    const auto corona = x_corona(max_row);
    std::vector<XCoronaEntry> ellipses;
    for (const auto& e : corona)
        if (e.pair.p() < e.pair.q()) ellipses.push_back(e);

    // (A) tangency with the x-axis at p²/m², exact double root
    for (const auto& e : corona) {
        const std::string name = "A tangency " + e_label(e.pair.p(), e.pair.q());
        const auto t = conic_tangency_x(e.conic);
        rep.add(name + " x", e.pair.squared().to_string(), t ? t->to_string() : "none");
        rep.add(name + " discriminant", "0", x_restriction_discriminant(e.conic).to_string());
    }

    // (B) mediants and (C) tangency points for unimodular neighbours, with x = 0 included
    std::vector<SBPair> members{SBPair(0, 1)};
    for (const auto& e : corona) members.push_back(e.pair);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const SBPair& a = members[i];
            const SBPair& b = members[j];
            if (!unimodular(a, b)) continue;
            const std::string pair_name = e_label(a.p(), a.q()) + "," + e_label(b.p(), b.q());
            const auto pt = tangency_point(a.p(), a.q(), b.p(), b.q());
            rep.add("C on " + e_label(a.p(), a.q()) + " at " + pair_name, "0",
                    conic_eval(corona_conic(a.p(), a.q()), pt).to_string());
            rep.add("C on " + e_label(b.p(), b.q()) + " at " + pair_name, "0",
                    conic_eval(corona_conic(b.p(), b.q()), pt).to_string());
            const auto med = mediant_ellipse(a.p(), a.q(), b.p(), b.q());
            const SBPair m = med.pair;
            if (m.p() <= m.q() && sb_row_of(m) <= max_row) {
                const auto t = conic_tangency_x(corona_conic(m.p(), m.q()));
                rep.add("B mediant of " + pair_name, Rational(Rational(a.p() + b.p(), a.q() + b.q()) * Rational(a.p() + b.p(), a.q() + b.q())).to_string(),
                        t ? t->to_string() : "none");
            }
        }
    }

    // (D) depth inside each plateau equals the row
    rep.add("D depth inside E[1,1] at (3/5, 3/5)", "1", std::to_string(exact_depth_at({Rational(3, 5), Rational(3, 5)})));
    for (const auto& e : ellipses) {
        const auto c = interior_point(e.conic);
        rep.add("D center depth " + e_label(e.pair.p(), e.pair.q()) + " " + text(c), std::to_string(e.row),
                std::to_string(exact_depth_at(c)));
    }

    // (B) interiors pairwise disjoint, sampled
    std::vector<FastConic> regions;
    std::vector<const Conic*> exact_regions;
    for (const auto& e : corona) {
        regions.emplace_back(e.conic);
        exact_regions.push_back(&e.conic);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (const auto& e : ellipses) {
        const Conic& k = e.conic;
        const auto center = interior_point(k);
        const double cx = center.x.to_double(), cy = center.y.to_double();
        const FastConic self(k);
        const double fc = self.eval(cx, cy);
        const double det = k.discriminant().to_double();
        const double hx = std::sqrt(-4 * self.c[2] * fc / det), hy = std::sqrt(-4 * self.c[0] * fc / det);
        const std::size_t self_index =
            static_cast<std::size_t>(std::find_if(corona.begin(), corona.end(), [&](const auto& c) { return c.pair == e.pair; }) -
                                     corona.begin());
        int taken = 0, violations = 0;
        while (taken < samples_per_ellipse) {
            const double x = cx + hx * unit(rng), y = cy + hy * unit(rng);
            if (!(self.eval(x, y) < 0)) continue;
            ++taken;
            for (std::size_t r = 0; r < regions.size(); ++r) {
                if (r == self_index) continue;
                const double v = regions[r].eval(x, y);
                if (v > 1e-9) continue;
                const Point<Rational> p{Rational::from_double(x), Rational::from_double(y)};
                if (conic_eval(*exact_regions[r], p).sign() < 0 && conic_eval(k, p).sign() < 0) ++violations;
            }
        }
        rep.add("B disjoint interior " + e_label(e.pair.p(), e.pair.q()) + " (" + std::to_string(taken) + " samples)", "0",
                std::to_string(violations));
    }
    return rep;
}

Report verify_registry() {
    Report rep{"appendixB", {}, {}};
    const auto& reg = appendix_b_registry();
    rep.add("entry count", "23", std::to_string(reg.size()));
    for (const auto& e : reg) {
        const std::string& L = e.label;
        if (e.corona) {
            const auto& pr = *e.corona;
            rep.add(L + " equals corona " + e_label(pr.p(), pr.q()), corona_conic(pr.p(), pr.q()).to_string(), e.conic.to_string());
        }
        const auto disp = display_form(e.conic);
        rep.add(L + " completed square leaves 4xy", "yes", disp ? "yes" : "no");
        if (disp) rep.add(L + " display normalization round-trip", "yes", *disp == e.display ? "yes" : "no");
        if (e.conic.is_ellipse()) {
            const auto c = interior_point(e.conic);
            rep.add(L + " center depth " + text(c), std::to_string(e.depth), std::to_string(exact_depth_at(c)));
        } else {
            rep.add(L + " depth at (3/5, 3/5)", std::to_string(e.depth), std::to_string(exact_depth_at({Rational(3, 5), Rational(3, 5)})));
        }
        const auto t = conic_tangency_x(e.conic);
        if (t && disp) rep.add(L + " x-coefficient of tangent entry", "2", disp->g.to_string());
        if (disp) {
            std::string note = L + ": free term " + disp->f.to_string() + ", x^2 coefficient " +
                               (disp->alpha * disp->alpha).to_string();
            if (disp->f * disp->alpha * disp->alpha == Rational(1))
                note += " (reciprocal" + std::string(t && *t == disp->f ? ", equals the x-axis contact)" : ")");
            rep.notes.push_back(std::move(note));
        }
        if (!e.erratum.empty()) rep.notes.push_back(L + ": " + e.erratum);
    }

    const Conic case1 = derive_conic(case1_spec());
    const Conic case15 = derive_conic(case1_5_spec());
    const Conic case2 = derive_conic(case2_spec());
    rep.add("derive case1 = 4L_{1,1}", registry_lookup("4L_{1,1}").conic.to_string(), case1.to_string());
    rep.add("derive case1 = 16x^2+28xy+16y^2-2x-2y+1/16",
            Conic(16, 28, 16, -2, -2, Rational(1, 16)).to_string(), case1.to_string());
    rep.add("derive case1.5 = case1", case1.to_string(), case15.to_string());
    rep.add("derive case2 = 4L_{3,1}", registry_lookup("4L_{3,1}").conic.to_string(), case2.to_string());
    const Conic printed_case2(Rational(25, 9), Rational(22, 3), Rational(121, 25), -2, Rational(-34, 25), Rational(9, 25));
    if (printed_case2 != case2)
        rep.notes.push_back("case2 expanded print has xy coefficient 22/3; substitution gives " +
                            (Rational(case2.B()) / case2.A() * Rational(25, 9)).to_string());
    return rep;
}

Report verify_sequences(int max_n) {
    Report rep{"sequences", {}, {}};
    const Conic parabola = parabola_conic();
    const Rational eps(1, 10000000);
    for (const auto& e : main_chain(max_n)) {
        const int n = e.n;
        const std::string N = "n=" + std::to_string(n);
        rep.add("main chain " + N + " point", text(tangency_point(n - 1, n, n, n + 1)), text(e.point));
        rep.add("main chain " + N + " on " + e_label(n - 1, n), "0", conic_eval(corona_conic(n - 1, n), e.point).to_string());
        rep.add("main chain " + N + " on " + e_label(n, n + 1), "0", conic_eval(corona_conic(n, n + 1), e.point).to_string());
        rep.add("main chain " + N + " = F[n-1,1] ∩ F[n,1]", text(parabolic_tangency(n - 1, 1, n, 1)), text(e.point));
        rep.add("main chain " + N + " depth at point", std::to_string(n), std::to_string(exact_depth_at(e.point)));
        const auto deeper = step_toward(e.point, interior_point(corona_conic(n, n + 1)), eps);
        rep.add("main chain " + N + " depth past point", std::to_string(n + 1), std::to_string(exact_depth_at(deeper)));
    }
    for (int p = 1; p <= max_n; ++p) {
        const std::string P = "p=" + std::to_string(p);
        const Point<Rational> pt{Rational(p * p, (p + 1) * (p + 1)), Rational(1, (p + 1) * (p + 1))};
        rep.add("vertical alignment " + P + " parabola contact", text(parabola_point(p, 1)), text(pt));
        rep.add("vertical alignment " + P + " on parabola", "0", conic_eval(parabola, pt).to_string());
        rep.add("vertical alignment " + P + " on " + e_label(p, p + 1), "0", conic_eval(corona_conic(p, p + 1), pt).to_string());
        const auto t = conic_tangency_x(corona_conic(p, p + 1));
        rep.add("vertical alignment " + P + " x matches axis contact", pt.x.to_string(), t ? t->to_string() : "none");
    }
    for (const auto& d : diagonal_chain(max_n)) {
        const int n = d.n;
        const std::string N = "n=" + std::to_string(n);
        const Rational t(1, 2L * n * (n + 1));
        rep.add("diagonal " + N + " point", text({t, t}), text(d.point));
        rep.add("diagonal " + N + " on " + e_label(1, n), "0", conic_eval(corona_conic(1, n), d.point).to_string());
        rep.add("diagonal " + N + " on " + e_label(1, n + 1), "0", conic_eval(corona_conic(1, n + 1), d.point).to_string());
        rep.add("diagonal " + N + " depth at point", std::to_string(n), std::to_string(exact_depth_at(d.point)));
        const Point<Rational> contact{Rational(0), Rational(1, long(n + 1) * (n + 1))};
        rep.add("diagonal " + N + " y-axis contact", text(contact), text(d.y_contact));
        const Conic k = corona_conic(1, n + 1);
        rep.add("diagonal " + N + " contact on " + e_label(1, n + 1), "0", conic_eval(k, d.y_contact).to_string());
        // restricted to x = 0 the ellipse has a double root at the contact
        const Rational disc = k.E() * k.E() - Rational(4) * k.C() * k.F();
        rep.add("diagonal " + N + " x=0 restriction discriminant", "0", disc.to_string());
    }
    return rep;
}

Report verify_barycentric(int max_n) {
    Report rep{"barycentric", {}, {}};
    auto sum = [](const std::array<Rational, 3>& t) { return (t[0] + t[1] + t[2]).to_string(); };
    auto moduli = [](const std::array<Rational, 3>& t) { return text(reduce_to_moduli<Rational>(t)); };
    for (int n = 1; n <= max_n; ++n) {
        const std::string N = "n=" + std::to_string(n);
        rep.add("main chain sum " + N, "1", sum(barycentric_main_chain(n)));
        rep.add("parabola contact sum " + N, "1", sum(barycentric_parabola_contact(n)));
        rep.add("diagonal sum " + N, "1", sum(barycentric_diagonal(n)));
        if (n < 2) continue;
        // each family maps back to its moduli point, with the coordinates swapped
        const Point<Rational> eq9{Rational(1, 2L * n * (n + 1)), Rational(n - 1, n + 1)};
        rep.add("main chain to moduli " + N, text(eq9), moduli(barycentric_main_chain(n)));
        const Point<Rational> contact{Rational(1, long(n) * n), Rational(long(n - 1) * (n - 1), long(n) * n)};
        rep.add("parabola contact to moduli " + N, text(contact), moduli(barycentric_parabola_contact(n)));
        const Rational t(1, 2L * n * (n - 1));
        rep.add("diagonal to moduli " + N, text({t, t}), moduli(barycentric_diagonal(n)));
    }
    auto bary = [](long a, long b, long c) {
        const auto z = barycentric<Rational>({Rational(a), Rational(b), Rational(c)});
        return "(" + z[0].to_string() + ", " + z[1].to_string() + ", " + z[2].to_string() + ")";
    };
    rep.add("centroid (1,1,1)", "(1/3, 1/3, 1/3)", bary(1, 1, 1));
    rep.add("window seed (2,2,3)", "(2/7, 2/7, 3/7)", bary(2, 2, 3));
    rep.add("vertex (1,0,0)", "(1, 0, 0)", bary(1, 0, 0));
    return rep;
}

Report verify_probes(int max_row, const Rational& epsilon) {
    Report rep{"probes", {}, {}};
    const std::string eps_text = epsilon.to_string();

    // x-corona: members with the y-axis and the parabola included
    std::vector<SBPair> xs{SBPair(0, 1)};
    for (const auto& e : x_corona(max_row)) xs.push_back(e.pair);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            SBPair lo = xs[i], hi = xs[j];
            if (!unimodular(lo, hi)) continue;
            if (depth_of_x_member(lo) > depth_of_x_member(hi)) std::swap(lo, hi);
            const auto pt = tangency_point(lo.p(), lo.q(), hi.p(), hi.q());
            const std::string name = e_label(lo.p(), lo.q()) + "|" + e_label(hi.p(), hi.q()) + " at " + text(pt);
            const int d0 = exact_depth_at(pt);
            rep.add("x probe " + name + " point depth", std::to_string(depth_of_x_member(lo)), std::to_string(d0));
            // E[1,1] is the parabola, whose region contains (1, 1)
            const Point<Rational> target = hi == SBPair(1, 1) ? Point<Rational>{Rational(1), Rational(1)}
                                                              : interior_point(corona_conic(hi.p(), hi.q()));
            const int d1 = exact_depth_at(step_toward(pt, target, epsilon));
            rep.add("x probe " + name + " depth at +" + eps_text, "> " + std::to_string(d0), std::to_string(d1), d1 > d0);
        }
    }

    // parabolic corona: neighbour tangencies and parabola contacts
    const auto fc = parabolic_corona(max_row);
    for (std::size_t i = 0; i < fc.size(); ++i) {
        for (std::size_t j = i + 1; j < fc.size(); ++j) {
            SBPair lo = fc[i].pair, hi = fc[j].pair;
            if (!unimodular(lo, hi)) continue;
            if (depth_of_f_member(lo) > depth_of_f_member(hi)) std::swap(lo, hi);
            if (depth_of_f_member(hi) == 0) continue;
            const auto pt = parabolic_tangency(lo.p(), lo.q(), hi.p(), hi.q());
            const std::string name = f_label(lo) + "|" + f_label(hi) + " at " + text(pt);
            const int d0 = exact_depth_at(pt);
            rep.add("F probe " + name + " point depth", std::to_string(depth_of_f_member(lo)), std::to_string(d0));
            // the chord to hi's parabola contact runs inside hi
            const auto past = step_toward(pt, parabola_point(hi.p(), hi.q()), epsilon);
            const int d1 = exact_depth_at(past);
            rep.add("F probe " + name + " depth at +" + eps_text, "> " + std::to_string(d0), std::to_string(d1), d1 > d0);
        }
    }
    for (const auto& e : fc) {
        if (e.axis) continue;
        const std::string name = f_label(e.pair) + " parabola contact " + text(e.point);
        const int d0 = exact_depth_at(e.point);
        rep.add("P probe " + name + " point depth", "1", std::to_string(d0));
        const auto past = step_toward(e.point, e.tangencies.front().point, epsilon);
        const int d1 = exact_depth_at(past);
        rep.add("P probe " + name + " depth at +" + eps_text, "> " + std::to_string(d0), std::to_string(d1), d1 > d0);
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem1", "appendixB", "sequences", "barycentric", "probes"};
    return names;
}

Report run_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "theorem1") return verify_corona(options.max_row.value_or(6), options.samples_per_ellipse, options.seed);
    if (name == "appendixB") return verify_registry();
    if (name == "sequences") return verify_sequences();
    if (name == "barycentric") return verify_barycentric();
    if (name == "probes") return verify_probes(options.max_row.value_or(5), options.epsilon);
    throw UsageError("unknown verify suite: " + name);
}

}  // namespace apollo
