#include "apollo/conic.hpp"

#include <numeric>

#include "apollo/errors.hpp"

namespace apollo {

namespace {

std::array<Rational, 6> canonical(std::array<Rational, 6> c) {
    bool any = false;
    for (int i = 0; i < 5; ++i) any = any || !c[i].is_zero();
    if (!any) throw DomainError("conic has no x or y terms");
    mpz_class l = 1;
    for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    mpz_class g = 0;
    for (auto& v : c) {
        v *= Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.numerator().get_mpz_t());
    }
    int lead = 0;
    for (const auto& v : c) {
        if (!v.is_zero()) {
            lead = v.sign();
            break;
        }
    }
    const Rational scale = Rational(mpz_class(lead), g);
    for (auto& v : c) v *= scale;
    return c;
}

void check_unimodular(std::int64_t p, std::int64_t m, std::int64_t q, std::int64_t n) {
    const std::int64_t d = p * n - q * m;
    if (d != 1 && d != -1) throw DomainError("pairs are not unimodular neighbours (determinant must be ±1)");
}

}  // namespace

Conic::Conic(Rational A, Rational B, Rational C, Rational D, Rational E, Rational F)
    : Conic(std::array<Rational, 6>{std::move(A), std::move(B), std::move(C), std::move(D), std::move(E), std::move(F)}) {}

Conic::Conic(const std::array<Rational, 6>& coefficients) : c_(canonical(coefficients)) {}

bool Conic::degenerate() const { return A().is_zero() && B().is_zero() && C().is_zero(); }

Rational Conic::discriminant() const { return Rational(4) * A() * C() - B() * B(); }

bool Conic::is_ellipse() const { return discriminant().sign() > 0; }

std::string Conic::to_string() const {
    static const char* const names[6] = {"x^2", "xy", "y^2", "x", "y", ""};
    std::string out;
    for (int i = 0; i < 6; ++i) {
        const Rational& v = c_[i];
        if (v.is_zero()) continue;
        const Rational mag = abs(v);
        if (out.empty())
            out += v.sign() < 0 ? "-" : "";
        else
            out += v.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1) || i == 5) out += mag.to_string();
        out += names[i];
    }
    return out + " = 0";
}

Conic DisplayForm::to_conic() const {
    return Conic(alpha * alpha, Rational(2) * alpha * beta - Rational(4), beta * beta, -g, -h, f);
}

std::optional<DisplayForm> display_form(const Conic& c) {
    const Rational ac = c.A() * c.C();
    if (ac.sign() < 0) return std::nullopt;
    const auto root = exact_sqrt(ac);
    if (!root) return std::nullopt;
    // λ(±2√(AC) − B) = 4 fixes the scale; prefer αβ ≥ 0
    for (int sign : {1, -1}) {
        const Rational denom = Rational(2 * sign) * *root - c.B();
        if (denom.sign() <= 0) continue;
        const Rational lambda = Rational(4) / denom;
        const auto alpha = exact_sqrt(lambda * c.A());
        if (!alpha || alpha->is_zero()) continue;
        const Rational beta = (lambda * c.B() + Rational(4)) / (Rational(2) * *alpha);
        return DisplayForm{*alpha, beta, lambda * c.F(), -lambda * c.D(), -lambda * c.E()};
    }
    return std::nullopt;
}

Rational conic_eval(const Conic& c, const Point<Rational>& pt) {
    const Rational& x = pt.x;
    const Rational& y = pt.y;
    return c.A() * x * x + c.B() * x * y + c.C() * y * y + c.D() * x + c.E() * y + c.F();
}

double conic_eval(const Conic& c, const Point<double>& pt) {
    const double x = pt.x, y = pt.y;
    return c.A().to_double() * x * x + c.B().to_double() * x * y + c.C().to_double() * y * y +
           c.D().to_double() * x + c.E().to_double() * y + c.F().to_double();
}

Rational x_restriction_discriminant(const Conic& c) { return c.D() * c.D() - Rational(4) * c.A() * c.F(); }

std::optional<Rational> conic_tangency_x(const Conic& c) {
    if (c.A().is_zero() || !x_restriction_discriminant(c).is_zero()) return std::nullopt;
    return -c.D() / (Rational(2) * c.A());
}

Point<Rational> interior_point(const Conic& c) {
    const Rational det = c.discriminant();
    if (det.sign() <= 0) throw DomainError("interior_point needs an ellipse");
    return {(c.B() * c.E() - Rational(2) * c.C() * c.D()) / det, (c.B() * c.D() - Rational(2) * c.A() * c.E()) / det};
}

Conic parabola_conic() { return Conic(1, -2, 1, -2, -2, 1); }

Conic depth2_conic() {
    // 36(x+y−1/3)² + 12(x−y)² − 1
    return Conic(48, 48, 48, -24, -24, 3);
}

DisplayForm corona_display(std::int64_t p, std::int64_t m) {
    if (p < 1 || m < p || std::gcd(p, m) != 1) throw DomainError("E[p,m] needs coprime 1 ≤ p ≤ m");
    const Rational P(p), M(m);
    return DisplayForm{M / P, (P * P + M * M - Rational(1)) / (P * M), (P * P) / (M * M), Rational(2),
                       Rational(2) * (M * M - P * P + Rational(1)) / (M * M)};
}

Conic corona_conic(std::int64_t p, std::int64_t m) {
    if (p == 0) {
        if (m != 1) throw DomainError("E[0,m] exists only for m = 1");
        return Conic(0, 0, 0, 1, 0, 0);
    }
    return corona_display(p, m).to_conic();
}

Point<Rational> tangency_point(std::int64_t p, std::int64_t m, std::int64_t q, std::int64_t n) {
    check_unimodular(p, m, q, n);
    const Rational den = Rational(m * m + n * n - 1);
    return {Rational(p * p + q * q - 1) / den, Rational(1) / den};
}

std::string CoronaLabel::to_string() const {
    return std::string(family == Family::E ? "E" : "F") + pair.to_string();
}

CoronaLabel mediant_ellipse(std::int64_t p, std::int64_t m, std::int64_t q, std::int64_t n) {
    check_unimodular(p, m, q, n);
    return {CoronaLabel::Family::E, SBPair(p + q, m + n)};
}

Point<Rational> parabola_point(std::int64_t p, std::int64_t q) {
    if (p < 0 || q < 0 || p + q < 1) throw DomainError("parabola_point needs p, q ≥ 0 and p + q ≥ 1");
    const Rational n(p + q);
    return {Rational(p * p) / (n * n), Rational(q * q) / (n * n)};
}

Point<Rational> parabolic_tangency(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2) {
    const std::int64_t m = p + q, m2 = p2 + q2;
    check_unimodular(p, m, p2, m2);
    const Rational den(m * m + m2 * m2 - 1);
    return {Rational(p * p + p2 * p2 - 1) / den, Rational(q * q + q2 * q2 - 1) / den};
}

}  // namespace apollo
