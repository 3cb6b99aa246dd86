#pragma once

#include <array>
#include <optional>
#include <string>

#include "apollo/coordinates.hpp"
#include "apollo/rational.hpp"
#include "apollo/stern_brocot.hpp"

namespace apollo {

/// A x² + B xy + C y² + D x + E y + F = 0, stored with coprime integer
/// coefficients whose first nonzero entry is positive. For ellipses this
/// makes the form negative inside.
class Conic {
public:
    /// Throws DomainError when A..E all vanish.
    Conic(Rational A, Rational B, Rational C, Rational D, Rational E, Rational F);
    explicit Conic(const std::array<Rational, 6>& coefficients);

    const Rational& A() const noexcept { return c_[0]; }
    const Rational& B() const noexcept { return c_[1]; }
    const Rational& C() const noexcept { return c_[2]; }
    const Rational& D() const noexcept { return c_[3]; }
    const Rational& E() const noexcept { return c_[4]; }
    const Rational& F() const noexcept { return c_[5]; }
    const std::array<Rational, 6>& coefficients() const noexcept { return c_; }

    /// No quadratic part: the conic is a line.
    bool degenerate() const;
    bool is_ellipse() const;
    /// 4AC − B².
    Rational discriminant() const;
    std::string to_string() const;

    friend bool operator==(const Conic&, const Conic&) = default;

private:
    std::array<Rational, 6> c_;
};

/// (αx + βy)² + f = 4xy + gx + hy, the normalization used for plateau
/// ellipses tangent to the x-axis (there g = 2).
struct DisplayForm {
    Rational alpha, beta, f, g, h;

    Conic to_conic() const;
    friend bool operator==(const DisplayForm&, const DisplayForm&) = default;
};

/// Recovers the display normalization of a conic whose quadratic part,
/// after adding 4xy, is a perfect square with rational coefficients.
/// The scaling is fixed by the 4xy term; α > 0.
std::optional<DisplayForm> display_form(const Conic& c);

Rational conic_eval(const Conic& c, const Point<Rational>& pt);
double conic_eval(const Conic& c, const Point<double>& pt);

/// Double root of the restriction to y = 0, if the discriminant is zero.
std::optional<Rational> conic_tangency_x(const Conic& c);
/// Discriminant D² − 4AF of the restriction to y = 0.
Rational x_restriction_discriminant(const Conic& c);

/// Center of an ellipse. Throws DomainError for non-ellipses.
Point<Rational> interior_point(const Conic& c);

/// x² − 2xy + y² − 2x − 2y + 1 = 0.
Conic parabola_conic();
/// 36(x+y−1/3)² + 12(x−y)² = 1.
Conic depth2_conic();

/// The x-corona ellipse E[p,m]. E[1,1] is the parabola; E[0,1] is the line
/// x = 0 (degenerate). Throws DomainError unless 0 ≤ p ≤ m, m ≥ 1, coprime.
Conic corona_conic(std::int64_t p, std::int64_t m);
/// Display form of E[p,m], p ≥ 1.
DisplayForm corona_display(std::int64_t p, std::int64_t m);

/// E[p,m] ∩ E[q,n] for |pn − qm| = 1.
Point<Rational> tangency_point(std::int64_t p, std::int64_t m, std::int64_t q, std::int64_t n);

struct CoronaLabel {
    enum class Family { E, F };
    Family family;
    SBPair pair;

    std::string to_string() const;
    friend bool operator==(const CoronaLabel&, const CoronaLabel&) = default;
};

/// E[p+q, m+n], inscribed between E[p,m], E[q,n] and the x-axis.
CoronaLabel mediant_ellipse(std::int64_t p, std::int64_t m, std::int64_t q, std::int64_t n);

/// (p²/n², q²/n²) with n = p+q: where F[p,q] touches the parabola.
Point<Rational> parabola_point(std::int64_t p, std::int64_t q);

/// F[p,q] ∩ F[p',q'] for unimodular neighbours.
Point<Rational> parabolic_tangency(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2);

}  // namespace apollo
