#pragma once

#include <ostream>
#include <string>

#include "apollo/rational.hpp"

namespace apollo {

/// r + s·√D over a fixed rational radicand D ≥ 0.
///
/// D is kept as given (no square-free reduction). When D is the square of a
/// rational q the value collapses to (r + s·q) + 0·√D on construction, so a
/// nonzero s always means √D is irrational. Arithmetic between two values
/// requires identical D; mixing in a plain Rational is always allowed.
class QuadValue {
public:
    QuadValue() = default;
    explicit QuadValue(Rational r, Rational D = Rational(0));
    QuadValue(Rational r, Rational s, Rational D);

    const Rational& rational_part() const noexcept { return r_; }
    const Rational& radical_part() const noexcept { return s_; }
    const Rational& radicand() const noexcept { return d_; }
    bool is_rational() const { return s_.is_zero(); }

    /// Exact sign of r + s√D.
    int sign() const;
    double to_double() const;
    /// "r", or "r + s√D" style text for diagnostics.
    std::string to_string() const;

    QuadValue operator-() const;
    QuadValue& operator+=(const QuadValue& rhs);
    QuadValue& operator-=(const QuadValue& rhs);
    QuadValue& operator*=(const QuadValue& rhs);
    QuadValue& operator+=(const Rational& rhs);
    QuadValue& operator-=(const Rational& rhs);
    QuadValue& operator*=(const Rational& rhs);

    friend QuadValue operator+(QuadValue a, const QuadValue& b) { return a += b; }
    friend QuadValue operator-(QuadValue a, const QuadValue& b) { return a -= b; }
    friend QuadValue operator*(QuadValue a, const QuadValue& b) { return a *= b; }
    friend QuadValue operator+(QuadValue a, const Rational& b) { return a += b; }
    friend QuadValue operator-(QuadValue a, const Rational& b) { return a -= b; }
    friend QuadValue operator*(QuadValue a, const Rational& b) { return a *= b; }
    friend QuadValue operator*(const Rational& a, QuadValue b) { return b *= a; }

    /// Structural equality; values over the same D compare by coefficients.
    friend bool operator==(const QuadValue& a, const QuadValue& b) {
        return a.r_ == b.r_ && a.s_ == b.s_ && a.d_ == b.d_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadValue& v) { return os << v.to_string(); }

private:
    void require_same_radicand(const QuadValue& other) const;
    void normalize();

    Rational r_;
    Rational s_;
    Rational d_;
};

QuadValue quad_add(const QuadValue& x, const QuadValue& y);
QuadValue quad_sub(const QuadValue& x, const QuadValue& y);
QuadValue quad_scale(const QuadValue& x, const Rational& k);
int quad_sign(const QuadValue& x);

/// Exact three-way comparison of values over the same radicand.
int quad_compare(const QuadValue& x, const QuadValue& y);

}  // namespace apollo
