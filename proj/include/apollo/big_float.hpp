#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "apollo/rational.hpp"

namespace apollo {

/// MPFR-backed binary float with a per-value precision. Results of binary
/// operations carry the larger operand precision; rounding is to nearest.
class BigFloat {
public:
    explicit BigFloat(double value = 0.0, mpfr_prec_t bits = 53);
    BigFloat(const Rational& value, mpfr_prec_t bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;
    mpfr_srcptr get() const { return v_; }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat sqrt(const BigFloat& a);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

private:
    struct Uninit {};
    BigFloat(Uninit, mpfr_prec_t bits);
    mpfr_t v_;
};

}  // namespace apollo
