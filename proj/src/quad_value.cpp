#include "apollo/quad_value.hpp"

#include <mpfr.h>

#include "apollo/errors.hpp"

namespace apollo {

QuadValue::QuadValue(Rational r, Rational D) : QuadValue(std::move(r), Rational(0), std::move(D)) {}

QuadValue::QuadValue(Rational r, Rational s, Rational D) : r_(std::move(r)), s_(std::move(s)), d_(std::move(D)) {
    if (d_.sign() < 0) throw DomainError("QuadValue radicand must be nonnegative");
    normalize();
}

void QuadValue::normalize() {
    if (s_.is_zero()) return;
    if (auto q = exact_sqrt(d_)) {
        r_ += s_ * *q;
        s_ = Rational(0);
    }
}

void QuadValue::require_same_radicand(const QuadValue& other) const {
    if (d_ != other.d_)
        throw UsageError("QuadValue radicand mismatch: " + d_.to_string() + " vs " + other.d_.to_string());
}

int QuadValue::sign() const {
    const int sr = r_.sign();
    const int ss = s_.sign();
    if (ss == 0 || d_.is_zero()) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // opposite signs: the larger of r² and s²D decides
    const Rational r2 = r_ * r_;
    const Rational s2d = s_ * s_ * d_;
    if (r2 == s2d) return 0;
    return r2 > s2d ? sr : ss;
}

double QuadValue::to_double() const {
    if (s_.is_zero() || d_.is_zero()) return r_.to_double();
    // r + s√D, or (r² − s²D)/(r − s√D) when the terms cancel
    const bool cancel = r_.sign() * s_.sign() < 0;
    mpfr_t root, num, den;
    const mpfr_prec_t prec = 256;
    mpfr_inits2(prec, root, num, den, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(root, d_.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(root, root, MPFR_RNDN);
    mpfr_set_q(den, s_.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(den, den, root, MPFR_RNDN);  // s√D
    double out;
    if (!cancel) {
        mpfr_set_q(num, r_.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_add(num, num, den, MPFR_RNDN);
        out = mpfr_get_d(num, MPFR_RNDN);
    } else {
        const Rational norm = r_ * r_ - s_ * s_ * d_;
        mpfr_set_q(num, norm.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_t rr;
        mpfr_init2(rr, prec);
        mpfr_set_q(rr, r_.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_sub(den, rr, den, MPFR_RNDN);  // r − s√D, no cancellation
        mpfr_div(num, num, den, MPFR_RNDN);
        out = mpfr_get_d(num, MPFR_RNDN);
        mpfr_clear(rr);
    }
    mpfr_clears(root, num, den, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::string QuadValue::to_string() const {
    if (s_.is_zero()) return r_.to_string();
    std::string out = r_.is_zero() ? std::string() : r_.to_string() + (s_.sign() > 0 ? " + " : " - ");
    const Rational mag = (r_.is_zero() || s_.sign() > 0) ? s_ : -s_;
    out += mag.to_string() + "*sqrt(" + d_.to_string() + ")";
    return out;
}

QuadValue QuadValue::operator-() const {
    QuadValue v = *this;
    v.r_ = -v.r_;
    v.s_ = -v.s_;
    return v;
}

QuadValue& QuadValue::operator+=(const QuadValue& rhs) {
    require_same_radicand(rhs);
    r_ += rhs.r_;
    s_ += rhs.s_;
    return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& rhs) {
    require_same_radicand(rhs);
    r_ -= rhs.r_;
    s_ -= rhs.s_;
    return *this;
}

QuadValue& QuadValue::operator*=(const QuadValue& rhs) {
    require_same_radicand(rhs);
    Rational r = r_ * rhs.r_ + s_ * rhs.s_ * d_;
    Rational s = r_ * rhs.s_ + s_ * rhs.r_;
    r_ = std::move(r);
    s_ = std::move(s);
    return *this;
}

QuadValue& QuadValue::operator+=(const Rational& rhs) {
    r_ += rhs;
    return *this;
}

QuadValue& QuadValue::operator-=(const Rational& rhs) {
    r_ -= rhs;
    return *this;
}

QuadValue& QuadValue::operator*=(const Rational& rhs) {
    r_ *= rhs;
    s_ *= rhs;
    return *this;
}

QuadValue quad_add(const QuadValue& x, const QuadValue& y) { return x + y; }
QuadValue quad_sub(const QuadValue& x, const QuadValue& y) { return x - y; }
QuadValue quad_scale(const QuadValue& x, const Rational& k) { return x * k; }
int quad_sign(const QuadValue& x) { return x.sign(); }

int quad_compare(const QuadValue& x, const QuadValue& y) { return (x - y).sign(); }

}  // namespace apollo
