#include "apollo/big_float.hpp"

#include <algorithm>
#include <vector>

namespace apollo {

BigFloat::BigFloat(Uninit, mpfr_prec_t bits) { mpfr_init2(v_, bits); }

BigFloat::BigFloat(double value, mpfr_prec_t bits) : BigFloat(Uninit{}, bits) { mpfr_set_d(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) : BigFloat(Uninit{}, bits) {
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(Uninit{}, other.precision()) { mpfr_set(v_, other.v_, MPFR_RNDN); }

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(Uninit{}, other.precision()) { mpfr_swap(v_, other.v_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
}

BigFloat BigFloat::operator-() const {
    BigFloat r(Uninit{}, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat r(BigFloat::Uninit{}, a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

}  // namespace apollo
