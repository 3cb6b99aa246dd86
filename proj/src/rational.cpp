#include "apollo/rational.hpp"

#include <cctype>
#include <cmath>

#include <mpfr.h>

#include "apollo/errors.hpp"

namespace apollo {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw ParseError("not a rational literal: '" + std::string(whole) + "'");
    mpz_class z(std::string(body), 10);
    return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw ArithmeticError("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
    Rational r;
    mpq_set_d(r.q_.get_mpq_t(), value);
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(s.substr(0, slash), text);
        const std::string_view den_text = s.substr(slash + 1);
        if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
            throw ParseError("bad denominator in '" + std::string(text) + "'");
        const mpz_class den = parse_integer(den_text, text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    // decimal with optional exponent
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const mpz_class ez = parse_integer(s.substr(e + 1), text);
        if (!ez.fits_slong_p() || abs(ez) > 100000) throw ParseError("exponent out of range in '" + std::string(text) + "'");
        exponent = ez.get_si();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view ip = s.substr(0, dot);
        const std::string_view fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw ParseError("not a rational literal: '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) throw ParseError("not a rational literal: '" + std::string(text) + "'");
        digits = std::string(s);
    }
    mpz_class num(digits, 10);
    if (negative) num = -num;
    const long shift = exponent - frac_len;
    if (shift >= 0) return Rational(mpz_class(num * pow10(static_cast<unsigned long>(shift))), mpz_class(1));
    return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

double Rational::to_double() const {
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, q_.get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw ArithmeticError("rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw DomainError("isqrt of a negative integer");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) throw DomainError("exact_sqrt of a negative rational");
    // lowest terms: x is a square iff numerator and denominator both are
    const mpz_class num = x.numerator();
    const mpz_class den = x.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    return Rational(isqrt(num), isqrt(den));
}

}  // namespace apollo
