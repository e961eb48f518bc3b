#pragma once

#include "cospectra/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace cospectra {

/// Arbitrary-precision binary floating point backed by MPFR. Every value
/// carries its own precision in bits; binary operations produce a result at
/// the larger of the two operand precisions, rounded to nearest.
class Real {
public:
    Real() : Real(mpfr_prec_t{64}) {}
    explicit Real(mpfr_prec_t bits);
    Real(long value, mpfr_prec_t bits);
    Real(const Rational& value, mpfr_prec_t bits);
    Real(const Integer& value, mpfr_prec_t bits);

    /// Decimal or scientific literal, rounded to nearest.
    static Real parse(std::string_view text, mpfr_prec_t bits);
    static Real pow10(long exponent, mpfr_prec_t bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    Real rounded_to(mpfr_prec_t bits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// `digits` significant decimal digits, truncated toward zero. Plain
    /// positional notation for moderate exponents, `d.ddde±x` otherwise.
    std::string to_decimal(int digits) const;

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    mpfr_t v_;
};

Real exp(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, unsigned long n);

/// The exact binary value of a finite Real.
Rational exact_value(const Real& x);

/// Decimal working precision. `digits` is the number of significant decimal
/// digits callers ask for; arithmetic runs with `kGuardDigits` more.
class Precision {
public:
    static constexpr int kMinDigits = 30;
    static constexpr int kDefaultDigits = 50;
    static constexpr int kGuardDigits = 20;

    Precision() : Precision(kDefaultDigits) {}
    explicit Precision(int digits);

    int digits() const { return digits_; }
    mpfr_prec_t bits() const;

    /// 10^(-P+10): tolerance for identities that hold exactly in theory.
    Real eps_w() const { return Real::pow10(-digits_ + 10, bits()); }
    /// 10^(-P+15): tolerance for deciding two centralities agree.
    Real eps_class() const { return Real::pow10(-digits_ + 15, bits()); }
    Real pow10(long exponent) const { return Real::pow10(exponent, bits()); }

    friend auto operator<=>(const Precision&, const Precision&) = default;

private:
    int digits_;
};

/// Precision in bits needed to carry `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

} // namespace cospectra
