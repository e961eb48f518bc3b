#include "cospectra/real.hpp"

#include "cospectra/error.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace cospectra {

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, mpfr_prec_t bits)
{
    Real out(bits);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(out.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError("invalid real literal '" + s + "'");
    return out;
}

Real Real::pow10(long exponent, mpfr_prec_t bits)
{
    Real out(bits);
    mpfr_set_ui(out.v_, 10, MPFR_RNDN);
    Real e(exponent, bits);
    mpfr_pow(out.v_, out.v_, e.v_, MPFR_RNDN);
    return out;
}

Real::Real(const Real& other)
{
    mpfr_init2(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded_to(mpfr_prec_t bits) const
{
    Real out(bits);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
}

std::string Real::to_decimal(int digits) const
{
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";

    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDZ), mpfr_free_str);
    std::string mant(raw.get());
    std::string out;
    if (mant.front() == '-') {
        out = "-";
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^exp10
    const long e = static_cast<long>(exp10);
    const long len = static_cast<long>(mant.size());
    if (e > 0 && e <= len) {
        out += mant.substr(0, static_cast<size_t>(e));
        if (e < len) out += "." + mant.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -6) {
        out += "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    } else {
        out += mant.substr(0, 1);
        if (len > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    return out;
}

Real Real::operator-() const
{
    Real out(bits());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr other)
{
    if (mpfr_get_prec(other) > mpfr_get_prec(target))
        mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

} // namespace

Real& Real::operator+=(const Real& rhs)
{
    widen(v_, rhs.v_);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs)
{
    widen(v_, rhs.v_);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs)
{
    widen(v_, rhs.v_);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs)
{
    widen(v_, rhs.v_);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b)
{
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

Real exp(const Real& x)
{
    Real out(x.bits());
    mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real log(const Real& x)
{
    Real out(x.bits());
    mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real sqrt(const Real& x)
{
    Real out(x.bits());
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real abs(const Real& x)
{
    Real out(x.bits());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

Real pow(const Real& x, unsigned long n)
{
    Real out(x.bits());
    mpfr_pow_ui(out.raw(), x.raw(), n, MPFR_RNDN);
    return out;
}

Rational exact_value(const Real& x)
{
    if (!mpfr_number_p(x.raw())) throw InvalidArgument("exact_value: not a finite number");
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x.raw());
    return q;
}

mpfr_prec_t bits_for_digits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Precision::Precision(int digits) : digits_(digits)
{
    if (digits < kMinDigits)
        throw InvalidArgument("precision must be at least " + std::to_string(kMinDigits) +
                              " digits, got " + std::to_string(digits));
}

mpfr_prec_t Precision::bits() const { return bits_for_digits(digits_ + kGuardDigits); }

} // namespace cospectra
