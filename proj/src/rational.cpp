#include "cospectra/rational.hpp"

#include "cospectra/error.hpp"

#include <cctype>

namespace cospectra {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
        Integer d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        out = Rational(Integer(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw ParseError("invalid decimal literal '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        out = Rational(Integer(digits, 10), scale);
    } else {
        if (!all_digits(body))
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
        out = Rational(Integer(std::string(body), 10));
    }
    out.canonicalize();
    if (negative) out = -out;
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace cospectra
