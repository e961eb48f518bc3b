#include "cospectra/polynomial.hpp"

#include "cospectra/error.hpp"

#include <algorithm>

namespace cospectra {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::coefficient(int k) const
{
    if (k < 0 || k > degree()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

std::vector<Integer> Polynomial::primitive_integer() const
{
    Integer lcm = 1;
    for (const auto& q : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(c_.size());
    Integer content = 0;
    for (const auto& q : c_) {
        Integer v = q.get_num() * (lcm / q.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content == 0) return out;
    if (sgn(out.back()) < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Rational& s)
{
    for (auto& v : a.c_) v *= s;
    a.trim();
    return a;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
        quo[static_cast<std::size_t>(k - db)] = f;
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f)
{
    std::vector<std::pair<Polynomial, int>> out;
    if (f.degree() < 1) return out;

    const Polynomial fm = f.monic();
    const Polynomial df = fm.derivative();
    const Polynomial a0 = gcd(fm, df);
    Polynomial b = divmod(fm, a0).first;
    Polynomial c = divmod(df, a0).first;
    Polynomial d = c - b.derivative();
    for (int k = 1; b.degree() > 0; ++k) {
        Polynomial a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(std::move(a), k);
    }
    return out;
}

std::vector<Polynomial> sturm_chain(const Polynomial& f)
{
    std::vector<Polynomial> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

namespace {

int sign_variations(const std::vector<int>& signs)
{
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(const std::vector<Polynomial>& chain, const Rational& x)
{
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sgn(p(x)));
    return sign_variations(s);
}

int variations_at_infinity(const std::vector<Polynomial>& chain, bool negative)
{
    std::vector<int> s;
    for (const auto& p : chain) {
        int v = sgn(p.leading());
        if (negative && p.degree() % 2 == 1) v = -v;
        s.push_back(v);
    }
    return sign_variations(s);
}

// Sign of p(x) from integer coefficients, x = num/den with den > 0:
// sign(sum c_k num^k den^(d-k)).
int sign_at(const std::vector<Integer>& coeffs, const Rational& x)
{
    const std::size_t d = coeffs.size() - 1;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = coeffs[d];
    Integer den_pow = 1;
    for (std::size_t k = d; k-- > 0;) {
        den_pow *= den;
        acc *= num;
        acc += coeffs[k] * den_pow;
    }
    return sgn(acc);
}

// Sign of f(num / 2^shift), with the powers of the denominator as shifts.
int sign_at_dyadic(const std::vector<Integer>& coeffs, const Integer& num, mp_bitcnt_t shift, Integer& acc,
                   Integer& scaled)
{
    const std::size_t d = coeffs.size() - 1;
    acc = coeffs[d];
    for (std::size_t k = d; k-- > 0;) {
        acc *= num;
        mpz_mul_2exp(scaled.get_mpz_t(), coeffs[k].get_mpz_t(), shift * (d - k));
        acc += scaled;
    }
    return sgn(acc);
}

bool is_dyadic(const Rational& x)
{
    const Integer& den = x.get_den();
    return mpz_popcount(den.get_mpz_t()) == 1;
}

// Same bisection as on rationals, on integer numerators over a common
// power-of-two denominator.
RootInterval refine_dyadic(const std::vector<Integer>& coeffs, const RootInterval& iv, const Rational& max_width)
{
    mp_bitcnt_t shift = std::max(mpz_scan1(iv.lo.get_den().get_mpz_t(), 0), mpz_scan1(iv.hi.get_den().get_mpz_t(), 0));
    Integer lo, hi;
    mpz_mul_2exp(lo.get_mpz_t(), iv.lo.get_num().get_mpz_t(), shift - mpz_scan1(iv.lo.get_den().get_mpz_t(), 0));
    mpz_mul_2exp(hi.get_mpz_t(), iv.hi.get_num().get_mpz_t(), shift - mpz_scan1(iv.hi.get_den().get_mpz_t(), 0));

    // width = (hi - lo) / 2^shift; compare against max_width scaled the same way
    const Integer& wn = max_width.get_num();
    const Integer& wd = max_width.get_den();
    auto wider = [&] {
        Integer lhs = (hi - lo) * wd;
        Integer rhs;
        mpz_mul_2exp(rhs.get_mpz_t(), wn.get_mpz_t(), shift);
        return lhs > rhs;
    };

    Integer acc, scaled, mid;
    const int s_lo = sign_at_dyadic(coeffs, lo, shift, acc, scaled);
    while (wider()) {
        lo <<= 1;
        hi <<= 1;
        ++shift;
        mid = (lo + hi) >> 1;
        const int s = sign_at_dyadic(coeffs, mid, shift, acc, scaled);
        if (s == 0) {
            lo = hi = mid;
            break;
        }
        if (s == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    Integer den;
    mpz_setbit(den.get_mpz_t(), shift);
    Rational rlo(lo, den), rhi(hi, den);
    rlo.canonicalize();
    rhi.canonicalize();
    return {rlo, rhi};
}

// Smallest power of two bounding every root in absolute value (Cauchy).
Rational root_bound(const Polynomial& f)
{
    Rational m = 0;
    for (int k = 0; k < f.degree(); ++k) m = std::max(m, Rational(abs(f.coefficient(k) / f.leading())));
    Rational bound = 1 + m;
    Rational p2 = 1;
    while (p2 < bound) p2 *= 2;
    return p2;
}

} // namespace

int count_real_roots(const Polynomial& squarefree)
{
    if (squarefree.degree() < 1) return 0;
    const auto chain = sturm_chain(squarefree);
    return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& f, const Rational& max_width)
{
    std::vector<RootInterval> roots;
    if (f.degree() < 1) return roots;
    if (sgn(max_width) <= 0) throw InvalidArgument("root isolation width must be positive");

    const auto chain = sturm_chain(f);
    const auto coeffs = f.primitive_integer();
    const Rational bound = root_bound(f);

    // Sturm bisection: (lo, hi] holds V(lo) - V(hi) distinct roots.
    struct Pending {
        Rational lo, hi;
        int v_lo, v_hi;
    };
    std::vector<Pending> stack{{-bound, bound, variations_at(chain, -bound), variations_at(chain, bound)}};
    std::vector<RootInterval> isolated;
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        const int count = cur.v_lo - cur.v_hi;
        if (count <= 0) continue;
        const int s_hi = sign_at(coeffs, cur.hi);
        if (count == 1 && s_hi == 0) {
            isolated.push_back({cur.hi, cur.hi});
            continue;
        }
        if (count == 1 && sign_at(coeffs, cur.lo) != 0) {
            isolated.push_back({cur.lo, cur.hi});
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        const int v_mid = variations_at(chain, mid);
        stack.push_back({mid, cur.hi, v_mid, cur.v_hi});
        stack.push_back({cur.lo, mid, cur.v_lo, v_mid});
    }

    for (auto& iv : isolated) {
        if (iv.lo == iv.hi) {
            roots.push_back(iv);
            continue;
        }
        if (is_dyadic(iv.lo) && is_dyadic(iv.hi)) {
            roots.push_back(refine_dyadic(coeffs, iv, max_width));
            continue;
        }
        int s_lo = sign_at(coeffs, iv.lo);
        while (iv.hi - iv.lo > max_width) {
            Rational mid = (iv.lo + iv.hi) / 2;
            const int s = sign_at(coeffs, mid);
            if (s == 0) {
                iv.lo = iv.hi = mid;
                break;
            }
            if (s == s_lo)
                iv.lo = std::move(mid);
            else
                iv.hi = std::move(mid);
        }
        roots.push_back(iv);
    }
    std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return roots;
}

} // namespace cospectra
