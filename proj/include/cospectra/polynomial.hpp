#pragma once

#include "cospectra/rational.hpp"

#include <utility>
#include <vector>

namespace cospectra {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending order of degree without trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);

    static Polynomial monomial(const Rational& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& leading() const { return c_.back(); }
    Rational coefficient(int k) const;

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// Scaled to integer coefficients with content 1 and positive leading
    /// coefficient; same roots.
    std::vector<Integer> primitive_integer() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's square-free decomposition: f = lc(f) * prod_k g_k^k with the g_k
/// monic, square-free and pairwise coprime. Only nonconstant factors are
/// returned, as (g_k, k).
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

/// Sturm chain f, f', -rem(f, f'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& f);

/// Number of distinct real roots of a square-free polynomial.
int count_real_roots(const Polynomial& squarefree);

/// Closed interval [lo, hi] with rational endpoints containing exactly one
/// root. lo == hi when the root is itself rational and was hit exactly.
struct RootInterval {
    Rational lo;
    Rational hi;
};

/// Isolates every real root of a square-free polynomial by Sturm bisection
/// and shrinks each interval to width <= max_width using exact sign
/// evaluation. Result is in ascending order; intervals are disjoint.
std::vector<RootInterval> isolate_real_roots(const Polynomial& squarefree, const Rational& max_width);

} // namespace cospectra
