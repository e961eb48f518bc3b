#include "cospectra/spectral.hpp"

#include "cospectra/error.hpp"

#include <algorithm>

namespace cospectra {

namespace {

Rational pow10_rational(int exponent)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

using RealMatrix = std::vector<std::vector<Real>>;

RealMatrix to_real(const ExactMatrix& a, mpfr_prec_t bits)
{
    RealMatrix m(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m[i].reserve(a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) m[i].emplace_back(a(i, j), bits);
    }
    return m;
}

void require_symmetric(const ExactMatrix& a, const char* what)
{
    if (!a.is_symmetric())
        throw InvalidArgument(std::string(what) + ": matrix is not symmetric (complex spectra are not supported)");
}

} // namespace

std::vector<Eigenvalue> isolate_eigenvalues(const CharPoly& cp, const Precision& prec)
{
    const Polynomial p = cp.polynomial();
    const Rational width = pow10_rational(-prec.digits());

    std::vector<Eigenvalue> out;
    std::size_t real_roots = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        auto roots = isolate_real_roots(factor, width);
        real_roots += roots.size() * static_cast<std::size_t>(mult);
        for (auto& iv : roots) {
            Real mid((iv.lo + iv.hi) / 2, prec.bits());
            out.push_back({std::move(iv), std::move(mid), mult});
        }
    }
    if (real_roots != cp.degree())
        throw InvalidArgument("characteristic polynomial has non-real roots (" + std::to_string(cp.degree() - real_roots) +
                              " counted with multiplicity)");

    std::sort(out.begin(), out.end(),
              [](const Eigenvalue& a, const Eigenvalue& b) { return a.interval.lo > b.interval.lo; });
    // Factors are coprime, so roots are distinct; only intervals taken from
    // different factors can touch, and only if the roots are closer than
    // the requested width.
    for (std::size_t h = 1; h < out.size(); ++h) {
        if (out[h].interval.hi >= out[h - 1].interval.lo)
            throw PrecisionError("eigenvalue isolating intervals overlap at " + std::to_string(prec.digits()) +
                                 " digits; increase precision");
    }
    return out;
}

SpectralData coefficients(const ExactMatrix& a, std::vector<Eigenvalue> eigenvalues, const Precision& prec)
{
    require_symmetric(a, "coefficients");
    const std::size_t n = a.dim();
    const std::size_t d = eigenvalues.size();
    const mpfr_prec_t bits = prec.bits();

    const Real collision = prec.eps_w() * Real(10, bits);
    for (std::size_t h = 1; h < d; ++h) {
        if (eigenvalues[h - 1].value - eigenvalues[h].value < collision)
            throw PrecisionError("eigenvalue cluster collision: two eigenvalues closer than 10*eps_w at " +
                                 std::to_string(prec.digits()) + " digits");
    }
    for (auto& ev : eigenvalues)
        if (ev.value.bits() < bits) ev.value = Real((ev.interval.lo + ev.interval.hi) / 2, bits);

    const RealMatrix ar = to_real(a, bits);
    auto shifted = [&](const Real& mu) {
        RealMatrix m = ar;
        for (std::size_t i = 0; i < n; ++i) m[i][i] -= mu;
        return m;
    };

    SpectralData sd;
    sd.precision = prec;
    sd.coeff.assign(d, std::vector<Real>(n, Real(bits)));
    Real term(bits);
    for (std::size_t h = 0; h < d; ++h) {
        if (d == 1) {
            for (std::size_t i = 0; i < n; ++i) sd.coeff[h][i] = Real(1, bits);
            break;
        }
        Real denom(1, bits);
        std::vector<std::size_t> others;
        for (std::size_t l = 0; l < d; ++l) {
            if (l == h) continue;
            denom *= eigenvalues[h].value - eigenvalues[l].value;
            others.push_back(l);
        }

        // Full product of all factors but the last; only the diagonal of the
        // final product is needed.
        RealMatrix prod = shifted(eigenvalues[others.front()].value);
        for (std::size_t k = 1; k + 1 < others.size(); ++k) {
            const RealMatrix f = shifted(eigenvalues[others[k]].value);
            RealMatrix next(n, std::vector<Real>(n, Real(bits)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t m = 0; m < n; ++m) {
                    if (prod[i][m].is_zero()) continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        if (f[m][j].is_zero()) continue;
                        mpfr_mul(term.raw(), prod[i][m].raw(), f[m][j].raw(), MPFR_RNDN);
                        next[i][j] += term;
                    }
                }
            prod = std::move(next);
        }
        if (others.size() == 1) {
            for (std::size_t i = 0; i < n; ++i) sd.coeff[h][i] = prod[i][i] / denom;
            continue;
        }
        const RealMatrix last = shifted(eigenvalues[others.back()].value);
        for (std::size_t i = 0; i < n; ++i) {
            Real diag(bits);
            for (std::size_t m = 0; m < n; ++m) {
                if (prod[i][m].is_zero() || last[m][i].is_zero()) continue;
                mpfr_mul(term.raw(), prod[i][m].raw(), last[m][i].raw(), MPFR_RNDN);
                diag += term;
            }
            sd.coeff[h][i] = diag / denom;
        }
    }
    sd.eigenvalues = std::move(eigenvalues);
    sd.source = std::make_shared<const ExactMatrix>(a);
    return sd;
}

bool pattern_connected(const ExactMatrix& a)
{
    const std::size_t n = a.dim();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < n; ++u) {
            if (seen[u] || (sgn(a(v, u)) == 0 && sgn(a(u, v)) == 0)) continue;
            seen[u] = 1;
            ++count;
            stack.push_back(u);
        }
    }
    return count == n;
}

std::vector<Real> perron_vector(const ExactMatrix& a, const Real& largest, const Precision& prec)
{
    require_symmetric(a, "perron_vector");
    if (!pattern_connected(a))
        throw InvalidArgument("perron_vector: graph is disconnected, the largest eigenvalue need not be simple");

    const std::size_t n = a.dim();
    const mpfr_prec_t bits = prec.bits();
    const Real sigma = largest.rounded_to(bits);

    // LU factorization of A - sigma*I with partial pivoting.
    RealMatrix lu = to_real(a, bits);
    for (std::size_t i = 0; i < n; ++i) lu[i][i] -= sigma;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    const Real tiny = Real::pow10(-(prec.digits() + Precision::kGuardDigits), bits);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(lu[i][k]) > abs(lu[piv][k])) piv = i;
        std::swap(lu[k], lu[piv]);
        std::swap(perm[k], perm[piv]);
        // A - sigma*I is singular up to the isolation width; nudge an exact
        // zero pivot so the solve stays defined.
        if (abs(lu[k][k]) < tiny) lu[k][k] = tiny;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (lu[i][k].is_zero()) continue;
            lu[i][k] /= lu[k][k];
            for (std::size_t j = k + 1; j < n; ++j) lu[i][j] -= lu[i][k] * lu[k][j];
        }
    }

    auto solve = [&](const std::vector<Real>& rhs) {
        std::vector<Real> y(n, Real(bits));
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = rhs[perm[i]];
            for (std::size_t j = 0; j < i; ++j) y[i] -= lu[i][j] * y[j];
        }
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) y[i] -= lu[i][j] * y[j];
            y[i] /= lu[i][i];
        }
        return y;
    };
    auto normalize = [&](std::vector<Real>& v) {
        Real norm(bits);
        Real sum(bits);
        for (const auto& x : v) {
            norm += x * x;
            sum += x;
        }
        norm = sqrt(norm);
        if (sum.sign() < 0) norm = -norm;
        for (auto& x : v) x /= norm;
    };

    std::vector<Real> x(n, Real(1, bits));
    normalize(x);
    for (int iter = 0; iter < 3; ++iter) {
        x = solve(x);
        normalize(x);
    }
    for (const auto& v : x)
        if (v.sign() <= 0) throw InvalidArgument("perron_vector: leading eigenvector is not strictly positive");
    return x;
}

std::vector<Real> perron_vector(const ExactMatrix& a, const Precision& prec)
{
    require_symmetric(a, "perron_vector");
    if (!pattern_connected(a))
        throw InvalidArgument("perron_vector: graph is disconnected, the largest eigenvalue need not be simple");
    const auto evs = isolate_eigenvalues(char_poly(a), prec);
    return perron_vector(a, evs.front().value, prec);
}

SpectralData decompose(const ExactMatrix& a, const Precision& prec)
{
    require_symmetric(a, "decompose");
    auto evs = isolate_eigenvalues(char_poly(a), prec);
    SpectralData sd = coefficients(a, std::move(evs), prec);
    if (pattern_connected(a)) {
        try {
            sd.perron = perron_vector(a, sd.eigenvalues.front().value, prec);
        } catch (const InvalidArgument&) {
            // weighted matrices with negative entries have no Perron vector
        }
    }
    return sd;
}

} // namespace cospectra
