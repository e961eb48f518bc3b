#include "cospectra/centrality.hpp"

#include "cospectra/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cospectra {

Beta Beta::rational(Rational value)
{
    if (sgn(value) == 0) throw InvalidArgument("beta must be nonzero");
    return Beta(std::move(value));
}

Beta Beta::real(Real value)
{
    if (value.is_zero()) throw InvalidArgument("beta must be nonzero");
    return Beta(std::move(value));
}

const Rational& Beta::exact() const
{
    if (!is_exact()) throw InvalidArgument("beta is not an exact rational");
    return std::get<Rational>(value_);
}

Real Beta::value(mpfr_prec_t bits) const
{
    if (is_exact()) return Real(std::get<Rational>(value_), bits);
    return std::get<Real>(value_).rounded_to(bits);
}

std::string Beta::to_string(int digits) const
{
    if (is_exact()) return cospectra::to_string(std::get<Rational>(value_));
    return std::get<Real>(value_).to_decimal(digits);
}

Partition classify_equivalence(const CentralityReport& report, ToleranceScale scale_mode)
{
    const auto& v = report.values;
    const std::size_t n = v.size();
    Partition part;
    part.class_of.assign(n, -1);
    if (n == 0) return part;

    const mpfr_prec_t bits = report.precision.bits();
    Real scale(1, bits);
    if (scale_mode == ToleranceScale::Relative)
        for (const auto& x : v) scale = std::max(scale, abs(x));
    const Real tol = report.precision.eps_class() * scale;
    const Real wide = tol * Real(10, bits);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)];
    });

    std::vector<int> group(n, 0);
    int g = 0;
    for (std::size_t k = 1; k < n; ++k) {
        const auto prev = static_cast<std::size_t>(order[k - 1]);
        const auto cur = static_cast<std::size_t>(order[k]);
        const Real gap = v[cur] - v[prev];
        if (gap >= tol) {
            ++g;
            if (gap < wide) part.borderline.push_back(VertexPair{order[k - 1], order[k]}.normalized());
        }
        group[cur] = g;
    }
    group[static_cast<std::size_t>(order[0])] = 0;

    std::vector<int> renumber(static_cast<std::size_t>(g) + 1, -1);
    for (std::size_t i = 0; i < n; ++i) {
        int& id = renumber[static_cast<std::size_t>(group[i])];
        if (id < 0) {
            id = static_cast<int>(part.classes.size());
            part.classes.emplace_back();
        }
        part.class_of[i] = id;
        part.classes[static_cast<std::size_t>(id)].push_back(static_cast<int>(i));
    }
    return part;
}

std::size_t taylor_terms(const ExactMatrix& a, const Rational& beta, const Precision& prec)
{
    const Rational x = abs(beta) * a.inf_norm();
    if (sgn(x) == 0) return 1;
    // log10 of x^k/k! * e^x, in doubles with a safety margin of two terms.
    const double lx = std::log10(x.get_d());
    const double ex = x.get_d() / std::log(10.0);
    const double target = -prec.digits() - 5;
    std::size_t k = 1;
    while (static_cast<double>(k) * lx - std::lgamma(static_cast<double>(k) + 1.0) / std::log(10.0) + ex >= target) ++k;
    return k + 2;
}

namespace {

CentralityReport base_report(std::string function, std::string backend, const Precision& prec)
{
    CentralityReport r;
    r.function = std::move(function);
    r.backend = std::move(backend);
    r.precision = prec;
    return r;
}

} // namespace

CentralityReport subgraph_centrality_taylor(const ExactMatrix& a, const Beta& beta, const Precision& prec,
                                            const WalkTable* walks)
{
    const Rational& b = beta.exact();
    const std::size_t n = a.dim();
    const std::size_t terms = taylor_terms(a, b, prec);

    WalkTable local;
    if (terms > 1 && (!walks || walks->length() < terms - 1)) {
        local = walk_counts(a, terms - 1);
        walks = &local;
    }

    std::vector<Rational> sums(n, Rational(1));
    Rational coef = 1; // beta^r / r!
    for (std::size_t r = 1; r < terms; ++r) {
        coef *= b;
        coef /= static_cast<long>(r);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& w = walks->at(i, r);
            if (sgn(w) != 0) sums[i] += coef * w;
        }
    }

    CentralityReport rep = base_report("subgraph-taylor", "taylor", prec);
    rep.parameter_name = "beta";
    rep.parameter = beta.to_string(prec.digits());
    for (const auto& s : sums) rep.values.emplace_back(s, prec.bits());
    rep.partition = classify_equivalence(rep);
    return rep;
}

CentralityReport subgraph_centrality_spectral(const SpectralData& sd, const Beta& beta, const Precision& prec)
{
    if (sd.precision < prec)
        throw PrecisionError("spectral data computed at " + std::to_string(sd.precision.digits()) +
                             " digits, " + std::to_string(prec.digits()) + " requested");
    const mpfr_prec_t bits = prec.bits();
    const Real b = beta.value(bits);
    std::vector<Real> weights;
    weights.reserve(sd.distinct());
    for (const auto& ev : sd.eigenvalues) weights.push_back(exp(b * ev.value.rounded_to(bits)));

    CentralityReport rep = base_report("subgraph-spectral", "spectral", prec);
    rep.parameter_name = "beta";
    rep.parameter = beta.to_string(prec.digits());
    const std::size_t n = sd.order();
    for (std::size_t i = 0; i < n; ++i) {
        Real s(bits);
        for (std::size_t h = 0; h < sd.distinct(); ++h) s += sd.coeff[h][i] * weights[h];
        rep.values.push_back(std::move(s));
    }
    rep.partition = classify_equivalence(rep);
    return rep;
}

CentralityReport resolvent_centrality(const ExactMatrix& a, const Rational& alpha, const Precision& prec)
{
    if (sgn(alpha) <= 0) throw InvalidArgument("resolvent: alpha must be positive");
    const std::size_t n = a.dim();

    if (a.is_symmetric()) {
        // rho(A) <= max(|hi of largest|, |lo of smallest|); the interval
        // endpoints are exact, so the test is rigorous.
        const auto evs = isolate_eigenvalues(char_poly(a), prec);
        const Rational top = abs(evs.front().interval.hi);
        const Rational bottom = abs(evs.back().interval.lo);
        const Rational rho_hi = std::max(top, bottom);
        if (alpha * rho_hi >= 1)
            throw InvalidArgument("resolvent: alpha = " + to_string(alpha) + " is not below 1/rho(A) (rho ~ " +
                                  evs.front().value.to_decimal(12) + ")");
    } else if (alpha * a.inf_norm() >= 1) {
        throw InvalidArgument("resolvent: alpha = " + to_string(alpha) +
                              " is not below 1/||A||_inf (Gershgorin bound for directed input)");
    }

    ExactMatrix m = ExactMatrix::identity(n) - alpha * a;
    const ExactMatrix inv = rational_inverse(m);

    CentralityReport rep = base_report("resolvent", "exact-inverse", prec);
    rep.parameter_name = "alpha";
    rep.parameter = to_string(alpha);
    rep.exact_values = inv.diagonal();
    for (const auto& v : *rep.exact_values) rep.values.emplace_back(v, prec.bits());
    rep.partition = classify_equivalence(rep);
    return rep;
}

std::vector<Rational> degree_centrality(const ExactMatrix& a)
{
    if (!a.is_symmetric()) throw InvalidArgument("degree_centrality: undirected (symmetric) input required");
    const std::size_t n = a.dim();
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) d[i] += a(i, k) * a(k, i);
    return d;
}

CentralityReport eigenvector_centrality(const ExactMatrix& a, const Precision& prec)
{
    CentralityReport rep = base_report("eigenvector", "inverse-iteration", prec);
    rep.values = perron_vector(a, prec);
    rep.partition = classify_equivalence(rep);
    return rep;
}

EntropyResult walk_entropy(const CentralityReport& report, const Precision& prec)
{
    if (report.function.rfind("subgraph", 0) != 0)
        throw InvalidArgument("walk_entropy needs a subgraph-centrality report, got '" + report.function + "'");
    const mpfr_prec_t bits = prec.bits();
    Real total(bits);
    for (const auto& v : report.values) total += v;

    EntropyResult out{Real(bits), log(Real(static_cast<long>(report.values.size()), bits)), {}, false};
    for (const auto& v : report.values) {
        Real p = v.rounded_to(bits) / total;
        if (p.sign() > 0) out.entropy -= p * log(p);
        out.probabilities.push_back(std::move(p));
    }
    out.maximal = abs(out.entropy - out.log_n) < prec.eps_class();
    return out;
}

} // namespace cospectra
