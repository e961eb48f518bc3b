#include "cospectra/beta_solver.hpp"

#include "cospectra/exact_walks.hpp"

#include <algorithm>
#include <memory>
#include <optional>

namespace cospectra {

Real DiffFunction::operator()(const Real& beta) const
{
    const mpfr_prec_t bits = precision.bits();
    const Real b = beta.rounded_to(std::max(bits, beta.bits()));
    Real s(bits);
    for (std::size_t h = 0; h < mu.size(); ++h) {
        if (delta[h].is_zero()) continue;
        s += delta[h] * exp(b * mu[h]);
    }
    return s;
}

DiffFunction::Evaluation DiffFunction::evaluate(const Real& beta) const
{
    const mpfr_prec_t bits = precision.bits();
    const Real b = beta.rounded_to(std::max(bits, beta.bits()));
    Real s(bits);
    Real err(bits);
    // Each term picks up a few roundings plus |beta mu| ulps from the
    // rounded exponent; the sum adds one more per term.
    const Real terms(static_cast<long>(mu.size()) + 4, bits);
    for (std::size_t h = 0; h < mu.size(); ++h) {
        if (delta[h].is_zero()) continue;
        const Real x = b * mu[h];
        const Real t = delta[h] * exp(x);
        s += t;
        err += abs(t) * (terms + abs(x));
    }
    Real ulp(1L, bits);
    mpfr_mul_2si(ulp.raw(), ulp.raw(), 1 - static_cast<long>(bits), MPFR_RNDU);
    return {std::move(s), err * ulp};
}

DiffFunction build_diff(const SpectralData& sd, VertexPair p)
{
    if (!sd.source) throw InvalidArgument("build_diff: spectral data carries no source matrix");
    validate_pair(p, sd.order());

    DiffFunction df;
    df.pair = p;
    df.precision = sd.precision;
    auto source = sd.source;
    df.rebuild = [source, p](const Precision& q) { return build_diff(decompose(*source, q), p); };

    if (cospectral(*sd.source, p)) {
        df.identically_zero = true;
        return df;
    }

    const Real eps = sd.precision.eps_w();
    bool any_large = false;
    for (std::size_t h = 0; h < sd.distinct(); ++h) {
        df.mu.push_back(sd.eigenvalues[h].value);
        Real d = sd.coeff[h][static_cast<std::size_t>(p.i)] - sd.coeff[h][static_cast<std::size_t>(p.j)];
        if (abs(d) >= eps) any_large = true;
        df.delta.push_back(std::move(d));
    }
    if (!any_large)
        throw PrecisionError("build_diff: all coefficient deltas below eps_w for a non-cospectral pair at " +
                             std::to_string(sd.precision.digits()) + " digits");
    return df;
}

DiffFunction synthetic_diff(std::function<std::pair<std::vector<Real>, std::vector<Real>>(const Precision&)> make,
                            const Precision& prec)
{
    auto [mu, delta] = make(prec);
    if (mu.size() != delta.size()) throw InvalidArgument("synthetic_diff: mu and delta sizes differ");
    DiffFunction df;
    df.precision = prec;
    df.mu = std::move(mu);
    df.delta = std::move(delta);
    auto shared = std::make_shared<decltype(make)>(std::move(make));
    df.rebuild = [shared](const Precision& q) { return synthetic_diff(*shared, q); };
    return df;
}

ScanResult scan_roots(const DiffFunction& df, const ScanOptions& options)
{
    if (df.identically_zero) throw InvalidArgument("scan_roots: pair is cospectral, g vanishes identically");
    if (sgn(options.step) <= 0 || sgn(options.beta_max) <= 0)
        throw InvalidArgument("scan_roots: step and beta_max must be positive");

    const mpfr_prec_t bits = df.precision.bits();
    const Real tiny = Real::pow10(-df.precision.digits() / 2, bits);

    ScanResult out;
    const Rational ratio = options.beta_max / options.step;
    const Integer steps = ratio.get_num() / ratio.get_den();
    const long count = steps.get_si();

    long prev_k = 0;
    int prev_sign = 0;
    // Grid indices where |g| < tiny.
    std::vector<long> small;
    // exp(k*step*mu) by repeated multiplication, re-anchored with a direct
    // exp every so often so rounding cannot drift.
    constexpr long kAnchor = 64;
    const std::size_t m = df.mu.size();
    std::vector<Real> factor;
    std::vector<Real> power;
    for (std::size_t h = 0; h < m; ++h) {
        factor.push_back(exp(Real(options.step, bits) * df.mu[h]));
        power.emplace_back(1L, bits);
    }
    // Rounding error per term: a few ulps for the products, up to kAnchor
    // for the recurrence since the last anchor, |beta mu| for the rounded
    // exponent.
    Real max_mu(bits);
    for (const auto& x : df.mu) max_mu = std::max(max_mu, abs(x));
    Real slack = Real(static_cast<long>(m) + 4 + kAnchor, bits) + Real(options.beta_max, bits) * max_mu;
    mpfr_mul_2si(slack.raw(), slack.raw(), 1 - static_cast<long>(bits), MPFR_RNDU);

    // Scratch values reused across the grid to keep MPFR allocation out of
    // the loop.
    Real beta_r(bits), t(bits), g(bits), mass(bits);
    for (long k = 1; k <= count; ++k) {
        mpfr_set_zero(g.raw(), 1);
        mpfr_set_zero(mass.raw(), 1);
        if (k % kAnchor == 0) {
            const Rational beta = options.step * k;
            mpfr_set_q(beta_r.raw(), beta.get_mpq_t(), MPFR_RNDN);
        }
        for (std::size_t h = 0; h < m; ++h) {
            if (k % kAnchor == 0) {
                mpfr_mul(t.raw(), beta_r.raw(), df.mu[h].raw(), MPFR_RNDN);
                mpfr_exp(power[h].raw(), t.raw(), MPFR_RNDN);
            } else {
                mpfr_mul(power[h].raw(), power[h].raw(), factor[h].raw(), MPFR_RNDN);
            }
            if (df.delta[h].is_zero()) continue;
            mpfr_mul(t.raw(), df.delta[h].raw(), power[h].raw(), MPFR_RNDN);
            mpfr_add(g.raw(), g.raw(), t.raw(), MPFR_RNDN);
            if (t.sign() < 0)
                mpfr_sub(mass.raw(), mass.raw(), t.raw(), MPFR_RNDU);
            else
                mpfr_add(mass.raw(), mass.raw(), t.raw(), MPFR_RNDU);
        }
        mpfr_mul(mass.raw(), mass.raw(), slack.raw(), MPFR_RNDU);
        // A value inside its rounding error has no usable sign.
        const int s = mpfr_cmpabs(g.raw(), mass.raw()) <= 0 ? 0 : g.sign();
        if (s != 0 && prev_sign != 0 && s != prev_sign)
            out.brackets.push_back({options.step * prev_k, options.step * k});
        if (s != 0) {
            prev_sign = s;
            prev_k = k;
        }
        if (mpfr_cmpabs(g.raw(), tiny.raw()) < 0) small.push_back(k);
    }

    // Near-zero points not adjacent to a bracket.
    for (long k : small) {
        const Rational b = options.step * k;
        bool bracketed = std::any_of(out.brackets.begin(), out.brackets.end(), [&](const Bracket& br) {
            return b >= br.lo - options.step && b <= br.hi + options.step;
        });
        if (!bracketed) out.near_zero.push_back(b);
    }
    return out;
}

namespace {

struct Polished {
    Real lo;
    Real hi;
    Real residual;
};

// Newton iteration from the middle of [lo, hi]. The result only counts if a
// bracket of width target_width / 2 around the limit has certified opposite
// signs and the midpoint meets the residual target; otherwise the caller
// falls back to bisection.
std::optional<Polished> newton_polish(const DiffFunction& f, const Real& lo, const Real& hi, const Real& target_width,
                                      const Real& target_residual)
{
    const mpfr_prec_t bits = f.precision.bits();
    Real x = (lo + hi) / Real(2, bits);
    const Real tiny = target_width / Real(8, bits);
    Real g(bits), dg(bits), t(bits), e(bits), step(bits);
    bool converged = false;
    for (int it = 0; it < 100 && !converged; ++it) {
        mpfr_set_zero(g.raw(), 1);
        mpfr_set_zero(dg.raw(), 1);
        for (std::size_t h = 0; h < f.mu.size(); ++h) {
            if (f.delta[h].is_zero()) continue;
            mpfr_mul(e.raw(), x.raw(), f.mu[h].raw(), MPFR_RNDN);
            mpfr_exp(e.raw(), e.raw(), MPFR_RNDN);
            mpfr_mul(t.raw(), f.delta[h].raw(), e.raw(), MPFR_RNDN);
            mpfr_add(g.raw(), g.raw(), t.raw(), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), f.mu[h].raw(), MPFR_RNDN);
            mpfr_add(dg.raw(), dg.raw(), t.raw(), MPFR_RNDN);
        }
        if (dg.is_zero()) return std::nullopt;
        mpfr_div(step.raw(), g.raw(), dg.raw(), MPFR_RNDN);
        x -= step;
        if (!(lo < x && x < hi)) return std::nullopt;
        converged = abs(step) < tiny;
    }
    if (!converged) return std::nullopt;

    const Real quarter = target_width / Real(4, bits);
    Real a = x - quarter, c = x + quarter;
    if (a < lo || c > hi) return std::nullopt;
    const auto ga = f.evaluate(a);
    const auto gc = f.evaluate(c);
    if (!(abs(ga.value) > ga.error && abs(gc.value) > gc.error) || ga.value.sign() == gc.value.sign())
        return std::nullopt;
    const auto gm = f.evaluate((a + c) / Real(2, bits));
    if (!(abs(gm.value) + gm.error < target_residual)) return std::nullopt;
    return Polished{std::move(a), std::move(c), abs(gm.value)};
}

} // namespace

BetaRoot refine_root(const DiffFunction& df, const Bracket& bracket, const Precision& prec, const RefineOptions& options)
{
    if (df.identically_zero) throw InvalidArgument("refine_root: pair is cospectral, g vanishes identically");
    if (bracket.lo >= bracket.hi) throw InvalidArgument("refine_root: empty bracket");

    const Real target_width = prec.pow10(-prec.digits() + 10);
    const Real target_residual = prec.pow10(-prec.digits() + 20);

    DiffFunction work = df;
    if (work.precision < prec) {
        if (!work.rebuild) throw PrecisionError("refine_root: function is coarser than requested and cannot be rebuilt");
        work = work.rebuild(prec);
    }

    mpfr_prec_t bits = work.precision.bits();
    Real lo(bracket.lo, bits);
    Real hi(bracket.hi, bits);
    for (int escalation = 0;; ++escalation) {
        const auto elo = work.evaluate(lo);
        const auto ehi = work.evaluate(hi);
        Real glo = elo.value;
        const bool certain = abs(elo.value) > elo.error && abs(ehi.value) > ehi.error;
        if (certain && glo.sign() == ehi.value.sign())
            throw SpuriousBracket("refine_root: no sign change on [" + lo.to_decimal(20) + ", " + hi.to_decimal(20) +
                                  "] at " + std::to_string(work.precision.digits()) + " digits");

        if (certain) {
            if (auto p = newton_polish(work, lo, hi, target_width, target_residual))
                return BetaRoot{df.pair, std::move(p->lo), std::move(p->hi), std::move(p->residual), prec,
                                work.precision.digits(), escalation};
        }

        const Real two(2, bits);
        while (certain) {
            Real mid = (lo + hi) / two;
            auto [gm, err] = work.evaluate(mid);
            const Real bound = abs(gm) + err;
            if (hi - lo < target_width && bound < target_residual)
                return BetaRoot{df.pair, lo, hi, abs(gm), prec, work.precision.digits(), escalation};
            if (abs(gm) <= err) {
                // The sign at mid is noise. If g is already small there,
                // a certified sign change around mid closes the bracket.
                if (bound < target_residual) {
                    const Real half = target_width / Real(4, bits);
                    Real a = mid - half, c = mid + half;
                    const auto ga = work.evaluate(a);
                    const auto gc = work.evaluate(c);
                    if (abs(ga.value) > ga.error && abs(gc.value) > gc.error && ga.value.sign() != gc.value.sign())
                        return BetaRoot{df.pair, std::move(a), std::move(c), abs(gm), prec, work.precision.digits(),
                                        escalation};
                }
                break;
            }
            if (mid == lo || mid == hi) break; // adjacent floats: stalled at this precision
            if (gm.sign() == glo.sign()) {
                lo = std::move(mid);
                glo = std::move(gm);
            } else {
                hi = std::move(mid);
            }
        }

        if (escalation >= options.max_escalations || !work.rebuild)
            throw PrecisionError("refine_root: residual stalls above 10^(" + std::to_string(-prec.digits() + 20) +
                                 ") after " + std::to_string(escalation) + " precision escalations");
        const int more = std::max(20, work.precision.digits() / 2);
        work = work.rebuild(Precision(work.precision.digits() + more));
        bits = work.precision.bits();
        lo = lo.rounded_to(bits);
        hi = hi.rounded_to(bits);
    }
}

RationalProbe small_height_probe(const Real& beta, const Precision& prec, std::uint32_t max_denominator)
{
    const mpfr_prec_t bits = std::max(prec.bits(), beta.bits());
    const Real b = beta.rounded_to(bits);
    RationalProbe probe;
    probe.max_denominator = max_denominator;
    bool first = true;
    for (std::uint32_t q = 1; q <= max_denominator; ++q) {
        Real scaled = b * Real(static_cast<long>(q), bits);
        mpfr_t rounded;
        mpfr_init2(rounded, bits);
        mpfr_rint(rounded, scaled.raw(), MPFR_RNDN);
        Integer p;
        mpfr_get_z(p.get_mpz_t(), rounded, MPFR_RNDN);
        mpfr_clear(rounded);
        Rational frac(p, Integer(static_cast<unsigned long>(q)));
        frac.canonicalize();
        Real dist = abs(b - Real(frac, bits));
        if (first || dist < probe.distance) {
            probe.distance = dist;
            probe.nearest = frac;
            first = false;
        }
    }
    probe.passed = probe.distance > prec.pow10(-prec.digits() + 20);
    return probe;
}

RegularityReport regularity_beta_search(const Graph& g, const Precision& prec, const ScanOptions& scan)
{
    if (g.directed()) throw InvalidArgument("regularity_beta_search: undirected graph required");
    const ExactMatrix a = adjacency_matrix(g);

    RegularityReport report;
    report.precision = prec;
    report.cospectral_class = cospectral_classes(a);
    const int classes = *std::max_element(report.cospectral_class.begin(), report.cospectral_class.end()) + 1;
    if (classes == 1) throw InvalidArgument("regularity_beta_search: graph is walk-regular, every beta works");

    std::vector<int> rep(static_cast<std::size_t>(classes), -1);
    for (std::size_t v = 0; v < report.cospectral_class.size(); ++v) {
        auto& r = rep[static_cast<std::size_t>(report.cospectral_class[v])];
        if (r < 0) r = static_cast<int>(v);
    }

    const SpectralData sd = decompose(a, prec);
    std::vector<DiffFunction> diffs;
    for (std::size_t x = 0; x < rep.size(); ++x) {
        for (std::size_t y = x + 1; y < rep.size(); ++y) {
            DiffFunction df = build_diff(sd, {rep[x], rep[y]});
            PairScan ps{df.pair, scan_roots(df, scan), {}};
            for (const auto& br : ps.scan.brackets) {
                try {
                    ps.roots.push_back(refine_root(df, br, prec));
                } catch (const SpuriousBracket&) {
                }
            }
            report.pairs.push_back(std::move(ps));
            diffs.push_back(std::move(df));
        }
    }

    const Real bound = prec.pow10(-prec.digits() + 20);
    for (const auto& ps : report.pairs) {
        for (const auto& root : ps.roots) {
            const Real beta = root.midpoint();
            bool duplicate = std::any_of(report.candidates.begin(), report.candidates.end(), [&](const auto& c) {
                return abs(c.beta - beta) < prec.pow10(-prec.digits() + 10);
            });
            if (duplicate) continue;
            Real worst(prec.bits());
            for (const auto& df : diffs) worst = std::max(worst, abs(df(beta)));
            if (worst < bound)
                report.candidates.push_back({beta, worst, small_height_probe(beta, prec)});
        }
    }
    return report;
}

} // namespace cospectra
