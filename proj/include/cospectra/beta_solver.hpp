#pragma once

#include "cospectra/error.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/real.hpp"
#include "cospectra/spectral.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cospectra {

/// A sign-change bracket that disappears when re-evaluated at higher
/// precision.
class SpuriousBracket : public Error {
public:
    using Error::Error;
};

/// g(beta) = sum_h delta[h] * exp(beta * mu[h]).
///
/// For a vertex pair (i, j) of a symmetric matrix, delta[h] = C[h][i] - C[h][j]
/// and g is the difference of their beta-subgraph centralities.
struct DiffFunction {
    VertexPair pair;
    Precision precision;
    std::vector<Real> mu;
    std::vector<Real> delta;
    /// Set when the pair is exactly cospectral: g vanishes for every beta.
    bool identically_zero = false;
    /// Recomputes the same function at another precision; empty when the
    /// function cannot be rebuilt.
    std::function<DiffFunction(const Precision&)> rebuild;

    Real operator()(const Real& beta) const;

    struct Evaluation {
        Real value;
        /// Bound on the rounding error of `value`.
        Real error;
    };
    /// g(beta) with a running error bound, so that callers can tell a
    /// certified sign from cancellation noise.
    Evaluation evaluate(const Real& beta) const;
};

/// Pair difference from a decomposition. Exactly cospectral pairs yield the
/// identically-zero marker. Throws PrecisionError if every |delta| is below
/// eps_w although the pair is not cospectral.
DiffFunction build_diff(const SpectralData& sd, VertexPair p);

/// Closed-form g for calibration: mu and delta are produced by `make` at
/// whatever precision is requested, so the function can be rebuilt.
DiffFunction synthetic_diff(std::function<std::pair<std::vector<Real>, std::vector<Real>>(const Precision&)> make,
                            const Precision& prec);

struct Bracket {
    Rational lo;
    Rational hi;
    friend bool operator==(const Bracket&, const Bracket&) = default;
};

struct ScanOptions {
    Rational beta_max = 20;
    Rational step = Rational(1, 100);
};

struct ScanResult {
    /// Grid cells [k*step, (k+1)*step] where g has opposite nonzero signs.
    std::vector<Bracket> brackets;
    /// Grid points where |g| < 10^(-P/2) without a sign change nearby: a
    /// possible tangential root the scan cannot bracket.
    std::vector<Rational> near_zero;
};

/// Sign-change scan of g on the grid step, 2*step, ..., beta_max. Throws
/// InvalidArgument for the identically-zero marker.
ScanResult scan_roots(const DiffFunction& df, const ScanOptions& options = {});

struct BetaRoot {
    VertexPair pair;
    Real lo;
    Real hi;
    /// |g((lo + hi) / 2)| at the final working precision.
    Real residual;
    /// Requested precision; the width and residual bounds refer to it.
    Precision precision;
    /// Digits the final refinement actually ran at (>= precision).
    int working_digits = 0;
    int escalations = 0;

    Real midpoint() const { return (lo + hi) / Real(2, lo.bits()); }
};

struct RefineOptions {
    /// How many times the working precision may be raised before giving up.
    int max_escalations = 4;
};

/// Newton iteration accepted through a certified sign change, falling back to
/// bisection with certified signs, to width < 10^(-P+10) with residual
/// < 10^(-P+20). When the
/// residual stalls the function is rebuilt at more digits. Throws
/// SpuriousBracket if the endpoints stop differing in sign, PrecisionError
/// when escalation is exhausted.
BetaRoot refine_root(const DiffFunction& df, const Bracket& bracket, const Precision& prec,
                     const RefineOptions& options = {});

/// Result of checking beta* against all fractions p/q with q <= max_denominator.
struct RationalProbe {
    std::uint32_t max_denominator = 0;
    /// Closest p/q found.
    Rational nearest;
    Real distance;
    /// distance > 10^(-P+20)
    bool passed = false;
};

RationalProbe small_height_probe(const Real& beta, const Precision& prec, std::uint32_t max_denominator = 10000);

struct PairScan {
    VertexPair pair;
    ScanResult scan;
    std::vector<BetaRoot> roots;
};

struct RegularityCandidate {
    Real beta;
    /// Largest |g(beta)| over all non-cospectral class representatives.
    Real max_residual;
    RationalProbe probe;
};

struct RegularityReport {
    Precision precision;
    std::vector<int> cospectral_class;
    std::vector<PairScan> pairs;
    std::vector<RegularityCandidate> candidates;
};

/// Roots for every pair of cospectral-class representatives, then the roots
/// at which every pair difference vanishes within 10^(-P+20). Rejects
/// directed and walk-regular graphs.
RegularityReport regularity_beta_search(const Graph& g, const Precision& prec, const ScanOptions& scan = {});

} // namespace cospectra
