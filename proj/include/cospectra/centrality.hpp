#pragma once

#include "cospectra/exact_matrix.hpp"
#include "cospectra/exact_walks.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/real.hpp"
#include "cospectra/spectral.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cospectra {

/// Nonzero inverse temperature. Either an exact rational or a
/// high-precision real (for irrational algebraic inputs and for roots the
/// solver produces); only the former is exact.
class Beta {
public:
    static Beta rational(Rational value);
    static Beta real(Real value);

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    /// Throws InvalidArgument unless exact.
    const Rational& exact() const;
    Real value(mpfr_prec_t bits) const;
    std::string to_string(int digits) const;

private:
    explicit Beta(std::variant<Rational, Real> v) : value_(std::move(v)) {}
    std::variant<Rational, Real> value_;
};

/// Vertices grouped by agreement of their centrality values.
struct Partition {
    /// Class index per vertex, numbered by first occurrence.
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;
    /// Adjacent values separated by a gap in [tol, 10*tol): too close to
    /// call at this precision.
    std::vector<VertexPair> borderline;

    bool single_class() const { return classes.size() == 1; }
    bool needs_escalation() const { return !borderline.empty(); }
};

struct CentralityReport {
    /// subgraph-taylor | subgraph-spectral | resolvent | degree | eigenvector
    std::string function;
    std::string backend;
    /// "beta" or "alpha" with its value; empty for parameter-free functions.
    std::string parameter_name;
    std::string parameter;
    Precision precision;
    std::vector<Real> values;
    /// Values before rounding, when the function is computed exactly.
    std::optional<std::vector<Rational>> exact_values;
    Partition partition;
};

enum class ToleranceScale {
    /// eps_class * max(1, max_i |value_i|)
    Relative,
    /// eps_class
    Absolute,
};

/// Partition by value agreement within the class tolerance. The graph is
/// beta-subgraph regular at this beta iff there is one class.
Partition classify_equivalence(const CentralityReport& report, ToleranceScale scale = ToleranceScale::Relative);

/// [e^{beta A}]_ii summed from the power series with exact rational terms
/// until the tail bound (|beta| ||A||)^k / k! * e^{|beta| ||A||} drops below
/// 10^(-P-5). Any square rational matrix; beta must be exact.
/// `walks`, when given and long enough, is reused instead of recomputed.
CentralityReport subgraph_centrality_taylor(const ExactMatrix& a, const Beta& beta, const Precision& prec,
                                            const WalkTable* walks = nullptr);

/// Number of series terms the Taylor backend sums for this input.
std::size_t taylor_terms(const ExactMatrix& a, const Rational& beta, const Precision& prec);

/// sum_h C[h][i] e^{beta mu_h}. Throws PrecisionError when `sd` was computed
/// at fewer digits than requested.
CentralityReport subgraph_centrality_spectral(const SpectralData& sd, const Beta& beta, const Precision& prec);

/// Diagonal of (I - alpha A)^{-1} by exact inversion. Requires
/// 0 < alpha < 1/rho(A): rho from the isolated spectrum for symmetric A,
/// the infinity-norm (Gershgorin) bound otherwise.
CentralityReport resolvent_centrality(const ExactMatrix& a, const Rational& alpha, const Precision& prec);

/// Exact [A^2]_ii for symmetric A.
std::vector<Rational> degree_centrality(const ExactMatrix& a);

/// Perron vector entries as a report.
CentralityReport eigenvector_centrality(const ExactMatrix& a, const Precision& prec);

struct EntropyResult {
    Real entropy;
    Real log_n;
    std::vector<Real> probabilities;
    /// |S - ln n| < eps_class
    bool maximal = false;
};

/// S = -sum p_i ln p_i with p_i = value_i / sum_j value_j, from a
/// subgraph-centrality report.
EntropyResult walk_entropy(const CentralityReport& report, const Precision& prec);

} // namespace cospectra
