#pragma once

#include "cospectra/exact_matrix.hpp"
#include "cospectra/exact_walks.hpp"
#include "cospectra/polynomial.hpp"
#include "cospectra/real.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace cospectra {

/// One distinct eigenvalue: an exact isolating interval, its midpoint at
/// working precision, and its exact multiplicity.
struct Eigenvalue {
    RootInterval interval;
    Real value;
    int multiplicity = 1;
};

/// Distinct real roots of a characteristic polynomial, largest first.
/// Multiplicities come from exact square-free factorization; each root is
/// isolated by Sturm bisection to width 10^-P. Throws InvalidArgument if the
/// polynomial has non-real roots.
std::vector<Eigenvalue> isolate_eigenvalues(const CharPoly& cp, const Precision& prec);

/// Spectral decomposition of a symmetric rational matrix, grouped by
/// distinct eigenvalue.
///
/// `coeff[h][i]` is the i-th diagonal entry of the spectral projector onto
/// the eigenspace of `eigenvalues[h]`, so that
/// [A^r]_ii = sum_h coeff[h][i] * mu_h^r for every r >= 0.
struct SpectralData {
    Precision precision;
    std::vector<Eigenvalue> eigenvalues;
    std::vector<std::vector<Real>> coeff;
    /// Unit positive eigenvector of the largest eigenvalue; present when the
    /// graph of A is connected.
    std::optional<std::vector<Real>> perron;
    /// The matrix this was computed from, kept so that callers can redo the
    /// decomposition at higher precision.
    std::shared_ptr<const ExactMatrix> source;

    std::size_t order() const { return source ? source->dim() : 0; }
    std::size_t distinct() const { return eigenvalues.size(); }
};

/// Projector diagonals C[h][i] via P_h = prod_{l != h} (A - mu_l I) / (mu_h - mu_l).
/// Throws PrecisionError when two eigenvalues are closer than 10 * eps_w.
SpectralData coefficients(const ExactMatrix& a, std::vector<Eigenvalue> eigenvalues, const Precision& prec);

/// Perron vector of a connected symmetric nonnegative matrix by inverse
/// iteration at the largest eigenvalue. Throws InvalidArgument when the
/// graph is disconnected or A is not symmetric.
std::vector<Real> perron_vector(const ExactMatrix& a, const Precision& prec);
std::vector<Real> perron_vector(const ExactMatrix& a, const Real& largest_eigenvalue, const Precision& prec);

/// Full pipeline: characteristic polynomial, isolation, coefficients, and
/// the Perron vector when the graph is connected.
SpectralData decompose(const ExactMatrix& a, const Precision& prec);

/// Connectivity of the nonzero pattern of A, ignoring direction.
bool pattern_connected(const ExactMatrix& a);

} // namespace cospectra
