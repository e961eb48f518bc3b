#pragma once

#include "cospectra/exact_matrix.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/polynomial.hpp"
#include "cospectra/rational.hpp"

#include <cstddef>
#include <vector>

namespace cospectra {

/// Closed-walk counts w_i(r) = [A^r]_ii for r = 1..length.
class WalkTable {
public:
    WalkTable() = default;
    WalkTable(std::size_t n, std::size_t length);

    std::size_t order() const { return walks_.size(); }
    std::size_t length() const { return length_; }

    /// r is 1-based.
    const Rational& at(std::size_t vertex, std::size_t r) const { return walks_[vertex][r - 1]; }
    Rational& at(std::size_t vertex, std::size_t r) { return walks_[vertex][r - 1]; }
    const std::vector<Rational>& row(std::size_t vertex) const { return walks_[vertex]; }

    /// Sum over vertices of w_i(r).
    Rational column_sum(std::size_t r) const;

    friend bool operator==(const WalkTable&, const WalkTable&) = default;

private:
    std::size_t length_ = 0;
    std::vector<std::vector<Rational>> walks_;
};

/// Diagonals of A, A^2, ..., A^R by repeated exact multiplication.
WalkTable walk_counts(const ExactMatrix& a, std::size_t length);

/// P_A(x) = det(xI - A), coefficients in ascending order; monic of degree n.
class CharPoly {
public:
    CharPoly() = default;
    explicit CharPoly(std::vector<Rational> ascending);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Polynomial polynomial() const { return Polynomial(coeffs_); }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Exact characteristic polynomial: similarity reduction to upper Hessenberg
/// form over Q, then the Hessenberg determinant recurrence.
CharPoly char_poly(const ExactMatrix& a);

/// Power sums p_r = sum of (roots)^r for r = 1..count, from the coefficients
/// alone via Newton's identities.
std::vector<Rational> power_sums(const CharPoly& cp, std::size_t count);

/// [A^r]_ii == [A^r]_jj for r = 1..n-1 (enough by Cayley-Hamilton).
bool cospectral(const ExactMatrix& a, VertexPair p);
bool cospectral(const WalkTable& walks, VertexPair p);

/// All vertices pairwise cospectral.
bool walk_regular(const ExactMatrix& a);

/// Class index per vertex, grouping vertices with identical walk rows
/// r = 1..n-1. Classes are numbered by first occurrence.
std::vector<int> cospectral_classes(const ExactMatrix& a);

/// Basis of Ker(B) read off the reduced row echelon form: one vector per
/// free column, with a 1 in that column.
std::vector<std::vector<Rational>> rational_nullspace(const ExactMatrix& b);

/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
ExactMatrix rational_inverse(const ExactMatrix& b);

} // namespace cospectra
