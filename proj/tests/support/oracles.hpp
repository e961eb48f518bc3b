#pragma once

// Test-side helpers. Everything here is deliberately naive and independent
// of the library's algorithms so it can serve as an oracle.

#include "cospectra/exact_matrix.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/real.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using cospectra::ExactMatrix;
using cospectra::Graph;
using cospectra::Rational;
using cospectra::Real;

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,k}: vertex 0 is the center.
Graph star(int leaves);
Graph from_g6(const std::string& s);

/// Connected graphs of the given order from the generated corpus.
std::vector<std::string> corpus_lines(int n);
/// All connected graphs with 1..max_n vertices.
std::vector<Graph> corpus(int max_n);
std::string corpus_dir();

/// Erdos-Renyi graph, resampled until connected when `connected` is set.
Graph random_graph(int n, double p, std::mt19937& rng, bool connected = true);
/// Random rational matrix with small numerators and denominators.
ExactMatrix random_matrix(int n, std::mt19937& rng, bool symmetric = false);

/// Determinant by cofactor expansion.
Rational det_cofactor(const ExactMatrix& m);
/// det(xI - A) by evaluating at x = 0..n and Lagrange interpolation;
/// ascending coefficients.
std::vector<Rational> char_poly_interpolated(const ExactMatrix& a);
ExactMatrix delete_vertex(const ExactMatrix& a, int v);
ExactMatrix power(const ExactMatrix& a, int r);
/// [A^r]_ii == [A^r]_jj for r = 1..2n by plain matrix powers.
bool cospectral_bruteforce(const ExactMatrix& a, int i, int j);
/// Some adjacency-preserving permutation maps i to j (all n! permutations).
bool automorphic_bruteforce(const Graph& g, int i, int j);
/// Every vertex can be mapped to every other.
bool vertex_transitive_bruteforce(const Graph& g);

/// |x - y| < 10^e
bool close(const Real& x, const Real& y, long e);
Real cosh_ref(const Real& x);
Real exp_ref(const Real& x);
Real log_ref(const Real& x);
Real sqrt_ref(const Real& x);

} // namespace testing_support
