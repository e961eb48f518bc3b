#pragma once

#include "cospectra/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cospectra {

/// Dense square matrix over the rationals. No operation on it ever rounds.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric() const;
    /// True when every entry has denominator 1.
    bool is_integral() const;
    bool is_zero() const;

    Rational trace() const;
    std::vector<Rational> diagonal() const;
    /// Maximum absolute row sum.
    Rational inf_norm() const;

    ExactMatrix& operator+=(const ExactMatrix& rhs);
    ExactMatrix& operator-=(const ExactMatrix& rhs);
    ExactMatrix& operator*=(const Rational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

} // namespace cospectra
