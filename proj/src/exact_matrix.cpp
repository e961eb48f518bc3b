#include "cospectra/exact_matrix.hpp"

#include "cospectra/error.hpp"

#include <algorithm>

namespace cospectra {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : ExactMatrix(rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw InvalidArgument("ExactMatrix: rows must form a square matrix");
        std::size_t j = 0;
        for (const auto& v : row) (*this)(i, j++) = v;
        ++i;
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool ExactMatrix::is_symmetric() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool ExactMatrix::is_integral() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool ExactMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational ExactMatrix::trace() const
{
    Rational t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<Rational> ExactMatrix::diagonal() const
{
    std::vector<Rational> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
}

Rational ExactMatrix::inf_norm() const
{
    Rational best = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < n_; ++j) row += abs((*this)(i, j));
        if (row > best) best = row;
    }
    return best;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs)
{
    if (rhs.n_ != n_) throw InvalidArgument("ExactMatrix: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs)
{
    if (rhs.n_ != n_) throw InvalidArgument("ExactMatrix: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s)
{
    for (auto& v : a_) v *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.n_ != b.n_) throw InvalidArgument("ExactMatrix: dimension mismatch");
    const std::size_t n = a.n_;
    ExactMatrix c(n);

    // Integer fast path: accumulate in mpz, skipping rational normalization.
    if (a.is_integral() && b.is_integral()) {
        Integer acc;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    const mpz_srcptr x = a(i, k).get_num_mpz_t();
                    if (mpz_sgn(x) == 0) continue;
                    mpz_addmul(acc.get_mpz_t(), x, b(k, j).get_num_mpz_t());
                }
                c(i, j) = Rational(acc);
            }
        }
        return c;
    }

    Rational acc;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(a(i, k)) == 0) continue;
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = acc;
        }
    }
    return c;
}

std::vector<Rational> ExactMatrix::operator*(const std::vector<Rational>& v) const
{
    if (v.size() != n_) throw InvalidArgument("ExactMatrix: vector length mismatch");
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

} // namespace cospectra
