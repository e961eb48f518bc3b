#include "cospectra/exact_walks.hpp"

#include "cospectra/error.hpp"

#include <map>

namespace cospectra {

WalkTable::WalkTable(std::size_t n, std::size_t length)
    : length_(length), walks_(n, std::vector<Rational>(length))
{}

Rational WalkTable::column_sum(std::size_t r) const
{
    Rational s = 0;
    for (const auto& row : walks_) s += row[r - 1];
    return s;
}

WalkTable walk_counts(const ExactMatrix& a, std::size_t length)
{
    if (length == 0) throw InvalidArgument("walk_counts: length must be at least 1");
    const std::size_t n = a.dim();
    WalkTable table(n, length);
    try {
        ExactMatrix power = a;
        for (std::size_t r = 1; r <= length; ++r) {
            if (r > 1) power = power * a;
            for (std::size_t i = 0; i < n; ++i) table.at(i, r) = power(i, i);
        }
    } catch (const std::bad_alloc&) {
        throw Error("walk_counts: out of memory at requested length " + std::to_string(length));
    }
    return table;
}

CharPoly::CharPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
    if (coeffs_.empty() || coeffs_.back() != 1) throw InvalidArgument("characteristic polynomial must be monic");
}

CharPoly char_poly(const ExactMatrix& a)
{
    const std::size_t n = a.dim();
    ExactMatrix h = a;

    // Reduce to upper Hessenberg form with elementary similarity transforms.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && sgn(h(piv, m - 1)) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, piv), h(j, m));
        }
        const Rational t = h(m, m - 1);
        for (std::size_t i = m + 1; i < n; ++i) {
            if (sgn(h(i, m - 1)) == 0) continue;
            const Rational u = h(i, m - 1) / t;
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
            for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, i);
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{i<j<=m} h_{j,j-1}) p_{i-1}
    // (1-based indices), p_0 = 1.
    std::vector<Polynomial> p{Polynomial({Rational(1)})};
    const Polynomial x({Rational(0), Rational(1)});
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial next = (x - Polynomial({h(m - 1, m - 1)})) * p[m - 1];
        Rational sub = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            sub *= h(i, i - 1);
            if (sgn(sub) == 0) break;
            next -= p[i - 1] * (h(i - 1, m - 1) * sub);
        }
        p.push_back(std::move(next));
    }

    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] = p[n].coefficient(static_cast<int>(k));
    return CharPoly(std::move(coeffs));
}

std::vector<Rational> power_sums(const CharPoly& cp, std::size_t count)
{
    // x^n + a_{n-1} x^{n-1} + ... + a_0; e_k = (-1)^k a_{n-k}, e_k = 0 for k > n.
    const std::size_t n = cp.degree();
    const auto& a = cp.coefficients();
    auto e = [&](std::size_t k) -> Rational {
        if (k > n) return 0;
        Rational v = a[n - k];
        return k % 2 ? Rational(-v) : v;
    };

    std::vector<Rational> p(count + 1);
    for (std::size_t r = 1; r <= count; ++r) {
        Rational s = 0;
        for (std::size_t k = 1; k < r; ++k) {
            Rational term = e(k) * p[r - k];
            s += (k % 2) ? term : Rational(-term);
        }
        Rational last = e(r) * static_cast<long>(r);
        s += (r % 2) ? last : Rational(-last);
        p[r] = s;
    }
    p.erase(p.begin());
    return p;
}

bool cospectral(const WalkTable& walks, VertexPair p)
{
    validate_pair(p, walks.order());
    const auto& a = walks.row(static_cast<std::size_t>(p.i));
    const auto& b = walks.row(static_cast<std::size_t>(p.j));
    const std::size_t needed = walks.order() - 1;
    if (walks.length() < needed) throw InvalidArgument("cospectral: walk table shorter than n-1");
    for (std::size_t r = 0; r < needed; ++r)
        if (a[r] != b[r]) return false;
    return true;
}

bool cospectral(const ExactMatrix& a, VertexPair p)
{
    validate_pair(p, a.dim());
    return cospectral(walk_counts(a, a.dim() - 1), p);
}

std::vector<int> cospectral_classes(const ExactMatrix& a)
{
    const std::size_t n = a.dim();
    std::vector<int> cls(n, 0);
    if (n <= 1) return cls;
    const WalkTable walks = walk_counts(a, n - 1);
    std::map<std::vector<Rational>, int> ids;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = ids.emplace(walks.row(i), static_cast<int>(ids.size()));
        cls[i] = it->second;
    }
    return cls;
}

bool walk_regular(const ExactMatrix& a)
{
    const auto cls = cospectral_classes(a);
    for (int c : cls)
        if (c != 0) return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns pivot column of each pivot row.
std::vector<std::size_t> rref(ExactMatrix& m)
{
    const std::size_t n = m.dim();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && sgn(m(piv, col)) == 0) ++piv;
        if (piv == n) continue;
        if (piv != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < n; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rational>> rational_nullspace(const ExactMatrix& b)
{
    const std::size_t n = b.dim();
    ExactMatrix r = b;
    const auto pivots = rref(r);
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

ExactMatrix rational_inverse(const ExactMatrix& b)
{
    const std::size_t n = b.dim();
    ExactMatrix m = b;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m(piv, col)) == 0) ++piv;
        if (piv == n) throw SingularMatrix("rational_inverse: matrix is singular");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const Rational s = 1 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace cospectra
