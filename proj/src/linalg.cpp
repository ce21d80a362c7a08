#include "atl/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace atl::linalg {

namespace {

struct GaussInt {
    mpz_class re;
    mpz_class im;

    bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact quotient; the Bareiss invariant guarantees divisibility.
GaussInt div_exact(const GaussInt& a, const GaussInt& b) {
    mpz_class norm = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), norm.get_mpz_t());
    return {re, im};
}

std::vector<GaussInt> integral_row(const std::vector<Scalar>& row) {
    mpz_class den = 1;
    for (const Scalar& s : row) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.im().get_den_mpz_t());
    }
    std::vector<GaussInt> out;
    out.reserve(row.size());
    for (const Scalar& s : row) {
        mpz_class re = s.re().get_num() * (den / s.re().get_den());
        mpz_class im = s.im().get_num() * (den / s.im().get_den());
        out.push_back({re, im});
    }
    return out;
}

} // namespace

int rank(const Matrix& a) {
    if (a.empty()) return 0;
    const std::size_t cols = a.front().size();
    std::vector<std::vector<GaussInt>> m;
    m.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != cols) throw std::invalid_argument("rank: ragged matrix");
        m.push_back(integral_row(row));
    }
    GaussInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c].zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = div_exact(sub(mul(m[r][c], m[i][j]), mul(m[i][c], m[r][j])), prev);
            m[i][c] = {0, 0};
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
    if (a.empty()) return std::vector<Scalar>{};
    const std::size_t cols = a.front().size();
    Matrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols) throw std::invalid_argument("solve: ragged matrix");
        m[i].push_back(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;
    for (std::size_t i = r; i < m.size(); ++i)
        if (!m[i][cols].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

} // namespace atl::linalg
