#include "qlbkit/linalg.hpp"

#include "qlbkit/errors.hpp"

namespace qlbkit {

namespace {

std::vector<mpz_class> integral_row(const RationalVector& row, int cols) {
    if (static_cast<int>(row.size()) != cols) throw InputError("ragged matrix");
    mpz_class l = 1;
    for (const auto& v : row)
        if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> out(cols);
    for (int j = 0; j < cols; ++j) out[j] = row[j].get_num() * (l / row[j].get_den());
    return out;
}

// Reduced row echelon form over Q from the integral echelon rows.
RationalMatrix reduce(const IntegerEchelon& e) {
    const int r = static_cast<int>(e.rows.size());
    RationalMatrix q(r, RationalVector(e.cols));
    for (int i = 0; i < r; ++i) {
        const mpz_class& piv = e.rows[i][e.pivots[i]];
        for (int j = 0; j < e.cols; ++j) {
            q[i][j] = Rational(e.rows[i][j], piv);
            q[i][j].canonicalize();
        }
    }
    for (int i = r - 1; i >= 0; --i) {
        int pc = e.pivots[i];
        for (int k = 0; k < i; ++k) {
            if (q[k][pc] == 0) continue;
            Rational f = q[k][pc];
            for (int j = pc; j < e.cols; ++j) q[k][j] -= f * q[i][j];
        }
    }
    return q;
}

}  // namespace

IntegerEchelon fraction_free_echelon(const RationalMatrix& m, int cols) {
    std::vector<std::vector<mpz_class>> a;
    a.reserve(m.size());
    for (const auto& row : m) a.push_back(integral_row(row, cols));
    const int rows = static_cast<int>(a.size());
    IntegerEchelon out;
    out.cols = cols;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

int rank(const RationalMatrix& m, int cols) { return static_cast<int>(fraction_free_echelon(m, cols).pivots.size()); }

std::vector<RationalVector> nullspace(const RationalMatrix& m, int cols) {
    IntegerEchelon e = fraction_free_echelon(m, cols);
    RationalMatrix q = reduce(e);
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -q[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b, int cols) {
    if (b.size() != m.size()) throw InputError("right-hand side has the wrong length");
    RationalMatrix aug = m;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    IntegerEchelon e = fraction_free_echelon(aug, cols + 1);
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    RationalMatrix q = reduce(e);
    RationalVector x(cols, Rational(0));
    for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = q[i][cols];
    return x;
}

Rational determinant(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // Bareiss on the integral rows; the last pivot is det times the row scalings.
    Rational scale = 1;
    std::vector<std::vector<mpz_class>> a;
    for (const auto& row : m) {
        auto ir = integral_row(row, n);
        // recover the scaling factor of this row
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) {
                scale *= Rational(row[j]) / Rational(ir[j]);
                break;
            }
        a.push_back(std::move(ir));
    }
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(a[n - 1][n - 1]) * scale * sign;
}

RationalMatrix inverse(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    RationalMatrix aug = m;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(aug[i].size()) != n) throw InputError("inverse of a non-square matrix");
        for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
    }
    IntegerEchelon e = fraction_free_echelon(aug, 2 * n);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1)
        throw PreconditionError("matrix is singular");
    RationalMatrix q = reduce(e);
    RationalMatrix inv(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = q[i][n + j];
    return inv;
}

RationalMatrix transpose(const RationalMatrix& m, int cols) {
    RationalMatrix t(cols, RationalVector(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, int inner, int cols) {
    RationalMatrix c(a.size(), RationalVector(cols, Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

}  // namespace qlbkit
