#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i].at(j);
        return m;
    }

    /// Builds a matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
        Matrix m(nrows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j].at(i);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline IntMatrix to_integer(const RationalMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw std::domain_error("matrix entry not integral");
            r(i, j) = m(i, j).numerator();
        }
    return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Bilinear form a^T G b.
template <class T>
T bilinear(const Matrix<T>& g, const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (a[i] == T(0)) continue;
        T row(0);
        for (std::size_t j = 0; j < g.cols(); ++j) row += g(i, j) * b[j];
        s += a[i] * row;
    }
    return s;
}

inline Rational determinant(RationalMatrix a) {
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

inline Integer determinant(const IntMatrix& a) {
    Rational d = determinant(to_rational(a));
    return d.numerator();
}

inline RationalMatrix inverse(RationalMatrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Solves a x = b for x where a has full column rank; throws if inconsistent.
inline RationalVector solve_full_column_rank(const RationalMatrix& a, const RationalVector& b) {
    // normal equations keep this exact and simple for the tiny systems used here
    RationalMatrix at = a.transpose();
    RationalVector x = inverse(at * a) * (at * b);
    if (a * x != b) throw std::domain_error("vector not in column span");
    return x;
}

/// Row-style Hermite normal form: a basis (as rows) of the Z-span of the given rows.
inline std::vector<IntVector> hermite_basis(std::vector<IntVector> rows, std::size_t dim) {
    std::vector<IntVector> basis;
    std::size_t r0 = 0;
    for (std::size_t c = 0; c < dim && r0 < rows.size(); ++c) {
        // Euclid on column c among rows r0..end
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = r0; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[r0], rows[best]);
            bool done = true;
            for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Integer q = rows[r][c] / rows[r0][c];
                for (std::size_t j = 0; j < dim; ++j) rows[r][j] -= q * rows[r0][j];
                if (rows[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r0][c] == 0) continue;
        if (rows[r0][c] < 0)
            for (auto& x : rows[r0]) x = -x;
        for (std::size_t r = 0; r < r0; ++r) {
            Integer q = rows[r][c] / rows[r0][c];
            if (rows[r][c] - q * rows[r0][c] < 0) --q;
            for (std::size_t j = 0; j < dim; ++j) rows[r][j] -= q * rows[r0][j];
        }
        ++r0;
    }
    basis.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(r0));
    return basis;
}

struct SmithForm {
    IntVector divisors;  ///< diagonal d_1 | d_2 | ... (nonnegative)
    IntMatrix left;      ///< U with U A V = diag
    IntMatrix left_inverse;
    IntMatrix right;     ///< V
};

/// Smith normal form of a square integer matrix.
inline SmithForm smith_normal_form(IntMatrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("smith_normal_form expects a square matrix");
    IntMatrix u = IntMatrix::identity(n), uinv = IntMatrix::identity(n), v = IntMatrix::identity(n);

    auto row_op = [&](std::size_t dst, std::size_t src, Integer q) {  // row_dst -= q row_src
        for (std::size_t j = 0; j < n; ++j) {
            a(dst, j) -= q * a(src, j);
            u(dst, j) -= q * u(src, j);
        }
        for (std::size_t i = 0; i < n; ++i) uinv(i, src) += q * uinv(i, dst);
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(x, j), a(y, j));
            std::swap(u(x, j), u(y, j));
        }
        for (std::size_t i = 0; i < n; ++i) std::swap(uinv(i, x), uinv(i, y));
    };
    auto col_op = [&](std::size_t dst, std::size_t src, Integer q) {  // col_dst -= q col_src
        for (std::size_t i = 0; i < n; ++i) {
            a(i, dst) -= q * a(i, src);
            v(i, dst) -= q * v(i, src);
        }
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(a(i, x), a(i, y));
            std::swap(v(i, x), v(i, y));
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // pivot: smallest nonzero magnitude in the trailing block
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a(i, j) != 0 && (pi == n || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) break;
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                Integer q = a(i, t) / a(t, t);
                if (q != 0) row_op(i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                Integer q = a(t, j) / a(t, t);
                if (q != 0) col_op(j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility condition on the trailing block
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            row_op(t, bad, -1);
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                a(t, j) = -a(t, j);
                u(t, j) = -u(t, j);
            }
            for (std::size_t i = 0; i < n; ++i) uinv(i, t) = -uinv(i, t);
        }
    }
    SmithForm out;
    out.divisors.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.divisors[i] = a(i, i);
    out.left = std::move(u);
    out.left_inverse = std::move(uinv);
    out.right = std::move(v);
    return out;
}

}  // namespace alcove
