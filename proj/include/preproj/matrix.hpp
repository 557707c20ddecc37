// Dense exact matrices and Gauss-Jordan based kernels (rank, kernel, solve).
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "preproj/field.hpp"

namespace preproj {

template <ExactField F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }
    static Matrix from_ints(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& row_major) {
        if (row_major.size() != rows * cols) throw std::invalid_argument("Matrix::from_ints: size mismatch");
        Matrix m(rows, cols);
        for (std::size_t k = 0; k < row_major.size(); ++k) m.a_[k] = F::from_int(row_major[k]);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = F::from_int(rows[i][j]);
        }
        return m;
    }
    static Matrix column(const std::vector<F>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const F& x) { return x.is_zero(); });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y, "+");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y, "-");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.a_) x = s * x;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("Matrix *: " + x.shape() + " times " + y.shape());
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: shape");
        std::vector<F> out(rows_, F::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& y, const char* op) const {
        if (rows_ != y.rows_ || cols_ != y.cols_)
            throw std::invalid_argument(std::string("Matrix ") + op + ": " + shape() + " vs " + y.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> a_;
};

// Side-by-side concatenation; `rows` fixes the shape when `blocks` is empty.
template <ExactField F>
Matrix<F> hstack(std::size_t rows, const std::vector<Matrix<F>>& blocks) {
    std::size_t c = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
        c += b.cols();
    }
    Matrix<F> out(rows, c);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        out.set_block(0, off, b);
        off += b.cols();
    }
    return out;
}

template <ExactField F>
Matrix<F> vstack(std::size_t cols, const std::vector<Matrix<F>>& blocks) {
    std::size_t r = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        r += b.rows();
    }
    Matrix<F> out(r, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        out.set_block(off, 0, b);
        off += b.rows();
    }
    return out;
}

template <ExactField F>
Matrix<F> block_diag(const Matrix<F>& x, const Matrix<F>& y) {
    Matrix<F> out(x.rows() + y.rows(), x.cols() + y.cols());
    out.set_block(0, 0, x);
    out.set_block(x.rows(), x.cols(), y);
    return out;
}

template <ExactField F>
struct Echelon {
    Matrix<F> reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan; the pivot in each column is the first nonzero entry at or
// below the current row, so outputs depend only on the input matrix.
template <ExactField F>
Echelon<F> rref(Matrix<F> a) {
    Echelon<F> e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const F inv = F::one() / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const F f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(a);
    return e;
}

template <ExactField F>
std::size_t rank(const Matrix<F>& a) {
    return rref(a).pivots.size();
}

// Columns form a basis of {x : a x = 0}; one column per free variable.
template <ExactField F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
    const auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    const std::size_t nullity = a.cols() - e.pivots.size();
    Matrix<F> k(a.cols(), nullity);
    std::size_t col = 0;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        k(f, col) = F::one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], col) = -e.reduced(r, f);
        ++col;
    }
    return k;
}

// Some X with a X = b, or nullopt when the system is inconsistent.
template <ExactField F>
std::optional<Matrix<F>> solve_matrix(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch " + a.shape() + " vs " + b.shape());
    const auto e = rref(hstack<F>(a.rows(), {a, b}));
    Matrix<F> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const auto c = e.pivots[r];
        if (c >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

template <ExactField F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    auto x = solve_matrix(a, Matrix<F>::column(b));
    if (!x) return std::nullopt;
    std::vector<F> v(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) v[i] = (*x)(i, 0);
    return v;
}

template <ExactField F>
std::vector<F> random_combination(const Matrix<F>& basis, std::mt19937_64& rng) {
    std::vector<F> coeff(basis.cols());
    for (auto& c : coeff) c = F::random(rng);
    return basis.apply(coeff);
}

template <ExactField F>
std::vector<F> random_kernel_element(const Matrix<F>& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_combination(kernel_basis(a), rng);
}

// A surjection pi with ker pi = im a, i.e. the quotient map onto coker a.
template <ExactField F>
Matrix<F> cokernel_projection(const Matrix<F>& a) {
    return kernel_basis(a.transpose()).transpose();
}

// sigma with pi * sigma = I, for pi of full row rank.
template <ExactField F>
Matrix<F> right_inverse(const Matrix<F>& pi) {
    auto s = solve_matrix(pi, Matrix<F>::identity(pi.rows()));
    if (!s) throw std::invalid_argument("right_inverse: matrix is not surjective");
    return *s;
}

template <ExactField F>
bool is_invertible(const Matrix<F>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

}  // namespace preproj
