#pragma once

// Dense matrices and vectors over an exact field. Rank, nullspace and
// inverse all go through one reduced-row-echelon routine with deterministic
// pivoting (first nonzero entry, columns scanned left to right), so every
// derived basis is reproducible bit for bit.

#include <optional>
#include <span>
#include <vector>

#include "nhl/errors.hpp"
#include "nhl/scalar.hpp"

namespace nhl {

template <Field K>
using Vec = std::vector<K>;

template <Field K>
Vec<K> zero_vec(int d) {
    return Vec<K>(static_cast<std::size_t>(d), K());
}

template <Field K>
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <Field K>
Vec<K> unit_vec(int d, int i) {
    Vec<K> v = zero_vec<K>(d);
    v[static_cast<std::size_t>(i)] = K(1L);
    return v;
}

template <Field K>
void vec_axpy(Vec<K>& acc, const K& c, const Vec<K>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

template <Field K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), K()) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix shape");
    }

    static Matrix identity(int d) {
        Matrix m(d, d);
        for (int i = 0; i < d; ++i) m(i, i) = K(1L);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<K>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_)
                throw input_error("ragged rows");
            for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return data_[idx(i, j)]; }
    const K& operator()(int i, int j) const { return data_[idx(i, j)]; }

    Vec<K> row(int i) const {
        Vec<K> r(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = (*this)(i, j);
        return r;
    }
    Vec<K> col(int j) const {
        Vec<K> c(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
        return c;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& o) {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.data_) x = -x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw input_error("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend Matrix operator*(const K& c, Matrix m) {
        for (auto& x : m.data_) x = c * x;
        return m;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw input_error("matrix apply shape mismatch");
        Vec<K> out = zero_vec<K>(rows_);
        for (int j = 0; j < cols_; ++j) {
            if (v[static_cast<std::size_t>(j)].is_zero()) continue;
            for (int i = 0; i < rows_; ++i)
                out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        }
        return out;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    // In-place reduced row echelon form; returns pivot column list.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!(*this)(i, c).is_zero()) { p = i; break; }
            if (p < 0) continue;
            swap_rows(r, p);
            K inv = K(1L) / (*this)(r, c);
            for (int j = c; j < cols_; ++j) (*this)(r, j) = inv * (*this)(r, j);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                K f = (*this)(i, c);
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Basis of the right nullspace, one vector per free column, ordered by
    // free-column index. RREF pivoting makes the result canonical.
    std::vector<Vec<K>> nullspace() const {
        Matrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        std::vector<Vec<K>> basis;
        for (int f = 0; f < cols_; ++f) {
            if (is_pivot[static_cast<std::size_t>(f)]) continue;
            Vec<K> v = zero_vec<K>(cols_);
            v[static_cast<std::size_t>(f)] = K(1L);
            for (std::size_t pr = 0; pr < pivots.size(); ++pr)
                v[static_cast<std::size_t>(pivots[pr])] = -m(static_cast<int>(pr), f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw input_error("inverse of non-square matrix");
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = K(1L);
        }
        std::vector<int> piv = aug.rref();
        if (static_cast<int>(piv.size()) != rows_ || (!piv.empty() && piv.back() >= cols_))
            return std::nullopt;
        for (int i = 0; i < static_cast<int>(piv.size()); ++i)
            if (piv[static_cast<std::size_t>(i)] != i) return std::nullopt;
        Matrix inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    // Exact k-th power, k may be negative (requires invertibility).
    Matrix pow(int k) const {
        if (rows_ != cols_) throw input_error("power of non-square matrix");
        if (k < 0) {
            auto inv = inverse();
            if (!inv) throw structural_error("negative power of a singular matrix");
            return inv->pow(-k);
        }
        Matrix acc = identity(rows_);
        for (int i = 0; i < k; ++i) acc = acc * (*this);
        return acc;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    void check_shape(const Matrix& o) const {
        if (!same_shape(o)) throw input_error("matrix shape mismatch");
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    int rows_, cols_;
    std::vector<K> data_;
};

template <Field K>
std::string mat_str(const Matrix<K>& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += ";";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += m(i, j).str();
        }
    }
    return s + "]";
}

// rank of the row span of `rows` (empty rows list has rank 0)
template <Field K>
int row_span_rank(const std::vector<Vec<K>>& rows) {
    if (rows.empty()) return 0;
    return Matrix<K>::from_rows(rows).rank();
}

// is `v` in the row span of `rows`?
template <Field K>
bool in_row_span(const std::vector<Vec<K>>& rows, const Vec<K>& v) {
    if (vec_is_zero(v)) return true;
    std::vector<Vec<K>> stacked = rows;
    stacked.push_back(v);
    return row_span_rank(rows) == row_span_rank(stacked);
}

} // namespace nhl
