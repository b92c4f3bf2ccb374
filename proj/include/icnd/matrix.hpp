#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "icnd/errors.hpp"
#include "icnd/rng.hpp"

namespace icnd {

// Dense row-major matrix of doubles. The only linear-algebra container in
// the project; vectors are 1xN or Nx1 matrices.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {
        if (r < 0 || c < 0) throw DimensionError("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    // scaled-uniform init in [-1/sqrt(fan_in), 1/sqrt(fan_in)]
    static Matrix init_uniform(int r, int c, Rng& rng) {
        Matrix m(r, c);
        const double bound = 1.0 / std::sqrt(static_cast<double>(r));
        for (auto& v : m.data) v = rng.uniform(-bound, bound);
        return m;
    }

    double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    double* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }
    const double* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }

    size_t size() const { return data.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

// c = a * b
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw DimensionError("matmul: inner dimensions differ");
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (int p = 0; p < a.cols; ++p) {
            const double av = arow[p];
            const double* brow = b.row(p);
            for (int j = 0; j < b.cols; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

// c = a * b^T
inline Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw DimensionError("matmul_nt: inner dimensions differ");
    Matrix c(a.rows, b.rows);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (int j = 0; j < b.rows; ++j) {
            const double* brow = b.row(j);
            double acc = 0.0;
            for (int p = 0; p < a.cols; ++p) acc += arow[p] * brow[p];
            crow[j] = acc;
        }
    }
    return c;
}

// c = a^T * b
inline Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) throw DimensionError("matmul_tn: inner dimensions differ");
    Matrix c(a.cols, b.cols);
    for (int p = 0; p < a.rows; ++p) {
        const double* arow = a.row(p);
        const double* brow = b.row(p);
        for (int i = 0; i < a.cols; ++i) {
            const double av = arow[i];
            double* crow = c.row(i);
            for (int j = 0; j < b.cols; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("add: shape mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.size(); ++i) c.data[i] += b.data[i];
    return c;
}

inline Matrix sub(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("sub: shape mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.size(); ++i) c.data[i] -= b.data[i];
    return c;
}

inline Matrix scale(const Matrix& a, double s) {
    Matrix c = a;
    for (auto& v : c.data) v *= s;
    return c;
}

// Row-wise softmax with max subtraction. NaN anywhere is rejected.
inline Matrix softmax_rows(const Matrix& m) {
    if (!m.all_finite()) throw InvalidInputError("softmax_rows: non-finite entry");
    Matrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        const double* src = m.row(i);
        double* dst = out.row(i);
        double mx = src[0];
        for (int j = 1; j < m.cols; ++j) mx = std::max(mx, src[j]);
        double sum = 0.0;
        for (int j = 0; j < m.cols; ++j) {
            dst[j] = std::exp(src[j] - mx);
            sum += dst[j];
        }
        const double inv = 1.0 / sum;
        for (int j = 0; j < m.cols; ++j) dst[j] *= inv;
    }
    return out;
}

inline double dot(const double* a, const double* b, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const double* a, int n) { return std::sqrt(dot(a, a, n)); }

// 1 - cos(a,b), in [0,2]. Zero-norm operands are rejected.
inline double cosine_distance(const double* a, const double* b, int n) {
    const double na = norm2(a, n);
    const double nb = norm2(b, n);
    if (na <= 0.0 || nb <= 0.0) throw DegenerateInputError("cosine_distance: zero-norm vector");
    return 1.0 - dot(a, b, n) / (na * nb);
}

inline double cosine_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DimensionError("cosine_distance: length mismatch");
    return cosine_distance(a.data(), b.data(), static_cast<int>(a.size()));
}

// softmax_rows(q k^T / sqrt(C) + Repeat(bias)) v. The bias row vector, when
// present, is indexed by key and added to every query row.
inline Matrix attention(const Matrix& q, const Matrix& k, const Matrix& v,
                        const std::optional<std::vector<double>>& bias = std::nullopt) {
    if (q.cols != k.cols) throw DimensionError("attention: q/k feature dims differ");
    if (k.rows != v.rows) throw DimensionError("attention: k/v row counts differ");
    Matrix scores = matmul_nt(q, k);
    const double inv_scale = 1.0 / std::sqrt(static_cast<double>(q.cols));
    for (auto& s : scores.data) s *= inv_scale;
    if (bias) {
        if (static_cast<int>(bias->size()) != k.rows)
            throw DimensionError("attention: bias length differs from key count");
        for (int i = 0; i < scores.rows; ++i) {
            double* srow = scores.row(i);
            for (int j = 0; j < scores.cols; ++j) srow[j] += (*bias)[j];
        }
    }
    return matmul(softmax_rows(scores), v);
}

// ReLU(q k^T) v -- no softmax, no score scaling.
inline Matrix relu_attention(const Matrix& q, const Matrix& k, const Matrix& v) {
    if (q.cols != k.cols) throw DimensionError("relu_attention: q/k feature dims differ");
    if (k.rows != v.rows) throw DimensionError("relu_attention: k/v row counts differ");
    Matrix scores = matmul_nt(q, k);
    for (auto& s : scores.data) s = std::max(s, 0.0);
    return matmul(scores, v);
}

}  // namespace icnd
