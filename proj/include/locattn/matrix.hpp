// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "locattn/error.hpp"

namespace locattn {

// Dense row-major matrix of doubles. The numeric substrate for everything:
// parameters, activations, attention maps.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : m_rows(rows), m_cols(cols), m_data(static_cast<size_t>(rows) * cols, 0.0) {
        if (rows < 0 || cols < 0) {
            throw ShapeError("Matrix: negative dimensions");
        }
    }
    Matrix(int rows, int cols, std::vector<double> data) : m_rows(rows), m_cols(cols), m_data(std::move(data)) {
        if (m_data.size() != static_cast<size_t>(rows) * cols) {
            throw ShapeError("Matrix: data length does not match rows*cols");
        }
    }

    static Matrix identity(int n);

    int rows() const { return m_rows; }
    int cols() const { return m_cols; }
    size_t size() const { return m_data.size(); }

    double &operator()(int r, int c) { return m_data[static_cast<size_t>(r) * m_cols + c]; }
    double operator()(int r, int c) const { return m_data[static_cast<size_t>(r) * m_cols + c]; }

    double *row(int r) { return m_data.data() + static_cast<size_t>(r) * m_cols; }
    const double *row(int r) const { return m_data.data() + static_cast<size_t>(r) * m_cols; }
    std::span<const double> row_span(int r) const { return {row(r), static_cast<size_t>(m_cols)}; }

    std::vector<double> &data() { return m_data; }
    const std::vector<double> &data() const { return m_data; }

    bool same_shape(const Matrix &o) const { return m_rows == o.m_rows && m_cols == o.m_cols; }
    bool operator==(const Matrix &o) const = default;

private:
    int m_rows = 0;
    int m_cols = 0;
    std::vector<double> m_data;
};

// Deterministic seeded generator. Identical seed gives an identical stream on
// every platform: the engine is the standard-specified mt19937_64 and all
// value mappings are implemented here rather than via std distributions.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // Uniform on [0, 1).
    double uniform();
    // Uniform on [lo, hi).
    double uniform(double lo, double hi);
    // Uniform integer in [0, n). n must be positive.
    int uniform_int(int n);
    // Fisher-Yates with this generator (std::shuffle is implementation-defined).
    void shuffle(std::vector<int> &v);

private:
    uint64_t m_state[312];
    int m_index;
    uint64_t m_raw_state; // unused; see cpp

    // implemented over std::mt19937_64 internally
    void *m_engine;

public:
    ~Rng();
    Rng(const Rng &) = delete;
    Rng &operator=(const Rng &) = delete;
    Rng(Rng &&) noexcept;
    Rng &operator=(Rng &&) noexcept;
};

Matrix matmul(const Matrix &a, const Matrix &b);
// a * b^T
Matrix matmul_nt(const Matrix &a, const Matrix &b);
// a^T * b
Matrix matmul_tn(const Matrix &a, const Matrix &b);

Matrix transpose(const Matrix &m);
Matrix add(const Matrix &a, const Matrix &b);
Matrix sub(const Matrix &a, const Matrix &b);
Matrix hadamard(const Matrix &a, const Matrix &b);
Matrix scale(const Matrix &m, double s);

// Row-wise softmax with per-row max subtraction.
Matrix softmax_rows(const Matrix &m);

// Per-row normalization to mean 0 / variance 1 (biased variance, eps inside the
// square root), then affine gain/bias. gain and bias have length m.cols.
Matrix layer_norm_rows(const Matrix &m, std::span<const double> gain, std::span<const double> bias, double eps);

Matrix relu(const Matrix &m);

// Uniform values in [-scale, scale]. scale = 0 gives the zero matrix.
Matrix seeded_uniform_init(int rows, int cols, double scale, Rng &rng);

std::vector<double> row_sums(const Matrix &m);
double max_abs_diff(const Matrix &a, const Matrix &b);
bool all_finite(const Matrix &m);

} // namespace locattn
