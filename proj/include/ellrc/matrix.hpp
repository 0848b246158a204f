#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ellrc/field.hpp"

namespace ellrc {

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Felt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Felt at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Felt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Felt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Felt> values);
    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Felt> data_;
};

/// In-place reduced row echelon form with left-to-right pivot search.
/// Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(const Field& F, Matrix& m);
std::size_t rank(const Field& F, Matrix m);
/// Basis of {v : m v = 0}, one vector per row of the result, in echelon order
/// (free variable set to 1, earlier free variables 0).
Matrix nullspace(const Field& F, Matrix m);
/// Basis of {w : w m = 0}.
Matrix left_nullspace(const Field& F, const Matrix& m);
/// A solution x of m x = b, or nothing when inconsistent.
std::optional<std::vector<Felt>> solve(const Field& F, const Matrix& m, std::span<const Felt> b);
/// Solution of a square nonsingular system; nothing when singular.
std::optional<std::vector<Felt>> solve_square(const Field& F, const Matrix& m, std::span<const Felt> b);
Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
std::vector<Felt> vec_mat(const Field& F, std::span<const Felt> v, const Matrix& m);
std::vector<Felt> mat_vec(const Field& F, const Matrix& m, std::span<const Felt> v);

/// Row space built one row at a time; each stored row has a leading 1 at
/// its pivot column.
class EchelonBasis {
public:
    EchelonBasis(const Field& F, std::size_t cols) : field_(F), cols_(cols), pivot_of_col_(cols, kNone) {}

    /// Reduces the row and keeps it when independent; returns whether it was kept.
    bool insert(std::vector<Felt> row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    Field field_;
    std::size_t cols_;
    std::vector<std::size_t> pivot_of_col_;
    std::vector<std::vector<Felt>> rows_;
};

/// row[i] += c * src[i]
void axpy(const Field& F, std::span<Felt> row, Felt c, std::span<const Felt> src);

}  // namespace ellrc
