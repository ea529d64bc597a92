#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hprod/field.hpp"

namespace hprod {

using Vector = std::vector<Residue>;

/// Dense row-major matrix over GF(D).
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Entries may be any integers; they are reduced mod D.
    Matrix(Field field, std::initializer_list<std::initializer_list<long long>> rows);

    static Matrix identity(Field field, std::size_t n);
    static Matrix zeros(Field field, std::size_t rows, std::size_t cols) {
        return Matrix(field, rows, cols);
    }
    /// Diagonal of +1 on the first `plus` coordinates and -1 on the next `minus`.
    static Matrix signature(Field field, std::size_t plus, std::size_t minus);
    /// Column matrix holding v.
    static Matrix column(Field field, const Vector& v);
    /// Matrix whose rows are the given vectors (all of length `cols`).
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return data_.empty(); }

    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Residue> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] Vector column_vector(std::size_t c) const;
    [[nodiscard]] std::span<const Residue> data() const { return data_; }
    [[nodiscard]] std::span<Residue> data() { return data_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Matrix transpose() const;

    /// Submatrix on the given row and column indices, in the given order.
    [[nodiscard]] Matrix select(std::span<const std::size_t> row_idx,
                                std::span<const std::size_t> col_idx) const;
    /// Contiguous block starting at (r0, c0).
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix scale(const Matrix& a, Residue s);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Number of nonzero entries.
std::size_t support_size(std::span<const Residue> v);
bool is_zero(std::span<const Residue> v);

}  // namespace hprod
