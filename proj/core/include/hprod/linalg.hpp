#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "hprod/matrix.hpp"
#include "hprod/rng.hpp"

namespace hprod {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;

    [[nodiscard]] std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row, so the result is deterministic.
Echelon row_reduce(Matrix m);

/// Rank of a rows x cols matrix stored row-major in `buf`; `buf` is clobbered.
std::size_t rank_in_place(std::span<Residue> buf, std::size_t rows, std::size_t cols, const Field& field);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}; one vector per non-pivot column, with that free
/// coordinate set to 1 and the other free coordinates 0.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Uniform sample from GL(n, D) by rejection from uniform n x n matrices.
Matrix random_invertible(std::size_t n, const Field& field, Rng& rng);

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, Rng& rng);
Vector random_vector(std::size_t len, const Field& field, Rng& rng);

/// Maximum number of nonzero entries over all rows and all columns.
std::size_t weight(const Matrix& m);

/// Kronecker product; entry (i*rows_b + k, j*cols_b + l) = a(i,j) b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Dimension of the span of the given vectors (all of length `len`).
std::size_t span_dimension(const Field& field, std::size_t len, const std::vector<Vector>& vectors);

/// True iff the spans of `a` and `b` coincide.
bool same_span(const Field& field, std::size_t len, const std::vector<Vector>& a, const std::vector<Vector>& b);

/// Row basis (RREF rows) of the column space of m, as vectors.
std::vector<Vector> column_space_basis(const Matrix& m);

/// Visits every vector of span(basis) exactly once, starting with zero.
/// Consecutive vectors differ by one basis vector (modular Gray code), so each
/// step costs O(len). `visit` may return true to stop early.
template <typename Visit>
void for_each_in_span(const Field& field, std::size_t len, const std::vector<Vector>& basis, Visit&& visit) {
    Vector v(len, 0);
    if (visit(std::as_const(v))) return;
    std::vector<Residue> counter(basis.size(), 0);
    const Residue top = field.order() - 1;
    for (;;) {
        std::size_t digit = 0;
        while (digit < counter.size() && counter[digit] == top) counter[digit++] = 0;
        if (digit == counter.size()) return;
        ++counter[digit];
        const Vector& step = basis[digit];
        for (std::size_t j = 0; j < len; ++j) v[j] = field.add(v[j], step[j]);
        if (visit(std::as_const(v))) return;
    }
}

/// Matrix text format: a `D rows cols` line, then `rows` lines of `cols` residues.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in);

}  // namespace hprod
