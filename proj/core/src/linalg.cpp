#include "hprod/linalg.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hprod {

Echelon row_reduce(Matrix m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
        const Residue s = f.inv(m(r, c));
        for (auto& x : m.row(r)) x = f.mul(x, s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Residue factor = m(i, c);
            auto src = m.row(r);
            auto dst = m.row(i);
            for (std::size_t j = c; j < m.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank_in_place(std::span<Residue> buf, std::size_t rows, std::size_t cols, const Field& f) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && buf[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(buf[piv * cols + j], buf[r * cols + j]);
        const Residue s = f.inv(buf[r * cols + c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Residue x = buf[i * cols + c];
            if (x == 0) continue;
            const Residue factor = f.mul(x, s);
            for (std::size_t j = c; j < cols; ++j)
                buf[i * cols + j] = f.sub(buf[i * cols + j], f.mul(factor, buf[r * cols + j]));
        }
        ++r;
    }
    return r;
}

std::size_t rank(const Matrix& m) {
    std::vector<Residue> buf(m.data().begin(), m.data().end());
    return rank_in_place(buf, m.rows(), m.cols(), m.field());
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const Echelon e = row_reduce(hstack(m, Matrix::column(m.field(), b)));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), 0);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const Echelon e = row_reduce(hstack(m, Matrix::identity(m.field(), n)));
    if (e.rank() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, Rng& rng) {
    Matrix m(field, rows, cols);
    for (auto& x : m.data()) x = static_cast<Residue>(rng.below(field.order()));
    return m;
}

Vector random_vector(std::size_t len, const Field& field, Rng& rng) {
    Vector v(len);
    for (auto& x : v) x = static_cast<Residue>(rng.below(field.order()));
    return v;
}

Matrix random_invertible(std::size_t n, const Field& field, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(n, n, field, rng);
        if (rank(m) == n) return m;
    }
}

std::size_t weight(const Matrix& m) {
    std::size_t w = 0;
    std::vector<std::size_t> col_counts(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t row_count = 0;
        auto r = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (r[j] == 0) continue;
            ++row_count;
            ++col_counts[j];
        }
        w = std::max(w, row_count);
    }
    for (auto c : col_counts) w = std::max(w, c);
    return w;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("kron: field mismatch");
    const Field& f = a.field();
    Matrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Residue aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = f.mul(aij, b(r, c));
        }
    return k;
}

std::size_t span_dimension(const Field& field, std::size_t len, const std::vector<Vector>& vectors) {
    return rank(Matrix::from_rows(field, len, vectors));
}

bool same_span(const Field& field, std::size_t len, const std::vector<Vector>& a, const std::vector<Vector>& b) {
    const std::size_t ra = span_dimension(field, len, a);
    const std::size_t rb = span_dimension(field, len, b);
    if (ra != rb) return false;
    std::vector<Vector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_dimension(field, len, both) == ra;
}

std::vector<Vector> column_space_basis(const Matrix& m) {
    const Echelon e = row_reduce(m.transpose());
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < e.rank(); ++i) basis.emplace_back(e.reduced.row(i).begin(), e.reduced.row(i).end());
    return basis;
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << r[j];
        }
        out << '\n';
    }
}

Matrix read_matrix(std::istream& in) {
    long long d = 0, rows = -1, cols = -1;
    if (!(in >> d >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("matrix: malformed header, expected `D rows cols`");
    if (d <= 0 || d > std::numeric_limits<std::uint32_t>::max()) throw std::runtime_error("matrix: bad field order");
    Field field(static_cast<std::uint32_t>(d));
    Matrix m(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (auto& x : m.data()) {
        long long v;
        if (!(in >> v)) throw std::runtime_error("matrix: truncated entries");
        if (v < 0 || v >= d) throw std::runtime_error("matrix: entry " + std::to_string(v) + " not a residue mod " + std::to_string(d));
        x = static_cast<Residue>(v);
    }
    return m;
}

}  // namespace hprod
