#include "hprod/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hprod {

namespace {

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw std::invalid_argument("field mismatch");
}

}  // namespace

Matrix::Matrix(Field field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long long v : r) data_.push_back(field_.reduce(v));
    }
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::signature(Field field, std::size_t plus, std::size_t minus) {
    Matrix m(field, plus + minus, plus + minus);
    for (std::size_t i = 0; i < plus; ++i) m(i, i) = 1;
    for (std::size_t i = plus; i < plus + minus; ++i) m(i, i) = field.neg(1);
    return m;
}

Matrix Matrix::column(Field field, const Vector& v) {
    Matrix m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column_vector(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= rows_) throw std::out_of_range("row index out of range");
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] >= cols_) throw std::out_of_range("column index out of range");
            s(i, j) = (*this)(row_idx[i], col_idx[j]);
        }
    }
    return s;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0), nc,
                    b.row(i).begin());
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require_same_field(field_, b.field());
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        std::copy(b.row(i).begin(), b.row(i).end(),
                  data_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch in +");
    Matrix s = a;
    auto out = s.data();
    auto in = b.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().add(out[i], in[i]);
    return s;
}

Matrix operator-(const Matrix& a) {
    Matrix s = a;
    for (auto& x : s.data()) x = a.field().neg(x);
    return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in *");
    const auto p = static_cast<std::uint64_t>(a.field().order());
    Matrix c(a.field(), a.rows(), b.cols());
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Residue>(acc[j]);
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
    const auto p = static_cast<std::uint64_t>(a.field().order());
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        auto r = a.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + static_cast<std::uint64_t>(r[j]) * v[j]) % p;
        out[i] = static_cast<Residue>(acc);
    }
    return out;
}

Matrix scale(const Matrix& a, Residue s) {
    Matrix out = a;
    for (auto& x : out.data()) x = a.field().mul(x, s);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

std::size_t support_size(std::span<const Residue> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Residue x) { return x != 0; }));
}

bool is_zero(std::span<const Residue> v) {
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

}  // namespace hprod
