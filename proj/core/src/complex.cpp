#include "hprod/complex.hpp"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hprod {

ComplexShape ComplexShape::from_rho(std::size_t n, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0, 1]");
    auto H = static_cast<std::size_t>(std::floor(rho * static_cast<double>(n)));
    if ((n - H) % 2 != 0) ++H;
    if (H > n) throw std::invalid_argument("no valid shape for n = " + std::to_string(n));
    return {n, H, (n - H) / 2};
}

InvolutiveComplex::InvolutiveComplex(Field field, std::size_t dim_plus, std::size_t dim_minus, Matrix boundary)
    : field_(field), dim_plus_(dim_plus), dim_minus_(dim_minus), boundary_(std::move(boundary)) {
    if (!(boundary_.field() == field_)) throw std::invalid_argument("complex: field mismatch");
    if (boundary_.rows() != dim() || boundary_.cols() != dim())
        throw std::invalid_argument("complex: boundary must be square of size dim C+ + dim C-");
}

InvolutiveComplex InvolutiveComplex::from_blocks(const Matrix& plus_minus, const Matrix& minus_plus) {
    if (!(plus_minus.field() == minus_plus.field())) throw std::invalid_argument("complex: field mismatch");
    const std::size_t np = plus_minus.rows();
    const std::size_t nm = plus_minus.cols();
    if (minus_plus.rows() != nm || minus_plus.cols() != np)
        throw std::invalid_argument("complex: block shapes do not match sector dimensions");
    Matrix b(plus_minus.field(), np + nm, np + nm);
    b.set_block(0, np, plus_minus);
    b.set_block(np, 0, minus_plus);
    return {plus_minus.field(), np, nm, std::move(b)};
}

Matrix InvolutiveComplex::projector(Sector s) const {
    const Residue half = field_.inv(2);
    const Matrix id = Matrix::identity(field_, dim());
    const Matrix p = involution();
    return scale(s == Sector::plus ? id + p : id - p, half);
}

Matrix standard_block(const ComplexShape& shape, const Field& field) {
    if (shape.n != shape.H + 2 * shape.L) throw std::invalid_argument("shape requires n = H + 2L");
    Matrix d(field, shape.n, shape.n);
    for (std::size_t i = 0; i < shape.L; ++i) d(shape.H + i, shape.H + shape.L + i) = 1;
    return d;
}

InvolutiveComplex standard_boundary(const ComplexShape& shape, const Field& field) {
    const Matrix d = standard_block(shape, field);
    auto c = InvolutiveComplex::from_blocks(d, d);
    if (auto v = validate(c); !v.empty()) throw std::logic_error("standard complex failed validation: " + v.front());
    return c;
}

RandomComplex conjugate_standard(const ComplexShape& shape, const Matrix& u_plus, const Matrix& u_minus) {
    const Field& f = u_plus.field();
    const Matrix d = standard_block(shape, f);
    auto up_inv = inverse(u_plus);
    auto um_inv = inverse(u_minus);
    if (!up_inv || !um_inv) throw std::invalid_argument("conjugating blocks must be invertible");
    return {InvolutiveComplex::from_blocks(u_plus * d * *um_inv, u_minus * d * *up_inv), u_plus, u_minus};
}

RandomComplex random_boundary(const ComplexShape& shape, const Field& field, Rng& rng) {
    Matrix up = random_invertible(shape.n, field, rng);
    Matrix um = random_invertible(shape.n, field, rng);
    return conjugate_standard(shape, up, um);
}

std::vector<std::string> validate(const InvolutiveComplex& c) {
    std::vector<std::string> violations;
    const Matrix& d = c.boundary();
    const Matrix p = c.involution();
    if (!(d * d).is_zero()) violations.emplace_back("boundary squared is nonzero");
    if (!(p * p == Matrix::identity(c.field(), c.dim()))) violations.emplace_back("involution squared is not the identity");
    if (!(d * p + p * d).is_zero()) violations.emplace_back("boundary does not anticommute with the involution");
    if (!d.block(0, 0, c.dim_plus(), c.dim_plus()).is_zero())
        violations.emplace_back("boundary has a nonzero C+ -> C+ block");
    if (!d.block(c.dim_plus(), c.dim_plus(), c.dim_minus(), c.dim_minus()).is_zero())
        violations.emplace_back("boundary has a nonzero C- -> C- block");
    return violations;
}

HomologyDims homology_dimension(const InvolutiveComplex& c) {
    if (auto v = validate(c); !v.empty()) throw std::invalid_argument("homology of invalid complex: " + v.front());
    const std::size_t rank_pm = rank(c.plus_minus());
    const std::size_t rank_mp = rank(c.minus_plus());
    return {c.dim_plus() - rank_mp - rank_pm, c.dim_minus() - rank_pm - rank_mp};
}

bool is_good(const InvolutiveComplex& c, std::size_t n_prime) {
    if (c.dim_plus() != c.dim_minus()) throw std::invalid_argument("goodness needs equal sector dimensions");
    const std::size_t n = c.dim_plus();
    if (n_prime > n) throw std::invalid_argument("n' exceeds the sector dimension");
    std::vector<std::size_t> rows(n), tail(n - n_prime);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(tail.begin(), tail.end(), n_prime);
    // A vector supported on the tail lies in the kernel iff it is a kernel
    // vector of the block restricted to the tail columns.
    return rank(c.minus_plus().select(rows, tail)) == tail.size() &&
           rank(c.plus_minus().select(rows, tail)) == tail.size();
}

void write_complex(std::ostream& out, const InvolutiveComplex& c) {
    const Matrix pm = c.plus_minus();
    const Matrix mp = c.minus_plus();
    const std::size_t rank_pm = rank(pm);
    const std::size_t rank_mp = rank(mp);
    const std::size_t h = c.dim_plus() >= rank_pm + rank_mp ? c.dim_plus() - rank_pm - rank_mp : 0;
    out << c.field().order() << ' ' << c.dim_plus() << ' ' << h << ' ' << rank_pm << '\n';
    write_matrix(out, pm);
    write_matrix(out, mp);
}

InvolutiveComplex read_complex(std::istream& in) {
    long long d = 0, n = -1, h = -1, l = -1;
    if (!(in >> d >> n >> h >> l) || n < 0 || h < 0 || l < 0)
        throw std::runtime_error("complex: malformed header, expected `D n H L`");
    Matrix pm = read_matrix(in);
    Matrix mp = read_matrix(in);
    if (static_cast<long long>(pm.field().order()) != d || static_cast<long long>(mp.field().order()) != d)
        throw std::runtime_error("complex: block field differs from header");
    if (static_cast<long long>(pm.rows()) != n) throw std::runtime_error("complex: header n does not match blocks");
    auto c = InvolutiveComplex::from_blocks(pm, mp);
    const auto rank_pm = static_cast<long long>(rank(pm));
    const auto rank_mp = static_cast<long long>(rank(mp));
    if (rank_pm != l || n - rank_pm - rank_mp != h)
        throw std::runtime_error("complex: header H/L inconsistent with the stored blocks");
    if (auto v = validate(c); !v.empty()) throw std::runtime_error("complex: " + v.front());
    return c;
}

}  // namespace hprod
