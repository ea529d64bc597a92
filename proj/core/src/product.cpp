#include "hprod/product.hpp"

#include <stdexcept>

namespace hprod {

namespace {

struct Layout {
    std::vector<std::size_t> position;
    std::vector<std::size_t> pair_of;
    std::size_t plus = 0;
};

Layout make_layout(const InvolutiveComplex& c1, const InvolutiveComplex& c2) {
    const std::size_t n1 = c1.dim(), n2 = c2.dim();
    auto positive = [&](std::size_t i, std::size_t j) { return (i < c1.dim_plus()) == (j < c2.dim_plus()); };
    Layout l;
    l.position.resize(n1 * n2);
    l.pair_of.reserve(n1 * n2);
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j) {
                if (positive(i, j) != (pass == 0)) continue;
                l.position[i * n2 + j] = l.pair_of.size();
                l.pair_of.push_back(i * n2 + j);
            }
    l.plus = c1.dim_plus() * c2.dim_plus() + c1.dim_minus() * c2.dim_minus();
    return l;
}

InvolutiveComplex build(const InvolutiveComplex& c1, const InvolutiveComplex& c2, const Layout& l) {
    if (!(c1.field() == c2.field())) throw std::invalid_argument("product: field mismatch");
    if (auto v = validate(c1); !v.empty()) throw std::invalid_argument("product: first factor invalid: " + v.front());
    if (auto v = validate(c2); !v.empty()) throw std::invalid_argument("product: second factor invalid: " + v.front());
    const Matrix natural = kron(c1.boundary(), Matrix::identity(c1.field(), c2.dim())) +
                           kron(c1.involution(), c2.boundary());
    const std::size_t n = natural.rows();
    Matrix permuted(c1.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) permuted(l.position[r], l.position[c]) = natural(r, c);
    return {c1.field(), l.plus, n - l.plus, std::move(permuted)};
}

}  // namespace

ProductComplex::ProductComplex(InvolutiveComplex first, InvolutiveComplex second)
    : first_(std::move(first)),
      second_(std::move(second)),
      product_([&] {
          Layout l = make_layout(first_, second_);
          auto c = build(first_, second_, l);
          position_ = std::move(l.position);
          pair_of_ = std::move(l.pair_of);
          return c;
      }()) {}

std::pair<std::size_t, std::size_t> ProductComplex::pair_at(std::size_t pos) const {
    const std::size_t k = pair_of_.at(pos);
    return {k / second_.dim(), k % second_.dim()};
}

std::pair<Matrix, Matrix> ProductComplex::split_plus(const Vector& v) const {
    if (v.size() != product_.dim_plus()) throw std::invalid_argument("split_plus: vector is not in C+");
    const Field& f = product_.field();
    const std::size_t p1 = first_.dim_plus(), p2 = second_.dim_plus();
    const std::size_t m1 = first_.dim_minus(), m2 = second_.dim_minus();
    Matrix psi_plus(f, p1, p2), psi_minus(f, m1, m2);
    for (std::size_t i = 0; i < p1; ++i)
        for (std::size_t j = 0; j < p2; ++j) psi_plus(i, j) = v[index_of(i, j)];
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m2; ++j) psi_minus(i, j) = v[index_of(p1 + i, p2 + j)];
    return {std::move(psi_plus), std::move(psi_minus)};
}

Vector ProductComplex::join_plus(const Matrix& psi_plus, const Matrix& psi_minus) const {
    const std::size_t p1 = first_.dim_plus(), p2 = second_.dim_plus();
    if (psi_plus.rows() != p1 || psi_plus.cols() != p2 || psi_minus.rows() != first_.dim_minus() ||
        psi_minus.cols() != second_.dim_minus())
        throw std::invalid_argument("join_plus: block shapes do not match the factors");
    Vector v(product_.dim_plus(), 0);
    for (std::size_t i = 0; i < psi_plus.rows(); ++i)
        for (std::size_t j = 0; j < psi_plus.cols(); ++j) v[index_of(i, j)] = psi_plus(i, j);
    for (std::size_t i = 0; i < psi_minus.rows(); ++i)
        for (std::size_t j = 0; j < psi_minus.cols(); ++j) v[index_of(p1 + i, p2 + j)] = psi_minus(i, j);
    return v;
}

ProductComplex product(const InvolutiveComplex& c1, const InvolutiveComplex& c2) { return {c1, c2}; }

std::vector<Vector> cycle_space_plus(const ProductComplex& p) { return kernel_basis(p.complex().minus_plus()); }

KunnethReport kunneth_check(const ProductComplex& p) {
    KunnethReport r;
    r.factor1 = homology_dimension(p.first());
    r.factor2 = homology_dimension(p.second());
    const InvolutiveComplex& c = p.complex();
    const Matrix pm = c.plus_minus();
    const Matrix mp = c.minus_plus();

    r.cycles_plus = kernel_basis(mp).size();
    r.boundaries_plus = rank(pm);
    r.homology_plus = r.cycles_plus - r.boundaries_plus;
    // Cocycles on C+ are ker(pm^T); coboundaries are the row space of mp.
    r.cohomology_plus = kernel_basis(pm.transpose()).size() - rank(mp.transpose());
    r.homology_minus = kernel_basis(pm).size() - rank(mp);

    r.expected_plus = r.factor1.plus * r.factor2.plus + r.factor1.minus * r.factor2.minus;
    r.expected_minus = r.factor1.plus * r.factor2.minus + r.factor1.minus * r.factor2.plus;

    auto expect = [&](std::size_t got, std::size_t want, const char* what) {
        if (got != want)
            r.violations.push_back(std::string(what) + ": got " + std::to_string(got) + ", expected " +
                                   std::to_string(want));
    };
    expect(r.homology_plus, r.expected_plus, "homology of C+");
    expect(r.cohomology_plus, r.expected_plus, "cohomology of C+");
    expect(r.homology_minus, r.expected_minus, "homology of C-");
    return r;
}

}  // namespace hprod
