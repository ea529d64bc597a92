#include "hprod/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hprod {

ReductionParams ReductionParams::from_rate(std::size_t n, double r, double c) {
    if (!(0.0 <= c && c < r && r < 1.0)) throw std::invalid_argument("reduction params need 0 <= c < r < 1");
    // Markov counting leaves more than (1 - r) n light rows, hence at least the ceiling.
    const double target = (1.0 - r) * static_cast<double>(n);
    auto n_prime = static_cast<std::size_t>(std::ceil(target - 1e-9));
    ReductionParams p{n, std::min(n_prime, n), r, c};
    if (2 * p.n_prime < n) throw std::invalid_argument("reduction params need 2n' >= n");
    return p;
}

ReductionParams ReductionParams::from_dims(std::size_t n, std::size_t n_prime, double c) {
    if (n_prime > n || 2 * n_prime < n) throw std::invalid_argument("reduction params need n/2 <= n' <= n");
    if (c < 0.0) throw std::invalid_argument("reduction params need c >= 0");
    const double r = n == 0 ? 0.0 : 1.0 - static_cast<double>(n_prime) / static_cast<double>(n);
    return {n, n_prime, r, c};
}

namespace {

struct SectorQuotient {
    std::vector<Vector> s_basis;       // RREF rows
    std::vector<std::size_t> reps;     // non-pivot coordinates of V
    Matrix projection;                 // |reps| x n: x -> coordinates of Wx + S> on reps
};

// `block` maps the other sector into this one; its tail columns span d(V>).
SectorQuotient quotient(const Matrix& block, std::size_t n_prime) {
    const Field& f = block.field();
    const std::size_t n = block.rows();
    std::vector<std::size_t> head(n_prime), tail(n - n_prime);
    std::iota(head.begin(), head.end(), 0);
    std::iota(tail.begin(), tail.end(), n_prime);
    const Echelon e = row_reduce(block.select(head, tail).transpose());

    SectorQuotient q{{}, {}, Matrix(f, 0, 0)};
    std::vector<bool> pivot(n_prime, false);
    for (std::size_t i = 0; i < e.rank(); ++i) {
        q.s_basis.emplace_back(e.reduced.row(i).begin(), e.reduced.row(i).end());
        pivot[e.pivot_cols[i]] = true;
    }
    for (std::size_t j = 0; j < n_prime; ++j)
        if (!pivot[j]) q.reps.push_back(j);

    // u - sum_i u[pivot_i] s_i is supported on the representatives.
    q.projection = Matrix(f, q.reps.size(), n);
    for (std::size_t a = 0; a < q.reps.size(); ++a) {
        q.projection(a, q.reps[a]) = 1;
        for (std::size_t i = 0; i < e.rank(); ++i)
            q.projection(a, e.pivot_cols[i]) = f.neg(q.s_basis[i][q.reps[a]]);
    }
    return q;
}

}  // namespace

Matrix ReducedComplex::phi_plus() const { return phi.block(0, 0, reps_plus.size(), base.dim_plus()); }

Matrix ReducedComplex::phi_minus() const {
    return phi.block(reps_plus.size(), base.dim_plus(), reps_minus.size(), base.dim_minus());
}

ReducedComplex reduce(const InvolutiveComplex& c, std::size_t n_prime) {
    if (c.dim_plus() != c.dim_minus()) throw std::invalid_argument("reduce needs equal sector dimensions");
    const std::size_t n = c.dim_plus();
    if (n_prime > n) throw std::invalid_argument("n' exceeds the sector dimension");
    const Field& f = c.field();

    SectorQuotient plus = quotient(c.plus_minus(), n_prime);
    SectorQuotient minus = quotient(c.minus_plus(), n_prime);
    const std::size_t kp = plus.reps.size(), km = minus.reps.size();

    Matrix phi(f, kp + km, 2 * n);
    phi.set_block(0, 0, plus.projection);
    phi.set_block(kp, n, minus.projection);
    Matrix lift(f, 2 * n, kp + km);
    for (std::size_t a = 0; a < kp; ++a) lift(plus.reps[a], a) = 1;
    for (std::size_t a = 0; a < km; ++a) lift(n + minus.reps[a], kp + a) = 1;

    Matrix induced_boundary = phi * c.boundary() * lift;
    Matrix induced_involution = phi * c.involution() * lift;
    InvolutiveComplex induced(f, kp, km, std::move(induced_boundary));

    return ReducedComplex{c,
                          n_prime,
                          std::move(plus.s_basis),
                          std::move(minus.s_basis),
                          std::move(plus.reps),
                          std::move(minus.reps),
                          std::move(phi),
                          std::move(lift),
                          std::move(induced),
                          std::move(induced_involution)};
}

std::vector<std::string> check_reduction(const ReducedComplex& rc) {
    std::vector<std::string> v = validate(rc.induced);
    const InvolutiveComplex& c = rc.base;
    const std::size_t n = c.dim_plus();
    if (!(rc.induced_involution == rc.induced.involution())) v.emplace_back("P' is not diag(I, -I)");
    if (!(rc.phi * c.boundary() == rc.induced.boundary() * rc.phi)) v.emplace_back("phi d != d' phi");
    if (!(rc.phi * c.involution() == rc.induced_involution * rc.phi)) v.emplace_back("phi P != P' phi");
    if (!(rc.phi * rc.lift == Matrix::identity(c.field(), rc.induced.dim())))
        v.emplace_back("representatives are not a section of phi");

    // Well-definedness: phi(d x) = phi(P x) = 0 for x in S>.
    auto embed = [&](const Vector& s, std::size_t offset) {
        Vector x(2 * n, 0);
        std::copy(s.begin(), s.end(), x.begin() + static_cast<std::ptrdiff_t>(offset));
        return x;
    };
    std::vector<Vector> s_all;
    for (const auto& s : rc.s_plus) s_all.push_back(embed(s, 0));
    for (const auto& s : rc.s_minus) s_all.push_back(embed(s, n));
    const Matrix p = c.involution();
    for (const auto& x : s_all) {
        if (!is_zero(rc.phi * x)) v.emplace_back("S> is not in the kernel of phi");
        if (!is_zero(rc.phi * (c.boundary() * x))) v.emplace_back("d' is not well defined on S>");
        if (!is_zero(rc.phi * (p * x))) v.emplace_back("P' is not well defined on S>");
    }
    return v;
}

KerImReport reduced_kerim_check(const ReducedComplex& rc) {
    KerImReport r;
    const InvolutiveComplex& c = rc.base;
    const Field& f = c.field();
    const std::size_t n = c.dim_plus();
    const std::size_t dv = rc.induced.dim();

    // d^{-1}(V>) = ker(W d), W keeping the first n' coordinates of each sector.
    std::vector<std::size_t> v_rows, all(2 * n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < rc.n_prime; ++i) v_rows.push_back(i);
    for (std::size_t i = 0; i < rc.n_prime; ++i) v_rows.push_back(n + i);
    const auto preimage = kernel_basis(c.boundary().select(v_rows, all));
    std::vector<Vector> mapped;
    for (const auto& x : preimage) mapped.push_back(rc.phi * x);
    r.kernel_equal = same_span(f, dv, kernel_basis(rc.induced.boundary()), mapped);
    if (!r.kernel_equal) r.violations.emplace_back("ker d' != phi(d^{-1}(V>))");

    r.image_equal = same_span(f, dv, column_space_basis(rc.induced.boundary()),
                              column_space_basis(rc.phi * c.boundary()));
    if (!r.image_equal) r.violations.emplace_back("im d' != phi(im d)");

    r.dim_v_plus = rc.induced.dim_plus();
    r.dim_v_minus = rc.induced.dim_minus();
    const Matrix mp = c.minus_plus(), pm = c.plus_minus();
    const Matrix mp_r = rc.induced.minus_plus(), pm_r = rc.induced.plus_minus();
    r.im_mp = rank(mp);
    r.ker_mp = mp.cols() - r.im_mp;
    r.im_pm = rank(pm);
    r.ker_pm = pm.cols() - r.im_pm;
    r.im_mp_reduced = rank(mp_r);
    r.ker_mp_reduced = mp_r.cols() - r.im_mp_reduced;
    r.im_pm_reduced = rank(pm_r);
    r.ker_pm_reduced = pm_r.cols() - r.im_pm_reduced;

    r.good = is_good(c, rc.n_prime);
    if (r.good) {
        const std::size_t drop = n - rc.n_prime;
        auto expect = [&](std::size_t got, long long want, const char* what) {
            if (static_cast<long long>(got) != want)
                r.violations.push_back(std::string(what) + ": got " + std::to_string(got) + ", expected " +
                                       std::to_string(want));
        };
        const auto k = static_cast<long long>(2 * rc.n_prime) - static_cast<long long>(n);
        const auto d = static_cast<long long>(drop);
        expect(r.dim_v_plus, k, "dim V'+");
        expect(r.dim_v_minus, k, "dim V'-");
        expect(r.ker_mp_reduced, static_cast<long long>(r.ker_mp) - d, "dim ker d'-+");
        expect(r.im_mp_reduced, static_cast<long long>(r.im_mp) - d, "dim im d'-+");
        expect(r.ker_pm_reduced, static_cast<long long>(r.ker_pm) - d, "dim ker d'+-");
        expect(r.im_pm_reduced, static_cast<long long>(r.im_pm) - d, "dim im d'+-");
    }
    return r;
}

ReducedSupport ReducedSupport::leading(std::size_t n_prime) {
    std::vector<std::size_t> idx(n_prime);
    std::iota(idx.begin(), idx.end(), 0);
    return {idx, idx, idx, idx};
}

namespace {

std::vector<std::size_t> light_lines(const Matrix& m, bool by_row, const ReductionParams& params) {
    const std::size_t count = by_row ? m.rows() : m.cols();
    const double bound = params.c * static_cast<double>(params.n);
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < count && picked.size() < params.n_prime; ++i) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < (by_row ? m.cols() : m.rows()); ++j)
            if ((by_row ? m(i, j) : m(j, i)) != 0) ++w;
        // weight <= c n / r, written without dividing by r
        if (static_cast<double>(w) * params.r <= bound * (1.0 + 1e-12)) picked.push_back(i);
    }
    return picked;
}

}  // namespace

std::optional<ReducedSupport> select_reduced_support(const Matrix& psi_plus, const Matrix& psi_minus,
                                                     const ReductionParams& params) {
    if (psi_plus.rows() != params.n || psi_plus.cols() != params.n || psi_minus.rows() != params.n ||
        psi_minus.cols() != params.n)
        throw std::invalid_argument("select_reduced_support: blocks must be n x n");
    ReducedSupport s{light_lines(psi_plus, true, params), light_lines(psi_plus, false, params),
                     light_lines(psi_minus, true, params), light_lines(psi_minus, false, params)};
    for (const auto* idx : {&s.rows_plus, &s.cols_plus, &s.rows_minus, &s.cols_minus})
        if (idx->size() < params.n_prime) return std::nullopt;
    return s;
}

std::pair<Matrix, Matrix> reduced_matrix(const Matrix& psi_plus, const Matrix& psi_minus,
                                         const ReducedSupport& support) {
    return {psi_plus.select(support.rows_plus, support.cols_plus),
            psi_minus.select(support.rows_minus, support.cols_minus)};
}

bool uniform_low_weight(const Matrix& m, double c_prime) {
    if (m.rows() != m.cols()) throw std::invalid_argument("uniform_low_weight needs a square matrix");
    const double bound = c_prime * static_cast<double>(m.rows());
    return static_cast<double>(weight(m)) <= bound * (1.0 + 1e-12);
}

bool uniform_low_weight(const Matrix& m, const ReductionParams& params) {
    return uniform_low_weight(m, params.c_prime());
}

}  // namespace hprod
