#include "hprod/counting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hprod/linalg.hpp"
#include "hprod/reduction.hpp"

namespace hprod {

namespace {

using boost::multiprecision::pow;

BigCount power(std::uint64_t q, std::size_t e) { return pow(BigCount(q), static_cast<unsigned>(e)); }

// E^{A,B,R} with out-of-range arguments mapped to zero.
BigCount E(long long A, long long B, long long R, std::uint64_t q) {
    if (A < 0 || B < 0 || R < 0 || R > std::min(A, B)) return 0;
    BigCount count = gaussian_binomial(static_cast<std::size_t>(A), static_cast<std::size_t>(R), q);
    for (long long i = 0; i < R; ++i)
        count *= power(q, static_cast<std::size_t>(B)) - power(q, static_cast<std::size_t>(i));
    return count;
}

BigRational power_signed(std::uint64_t q, long long e) {
    const BigCount m = power(q, static_cast<std::size_t>(e < 0 ? -e : e));
    return e < 0 ? BigRational(BigCount(1), m) : BigRational(m);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

}  // namespace

BigCount gaussian_binomial(std::size_t m, std::size_t k, std::uint64_t q) {
    if (k > m) return 0;
    BigCount num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= power(q, m - i) - 1;
        den *= power(q, i + 1) - 1;
    }
    return num / den;
}

BigCount count_rank_matrices(std::size_t A, std::size_t B, std::size_t R, const Field& field) {
    return E(static_cast<long long>(A), static_cast<long long>(B), static_cast<long long>(R), field.order());
}

BigCount count_rank_extensions(std::size_t a, std::size_t b, std::size_t r, std::size_t A, std::size_t B,
                               std::size_t R, const Field& field) {
    if (a > A || b > B || r > std::min(a, b)) throw std::invalid_argument("count_rank_extensions: invalid sizes");
    const std::uint64_t q = field.order();
    const auto ll = [](std::size_t v) { return static_cast<long long>(v); };
    const long long extra_cols = ll(B) - ll(b), extra_rows = ll(A) - ll(a);
    BigCount total = 0;
    for (long long s = ll(r); s <= std::min(ll(a), ll(r) + extra_cols); ++s) {
        const BigCount cols = power(q, r * static_cast<std::size_t>(extra_cols)) * E(ll(a) - ll(r), extra_cols, s - ll(r), q);
        if (cols == 0) continue;
        const BigCount rows = power(q, static_cast<std::size_t>(s * extra_rows)) * E(ll(B) - s, extra_rows, ll(R) - s, q);
        total += cols * rows;
    }
    return total;
}

BigCount count_Z(std::size_t H, std::size_t L, std::size_t r_plus, std::size_t r_minus, const Field& field) {
    const std::uint64_t q = field.order();
    const auto hl = static_cast<long long>(H + L);
    const auto rp = static_cast<long long>(r_plus), rm = static_cast<long long>(r_minus);
    BigCount total = 0;
    for (long long f = 0; f <= static_cast<long long>(L); ++f)
        for (long long g = 0; g <= static_cast<long long>(L); ++g) {
            if (f + g > std::min(rp, rm)) continue;
            BigCount term = E(static_cast<long long>(L), static_cast<long long>(L), f, q) *
                            E(static_cast<long long>(L), static_cast<long long>(L), g, q);
            term *= power(q, static_cast<std::size_t>(2 * (f + g) * hl - 2 * f * g));
            term *= E(hl - f, hl - g, rp - f - g, q) * E(hl - g, hl - f, rm - f - g, q);
            total += term;
        }
    return total;
}

BigCount count_Gamma(std::size_t n, std::size_t n_prime, std::size_t H, std::size_t L, std::size_t R_plus,
                     std::size_t R_minus, const Field& field) {
    if (n != H + 2 * L) throw std::invalid_argument("count_Gamma: need n = H + 2L");
    if (n_prime > n || 2 * n_prime < n) throw std::invalid_argument("count_Gamma: need n/2 <= n' <= n");
    if (L < n - n_prime) throw std::invalid_argument("count_Gamma: need L >= n - n'");
    const std::size_t K = 2 * n_prime - n;
    const std::size_t L_reduced = L - (n - n_prime);
    BigCount total = 0;
    for (std::size_t rp = 0; rp <= std::min(K, R_plus); ++rp)
        for (std::size_t rm = 0; rm <= std::min(K, R_minus); ++rm) {
            BigCount z = count_Z(H, L_reduced, rp, rm, field);
            if (z == 0) continue;
            total += z * count_rank_extensions(K, K, rp, n_prime, n_prime, R_plus, field) *
                     count_rank_extensions(K, K, rm, n_prime, n_prime, R_minus, field);
        }
    return total;
}

namespace {

struct ReducedMap {
    Matrix phi1_plus, phi1_minus, phi2_plus, phi2_minus;  // restricted to the V coordinates
    ProductComplex reduced_product;
};

ReducedMap reduced_map(const ProductComplex& p, std::size_t n_prime) {
    const ReducedComplex r1 = reduce(p.first(), n_prime);
    const ReducedComplex r2 = reduce(p.second(), n_prime);
    auto head = [&](const Matrix& phi) { return phi.block(0, 0, phi.rows(), n_prime); };
    return {head(r1.phi_plus()), head(r1.phi_minus()), head(r2.phi_plus()), head(r2.phi_minus()),
            product(r1.induced, r2.induced)};
}

// (phi (x) phi) applied to (g+, g-), as a vector of the reduced C+.
Vector image_of(const ReducedMap& m, const Matrix& g_plus, const Matrix& g_minus) {
    return m.reduced_product.join_plus(m.phi1_plus * g_plus * m.phi2_plus.transpose(),
                                       m.phi1_minus * g_minus * m.phi2_minus.transpose());
}

Matrix as_matrix(const Field& f, std::size_t rows, std::size_t cols, const Vector& v, std::size_t offset) {
    Matrix m(f, rows, cols);
    std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(offset), rows * cols, m.data().begin());
    return m;
}

void bucket(RankPairCounts& counts, const Field& f, std::size_t n_prime, const Vector& g, std::vector<Residue>& buf) {
    const std::size_t sq = n_prime * n_prime;
    std::copy_n(g.begin(), sq, buf.begin());
    const std::size_t rp = rank_in_place(std::span(buf).first(sq), n_prime, n_prime, f);
    std::copy_n(g.begin() + static_cast<std::ptrdiff_t>(sq), sq, buf.begin());
    const std::size_t rm = rank_in_place(std::span(buf).first(sq), n_prime, n_prime, f);
    counts[{rp, rm}] += 1;
}

}  // namespace

RankPairCounts enumerate_reduced_cycles_subspace(const ProductComplex& p, std::size_t n_prime, std::uint64_t budget) {
    const Field& f = p.complex().field();
    const ReducedMap m = reduced_map(p, n_prime);
    const std::size_t sq = n_prime * n_prime;
    const Matrix check_mp = m.reduced_product.complex().minus_plus();

    // Linear map g -> d'(phi (x) phi)(g), column by column.
    Matrix constraint(f, check_mp.rows(), 2 * sq);
    for (std::size_t col = 0; col < 2 * sq; ++col) {
        Vector e(2 * sq, 0);
        e[col] = 1;
        const Vector img = check_mp * image_of(m, as_matrix(f, n_prime, n_prime, e, 0),
                                               as_matrix(f, n_prime, n_prime, e, sq));
        for (std::size_t i = 0; i < img.size(); ++i) constraint(i, col) = img[i];
    }
    const auto basis = kernel_basis(constraint);
    if (checked_power(f.order(), basis.size(), budget) > budget)
        throw BudgetExceeded("reduced cycle enumeration needs " + std::to_string(f.order()) + "^" +
                             std::to_string(basis.size()) + " vectors");
    RankPairCounts counts;
    std::vector<Residue> buf(sq);
    for_each_in_span(f, 2 * sq, basis, [&](const Vector& g) {
        bucket(counts, f, n_prime, g, buf);
        return false;
    });
    return counts;
}

RankPairCounts enumerate_reduced_cycles(const ProductComplex& p, std::size_t n_prime, std::uint64_t budget) {
    const Field& f = p.complex().field();
    const std::size_t sq = n_prime * n_prime;
    if (checked_power(f.order(), 2 * sq, budget) > budget) return enumerate_reduced_cycles_subspace(p, n_prime, budget);

    // Every pair (g+, g-) in V+, filtered by the cycle condition.
    const ReducedMap m = reduced_map(p, n_prime);
    const Matrix check_mp = m.reduced_product.complex().minus_plus();
    std::vector<Vector> unit(2 * sq, Vector(2 * sq, 0));
    for (std::size_t i = 0; i < 2 * sq; ++i) unit[i][i] = 1;
    RankPairCounts counts;
    std::vector<Residue> buf(sq);
    for_each_in_span(f, 2 * sq, unit, [&](const Vector& g) {
        const Vector h = image_of(m, as_matrix(f, n_prime, n_prime, g, 0), as_matrix(f, n_prime, n_prime, g, sq));
        if (is_zero(check_mp * h)) bucket(counts, f, n_prime, g, buf);
        return false;
    });
    return counts;
}

BigRational e_bound_ratio(std::size_t A, std::size_t B, std::size_t R, const Field& field) {
    const auto e = static_cast<long long>((A + B) * R) - static_cast<long long>(R * R);
    return BigRational(count_rank_matrices(A, B, R, field)) / power_signed(field.order(), e);
}

BigRational z_bound_form(std::size_t H, std::size_t L, std::size_t r_plus, std::size_t r_minus, const Field& field) {
    const std::uint64_t q = field.order();
    const auto rp = static_cast<long long>(r_plus), rm = static_cast<long long>(r_minus);
    const auto hl = static_cast<long long>(H + L);
    BigRational sum = 0;
    for (long long l = 0; l <= 2 * static_cast<long long>(L); ++l)
        sum += power_signed(q, -l * l + (rp + rm - 2 * static_cast<long long>(H)) * l);
    return power_signed(q, 2 * hl * (rp + rm) - (rp * rp + rm * rm)) * sum;
}

double predgood_exponent(double r, double epsilon, double rho) {
    return -2.0 * (1.0 - 2.0 * r - 2.0 * epsilon + 2.0 * r * epsilon - rho);
}

double random_code_exponent(double c, double rho, const Field& field) {
    const double lnD = std::log(static_cast<double>(field.order()));
    auto xlogx = [&](double x) { return x > 0.0 ? x * std::log(x) / lnD : 0.0; };
    return -xlogx(1.0 - c) - xlogx(c) + c * std::log(static_cast<double>(field.order() - 1)) / lnD - 0.5 + rho / 2.0;
}

BoundReport evaluate_bounds(const CountParams& cp, std::size_t n, double rho, double r, double epsilon, double c,
                            const Field& field) {
    BoundReport b;
    const double D = field.order();
    const auto to_d = [](const auto& x) { return static_cast<double>(x); };

    b.e_exact = to_d(count_rank_matrices(cp.A, cp.B, cp.R, field));
    b.e_form = std::pow(D, static_cast<double>((cp.A + cp.B) * cp.R) - static_cast<double>(cp.R * cp.R));
    b.e_ratio = to_d(e_bound_ratio(cp.A, cp.B, cp.R, field));

    if (cp.a <= cp.A && cp.b <= cp.B && cp.r <= std::min(cp.a, cp.b)) {
        const double a = cp.a, bb = cp.b, rr = cp.r, A = cp.A, B = cp.B, R = cp.R;
        b.e_ext_exact = to_d(count_rank_extensions(cp.a, cp.b, cp.r, cp.A, cp.B, cp.R, field));
        b.e_ext_form = std::pow(D, (A + B - bb) * R - bb * rr - R * R + (bb - a + rr + R) * (bb - a + rr + R) / 4.0);
        b.e_ext_ratio = b.e_ext_exact / b.e_ext_form;
    }

    const BigCount z = count_Z(cp.H, cp.L, cp.r_plus, cp.r_minus, field);
    const BigRational form = z_bound_form(cp.H, cp.L, cp.r_plus, cp.r_minus, field);
    b.z_exact = to_d(z);
    b.z_form = to_d(form);
    b.z_ratio = to_d(BigRational(z) / form);
    b.z_within_n_form = BigRational(z) <= BigRational(cp.H + 2 * cp.L) * form;

    b.random_code_exponent = random_code_exponent(c, rho, field);
    b.predgood_exponent = predgood_exponent(r, epsilon, rho);
    b.predgood_value = std::pow(static_cast<double>(n), 6.0) * std::pow(D, b.predgood_exponent * static_cast<double>(n));
    return b;
}

}  // namespace hprod
