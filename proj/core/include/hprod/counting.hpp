#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hprod/errors.hpp"
#include "hprod/field.hpp"
#include "hprod/product.hpp"

namespace hprod {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Histogram keyed by (rank of the + block, rank of the - block).
using RankPairCounts = std::map<std::pair<std::size_t, std::size_t>, BigCount>;

/// Number of k-dimensional subspaces of GF(q)^m.
BigCount gaussian_binomial(std::size_t m, std::size_t k, std::uint64_t q);

/// E^{A,B,R}: number of A x B matrices of rank R,
/// [A choose R]_D * prod_{i<R} (D^B - D^i).
BigCount count_rank_matrices(std::size_t A, std::size_t B, std::size_t R, const Field& field);

/// E_{a,b,r}^{A,B,R}: number of A x B rank-R matrices whose top-left a x b
/// block is a fixed rank-r matrix.
///
/// Computed by first bordering the corner with B - b columns (reaching rank s)
/// and then with A - a rows:
///   sum_s D^{r(B-b)} E^{a-r,B-b,s-r} * D^{s(A-a)} E^{B-s,A-a,R-s}.
BigCount count_rank_extensions(std::size_t a, std::size_t b, std::size_t r, std::size_t A, std::size_t B,
                               std::size_t R, const Field& field);

/// Z_{H,L}(r+, r-): number of cycles h of C+ in the product of two complexes
/// of shape (H, L) whose blocks have ranks r+ and r-. Exact double sum over
/// the ranks f, g of the two L x L coupling blocks.
BigCount count_Z(std::size_t H, std::size_t L, std::size_t r_plus, std::size_t r_minus, const Field& field);

/// Gamma(R+, R-): number of reduced cycles with block ranks R+-, for good
/// factors of shape (H, L) reduced to n' coordinates (K = 2n' - n).
BigCount count_Gamma(std::size_t n, std::size_t n_prime, std::size_t H, std::size_t L, std::size_t R_plus,
                     std::size_t R_minus, const Field& field);

/// Brute-force oracle for count_Gamma: counts pairs (g+, g-) of n' x n'
/// matrices whose image under phi (x) phi is a cycle of the reduced product,
/// bucketed by (rk g+, rk g-). Enumerates all pairs when D^{2n'^2} fits the
/// budget, otherwise the solution subspace; throws BudgetExceeded beyond.
RankPairCounts enumerate_reduced_cycles(const ProductComplex& p, std::size_t n_prime,
                                        std::uint64_t budget = 10'000'000);

/// Same count restricted to enumerating the solution subspace.
RankPairCounts enumerate_reduced_cycles_subspace(const ProductComplex& p, std::size_t n_prime,
                                                 std::uint64_t budget = 10'000'000);

/// Inputs to `evaluate_bounds`. Unused fields are ignored.
struct CountParams {
    std::size_t A = 0, B = 0, R = 0;
    std::size_t a = 0, b = 0, r = 0;
    std::size_t H = 0, L = 0;
    std::size_t r_plus = 0, r_minus = 0;
};

/// Exponential parts of the asymptotic bounds with all O(.) constants set to 1,
/// next to the exact counts where those exist.
struct BoundReport {
    double e_exact = 0, e_form = 0, e_ratio = 0;           ///< E^{A,B,R} vs D^{(A+B)R-R^2}
    double e_ext_exact = 0, e_ext_form = 0, e_ext_ratio = 0;  ///< E_{a,b,r}^{A,B,R} vs its O(1) form
    double z_exact = 0, z_form = 0, z_ratio = 0;           ///< Z vs D^{...} sum_l D^{...}
    bool z_within_n_form = false;                          ///< Z <= n * form
    double random_code_exponent = 0;  ///< per-n exponent (base D) of the low-weight kernel bound
    double predgood_exponent = 0;     ///< -2(1 - 2r - 2eps + 2r eps - rho)
    double predgood_value = 0;        ///< n^6 D^{predgood_exponent n}
};

BoundReport evaluate_bounds(const CountParams& params, std::size_t n, double rho, double r, double epsilon,
                            double c, const Field& field);

/// Exact E-form ratio E^{A,B,R} / D^{(A+B)R-R^2}.
BigRational e_bound_ratio(std::size_t A, std::size_t B, std::size_t R, const Field& field);

/// D^{2(H+L)(r+ + r-) - (r+^2 + r-^2)} sum_{l=0}^{2L} D^{-l^2 + (r+ + r- - 2H) l}.
BigRational z_bound_form(std::size_t H, std::size_t L, std::size_t r_plus, std::size_t r_minus, const Field& field);

double predgood_exponent(double r, double epsilon, double rho);

/// -(1-c) log_D(1-c) - c log_D c + c log_D(D-1) - 1/2 + rho/2.
double random_code_exponent(double c, double rho, const Field& field);

}  // namespace hprod
