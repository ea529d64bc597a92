#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hprod/complex.hpp"

namespace hprod {

/// Parameters of the reduced-matrix construction.
///
/// n' rows and columns of each block are kept; r is the discarded fraction,
/// c the total weight density, c' = c / (r (1 - r)) the density threshold of
/// the uniform low weight condition and K = 2n' - n the reduced sector size.
struct ReductionParams {
    std::size_t n = 0;
    std::size_t n_prime = 0;
    double r = 0.0;
    double c = 0.0;

    [[nodiscard]] double c_prime() const { return c / r / (1.0 - r); }
    [[nodiscard]] std::size_t K() const { return 2 * n_prime - n; }

    /// n' = ceil((1 - r) n); requires 0 <= c < r < 1 and 2n' >= n.
    static ReductionParams from_rate(std::size_t n, double r, double c);
    /// r = 1 - n'/n; requires n/2 <= n' <= n and c >= 0.
    static ReductionParams from_dims(std::size_t n, std::size_t n_prime, double c);
};

/// Quotient V' = V / S> of the leading-coordinate subspace V (first n'
/// basis vectors of each sector) by S> = W d(V>).
///
/// Coset representatives are the coordinates of V that are not pivots of the
/// row-reduced basis of S>, so `phi` is a concrete matrix C -> V'.
struct ReducedComplex {
    InvolutiveComplex base;
    std::size_t n_prime = 0;
    std::vector<Vector> s_plus;              ///< RREF basis of S> within V+ (length n')
    std::vector<Vector> s_minus;             ///< RREF basis of S> within V- (length n')
    std::vector<std::size_t> reps_plus;      ///< representative coordinates of V'+ in V+
    std::vector<std::size_t> reps_minus;
    Matrix phi;                              ///< dim V' x dim C
    Matrix lift;                             ///< dim C x dim V', representatives
    InvolutiveComplex induced;               ///< (V', d', P') with P' in canonical form
    Matrix induced_involution;               ///< phi P lift, kept for checking

    [[nodiscard]] Matrix phi_plus() const;   ///< |V'+| x n block of phi
    [[nodiscard]] Matrix phi_minus() const;  ///< |V'-| x n block of phi
};

ReducedComplex reduce(const InvolutiveComplex& c, std::size_t n_prime);

/// Exact checks of the reduced complex: involution identities for (V', d', P'),
/// P' canonical, chain-map identities and well-definedness on S>.
std::vector<std::string> check_reduction(const ReducedComplex& rc);

struct KerImReport {
    bool kernel_equal = false;  ///< ker d' = phi(d^{-1}(V>))
    bool image_equal = false;   ///< im d' = phi(im d)
    bool good = false;
    std::size_t dim_v_plus = 0;
    std::size_t dim_v_minus = 0;
    std::size_t ker_mp = 0, ker_mp_reduced = 0;
    std::size_t im_mp = 0, im_mp_reduced = 0;
    std::size_t ker_pm = 0, ker_pm_reduced = 0;
    std::size_t im_pm = 0, im_pm_reduced = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Subspace equalities always; dimension corollaries only when the base is good.
KerImReport reduced_kerim_check(const ReducedComplex& rc);

/// Row and column index sets, per block, of a reduced matrix.
struct ReducedSupport {
    std::vector<std::size_t> rows_plus, cols_plus;
    std::vector<std::size_t> rows_minus, cols_minus;

    /// First n' indices everywhere.
    static ReducedSupport leading(std::size_t n_prime);
};

/// Lowest-index n' rows and n' columns of each block with weight at most
/// c n / r; nullopt when fewer than n' qualify somewhere.
std::optional<ReducedSupport> select_reduced_support(const Matrix& psi_plus, const Matrix& psi_minus,
                                                     const ReductionParams& params);

std::pair<Matrix, Matrix> reduced_matrix(const Matrix& psi_plus, const Matrix& psi_minus,
                                         const ReducedSupport& support);

/// Every row and column of the square matrix has weight at most c' n'.
bool uniform_low_weight(const Matrix& m, double c_prime);
bool uniform_low_weight(const Matrix& m, const ReductionParams& params);

}  // namespace hprod
