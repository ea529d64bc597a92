#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hprod/counting.hpp"
#include "hprod/field.hpp"
#include "hprod/matrix.hpp"
#include "hprod/product.hpp"

/// Brute-force enumerations used to check the closed-form counts.
namespace hprod::oracle {

/// Rank histogram of all A x B matrices, index = rank.
std::vector<std::uint64_t> brute_rank_counts(std::size_t A, std::size_t B, const Field& field);

/// Joint histogram over all A x B matrices: entry [a][b][r][R] counts matrices
/// of rank R whose top-left a x b block has rank r. One pass over D^{AB}
/// matrices, tracking the rank profile of every leading block.
class CornerRankTable {
public:
    CornerRankTable(std::size_t A, std::size_t B, const Field& field);

    [[nodiscard]] std::uint64_t at(std::size_t a, std::size_t b, std::size_t r, std::size_t R) const;
    [[nodiscard]] std::size_t rows() const { return A_; }
    [[nodiscard]] std::size_t cols() const { return B_; }

private:
    std::size_t A_, B_, side_;
    std::vector<std::uint64_t> table_;
};

/// Rank histogram of all A x B completions of the fixed top-left `corner`.
std::vector<std::uint64_t> brute_extension_counts(const Matrix& corner, std::size_t A, std::size_t B);

/// Cycles of the product's C+ bucketed by (rk psi+, rk psi-), by enumerating
/// the cycle space.
RankPairCounts brute_cycle_rank_counts(const ProductComplex& p, std::uint64_t budget = 10'000'000);

/// Sizes searched by `verify_counting`.
struct VerifyScope {
    std::vector<std::uint64_t> primes{3, 5, 7, 11};
    std::uint64_t brute_budget = 10'000'000;  ///< max D^{AB} for brute force
    std::size_t grid = 8;                     ///< rank-partition identity for A, B <= grid
    bool include_products = true;             ///< Z and Gamma checks on small products
};

/// Runs every closed-form count against its oracle; returns one line per mismatch.
std::vector<std::string> verify_counting(const VerifyScope& scope = {});

/// Individual parts of `verify_counting`.
std::vector<std::string> verify_rank_partition(const VerifyScope& scope);
std::vector<std::string> verify_rank_counts(const VerifyScope& scope);
std::vector<std::string> verify_extension_counts(const VerifyScope& scope);
std::vector<std::string> verify_z_counts(const Field& field);
std::vector<std::string> verify_gamma_counts(const ProductComplex& p, std::size_t n_prime, std::size_t H,
                                             std::size_t L);

}  // namespace hprod::oracle
