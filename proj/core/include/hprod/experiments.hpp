#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hprod/errors.hpp"
#include "hprod/field.hpp"
#include "hprod/matrix.hpp"
#include "hprod/rng.hpp"

namespace hprod {

struct TrialConfig {
    Field field{3};
    std::size_t n = 3;
    double rho = 0.0;
    double r = 0.0;
    double c = 0.0;
    double epsilon = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    unsigned threads = 1;
};

/// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct EstimateReport {
    std::string experiment;
    std::uint32_t D = 0;
    std::size_t n = 0;
    std::size_t n_prime = 0;
    std::size_t R = 0;
    double rho = 0;
    double c = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0;
    double wilson_lo = 0;
    double wilson_hi = 0;
    std::uint64_t seed = 0;
};

/// Counts trials for which `trial(rng)` holds, trial i using Rng::derive(seed, i).
/// Trials are strided over `threads` workers; the count does not depend on it.
std::uint64_t run_trials(std::uint64_t trials, std::uint64_t master_seed, unsigned threads,
                         const std::function<bool(Rng&)>& trial);

/// Fraction of random complexes (shape from n, rho) whose boundary kernel has
/// a nonzero vector of weight < c n, decided exactly by bounded search.
EstimateReport mc_low_weight_kernel(const TrialConfig& cfg);

/// Same experiment for each n in `ns`, trial seeds shared across n.
std::vector<EstimateReport> mc_low_weight_kernel_sweep(TrialConfig cfg, const std::vector<std::size_t>& ns);

/// Fraction of random complexes that are good for n'.
EstimateReport mc_goodness(const TrialConfig& cfg, std::size_t n_prime);

/// U I_R V with U, V uniform in GL(n', D).
Matrix sample_uniform_rank(std::size_t n_prime, std::size_t R, const Field& field, Rng& rng);

/// Fraction of uniform rank-R n' x n' matrices with all row and column
/// weights at most c' n'.
EstimateReport mc_uniform_low_weight(std::size_t n_prime, std::size_t R, double c_prime, const Field& field,
                                     std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// Exact probability behind mc_uniform_low_weight, as (hits, rank-R matrices),
/// by enumerating all n' x n' matrices.
std::pair<std::uint64_t, std::uint64_t> exact_uniform_low_weight(std::size_t n_prime, std::size_t R,
                                                                 double c_prime, const Field& field,
                                                                 std::uint64_t budget = 10'000'000);

/// Header plus one row per report; header only for an empty list.
void emit_csv(std::ostream& out, const std::vector<EstimateReport>& reports);

}  // namespace hprod
