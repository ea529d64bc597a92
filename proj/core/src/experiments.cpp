#include "hprod/experiments.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hprod/complex.hpp"
#include "hprod/css.hpp"
#include "hprod/errors.hpp"
#include "hprod/linalg.hpp"
#include "hprod/reduction.hpp"

namespace hprod {

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;
    const double nt = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nt;
    const double denom = 1.0 + z * z / nt;
    const double centre = (p + z * z / (2.0 * nt)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nt + z * z / (4.0 * nt * nt)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::uint64_t run_trials(std::uint64_t trials, std::uint64_t master_seed, unsigned threads,
                         const std::function<bool(Rng&)>& trial) {
    threads = std::max(1u, threads);
    std::vector<std::uint64_t> hits(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned t) {
        try {
            for (std::uint64_t i = t; i < trials; i += threads) {
                Rng rng = Rng::derive(master_seed, i);
                if (trial(rng)) ++hits[t];
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::uint64_t total = 0;
    for (auto h : hits) total += h;
    return total;
}

namespace {

EstimateReport finish(EstimateReport r) {
    r.estimate = r.trials == 0 ? 0.0 : static_cast<double>(r.successes) / static_cast<double>(r.trials);
    std::tie(r.wilson_lo, r.wilson_hi) = wilson_interval(r.successes, r.trials);
    return r;
}

void check_trials(std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
}

}  // namespace

EstimateReport mc_low_weight_kernel(const TrialConfig& cfg) {
    check_trials(cfg.trials);
    if (cfg.c < 0.0) throw std::invalid_argument("c must be nonnegative");
    const ComplexShape shape = ComplexShape::from_rho(cfg.n, cfg.rho);
    // largest integer weight strictly below c n
    const double cn = cfg.c * static_cast<double>(cfg.n);
    const std::size_t w = cn <= 1e-9 ? 0 : static_cast<std::size_t>(std::ceil(cn - 1e-9)) - 1;

    EstimateReport r{"kernel", cfg.field.order(), cfg.n, 0, 0, cfg.rho, cfg.c, cfg.trials, 0, 0, 0, 0,
                     cfg.master_seed};
    if (w > 0)
        r.successes = run_trials(cfg.trials, cfg.master_seed, cfg.threads, [&](Rng& rng) {
            const InvolutiveComplex c = random_boundary(shape, cfg.field, rng).complex;
            return min_kernel_weight_bounded(c.minus_plus(), w).has_value() ||
                   min_kernel_weight_bounded(c.plus_minus(), w).has_value();
        });
    return finish(r);
}

std::vector<EstimateReport> mc_low_weight_kernel_sweep(TrialConfig cfg, const std::vector<std::size_t>& ns) {
    std::vector<EstimateReport> out;
    for (auto n : ns) {
        cfg.n = n;
        out.push_back(mc_low_weight_kernel(cfg));
    }
    return out;
}

EstimateReport mc_goodness(const TrialConfig& cfg, std::size_t n_prime) {
    check_trials(cfg.trials);
    if (n_prime > cfg.n) throw std::invalid_argument("n' exceeds n");
    const ComplexShape shape = ComplexShape::from_rho(cfg.n, cfg.rho);
    EstimateReport r{"goodness", cfg.field.order(), cfg.n, n_prime, 0, cfg.rho, cfg.c, cfg.trials, 0, 0, 0, 0,
                     cfg.master_seed};
    r.successes = run_trials(cfg.trials, cfg.master_seed, cfg.threads, [&](Rng& rng) {
        return is_good(random_boundary(shape, cfg.field, rng).complex, n_prime);
    });
    return finish(r);
}

Matrix sample_uniform_rank(std::size_t n_prime, std::size_t R, const Field& field, Rng& rng) {
    if (R > n_prime) throw std::invalid_argument("rank exceeds the matrix size");
    Matrix mid(field, n_prime, n_prime);
    for (std::size_t i = 0; i < R; ++i) mid(i, i) = 1;
    const Matrix u = random_invertible(n_prime, field, rng);
    const Matrix v = random_invertible(n_prime, field, rng);
    return u * mid * v;
}

EstimateReport mc_uniform_low_weight(std::size_t n_prime, std::size_t R, double c_prime, const Field& field,
                                     std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    check_trials(trials);
    EstimateReport r{"ulw", field.order(), 0, n_prime, R, 0, c_prime, trials, 0, 0, 0, 0, seed};
    r.successes = run_trials(trials, seed, threads, [&](Rng& rng) {
        return uniform_low_weight(sample_uniform_rank(n_prime, R, field, rng), c_prime);
    });
    return finish(r);
}

std::pair<std::uint64_t, std::uint64_t> exact_uniform_low_weight(std::size_t n_prime, std::size_t R,
                                                                 double c_prime, const Field& field,
                                                                 std::uint64_t budget) {
    const std::size_t cells = n_prime * n_prime;
    std::uint64_t total_space = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (total_space > budget / field.order())
            throw BudgetExceeded("exact uniform low weight enumeration exceeds the budget");
        total_space *= field.order();
    }
    std::uint64_t hits = 0, total = 0;
    Matrix m(field, n_prime, n_prime);
    std::vector<Residue> buf(cells);
    const std::span<Residue> e = m.data();
    for (;;) {
        std::copy(e.begin(), e.end(), buf.begin());
        if (rank_in_place(buf, n_prime, n_prime, field) == R) {
            ++total;
            if (uniform_low_weight(m, c_prime)) ++hits;
        }
        std::size_t i = 0;
        while (i < cells && ++e[i] == field.order()) e[i++] = 0;
        if (i == cells) break;
    }
    return {hits, total};
}

namespace {

std::string shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace

void emit_csv(std::ostream& out, const std::vector<EstimateReport>& reports) {
    out << "experiment,D,n,n_prime,R,rho,c,trials,successes,estimate,wilson_lo,wilson_hi,seed\n";
    for (const auto& r : reports)
        out << r.experiment << ',' << r.D << ',' << r.n << ',' << r.n_prime << ',' << r.R << ',' << shortest(r.rho)
            << ',' << shortest(r.c) << ',' << r.trials << ',' << r.successes << ',' << shortest(r.estimate) << ','
            << shortest(r.wilson_lo) << ',' << shortest(r.wilson_hi) << ',' << r.seed << '\n';
}

}  // namespace hprod
