#include <gtest/gtest.h>

#include <cmath>

#include "hprod/counting.hpp"

using namespace hprod;

namespace {

BigCount pow_big(std::uint64_t q, std::size_t e) {
    BigCount r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
}

// Visits every rows x cols matrix; the visitor receives the matrix.
template <class Visit>
void for_each_matrix(std::size_t rows, std::size_t cols, const Field& f, Visit&& visit) {
    Matrix m(f, rows, cols);
    auto e = m.data();
    for (;;) {
        visit(m);
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == f.order()) e[i++] = 0;
        if (i == e.size()) return;
    }
}

std::map<std::size_t, BigCount> brute_rank_histogram(std::size_t A, std::size_t B, const Field& f) {
    std::map<std::size_t, BigCount> h;
    for_each_matrix(A, B, f, [&](const Matrix& m) { ++h[rank(m)]; });
    return h;
}

// Rank-R A x B matrices whose leading block equals `corner`.
BigCount brute_extensions(const Matrix& corner, std::size_t A, std::size_t B, std::size_t R) {
    BigCount count = 0;
    const Field& f = corner.field();
    for_each_matrix(A, B, f, [&](const Matrix& m) {
        if (m.block(0, 0, corner.rows(), corner.cols()) == corner && rank(m) == R) ++count;
    });
    return count;
}

// Cycles of C+ bucketed by the ranks of their (psi+, psi-) blocks.
RankPairCounts brute_cycle_ranks(const ProductComplex& p) {
    RankPairCounts h;
    const auto z = cycle_space_plus(p);
    for_each_in_span(p.complex().field(), p.complex().dim_plus(), z, [&](const Vector& v) {
        const auto [a, b] = p.split_plus(v);
        ++h[{rank(a), rank(b)}];
        return false;
    });
    return h;
}

InvolutiveComplex good_complex(std::size_t H, std::size_t L, std::size_t n_prime, const Field& f, Rng& rng) {
    for (;;) {
        auto c = random_boundary(ComplexShape::from_hl(H, L), f, rng).complex;
        if (is_good(c, n_prime)) return c;
    }
}

}  // namespace

TEST(Gaussian, Examples) {
    EXPECT_EQ(gaussian_binomial(4, 2, 2), BigCount(35));
    EXPECT_EQ(gaussian_binomial(3, 1, 3), BigCount(13));
    EXPECT_EQ(gaussian_binomial(5, 0, 7), BigCount(1));
    EXPECT_EQ(gaussian_binomial(5, 5, 7), BigCount(1));
    EXPECT_EQ(gaussian_binomial(2, 3, 3), BigCount(0));
}

TEST(RankCounts, Examples) {
    const Field f(3);
    EXPECT_EQ(count_rank_matrices(2, 2, 2, f), BigCount(48));
    EXPECT_EQ(count_rank_matrices(2, 2, 1, f), BigCount(32));
    EXPECT_EQ(count_rank_matrices(2, 2, 0, f), BigCount(1));
    EXPECT_EQ(count_rank_matrices(2, 2, 3, f), BigCount(0));
}

TEST(RankCounts, PartitionAllMatrices) {
    for (std::uint32_t d : {3u, 5u, 7u}) {
        const Field f(d);
        for (std::size_t A = 0; A <= 6; ++A)
            for (std::size_t B = 0; B <= 6; ++B) {
                BigCount total = 0;
                for (std::size_t R = 0; R <= std::min(A, B); ++R) total += count_rank_matrices(A, B, R, f);
                EXPECT_EQ(total, pow_big(d, A * B)) << A << "x" << B;
            }
    }
}

TEST(RankCounts, MatchBruteForce) {
    for (auto [d, A, B] : {std::tuple{3u, 2u, 3u}, {3u, 3u, 3u}, {5u, 2u, 3u}, {3u, 1u, 6u}}) {
        const Field f(d);
        for (const auto& [R, n] : brute_rank_histogram(A, B, f)) EXPECT_EQ(count_rank_matrices(A, B, R, f), n);
    }
}

TEST(Extensions, Examples) {
    const Field f(3);
    EXPECT_EQ(count_rank_extensions(1, 1, 1, 2, 2, 1, f), BigCount(9));
    EXPECT_EQ(count_rank_extensions(1, 1, 0, 2, 2, 1, f), BigCount(14));
    // One zero corner and two nonzero corners cover the 32 rank-1 matrices.
    EXPECT_EQ(count_rank_extensions(1, 1, 0, 2, 2, 1, f) + 2 * count_rank_extensions(1, 1, 1, 2, 2, 1, f),
              count_rank_matrices(2, 2, 1, f));
    EXPECT_EQ(count_rank_extensions(2, 2, 1, 2, 2, 1, f), BigCount(1));
    EXPECT_EQ(count_rank_extensions(0, 0, 0, 2, 2, 2, f), BigCount(48));
    EXPECT_THROW((void)count_rank_extensions(3, 1, 0, 2, 2, 1, f), std::invalid_argument);
    EXPECT_THROW((void)count_rank_extensions(1, 1, 2, 2, 2, 1, f), std::invalid_argument);
}

TEST(Extensions, MatchBruteForceForFixedCorners) {
    const Field f(3);
    const std::vector<std::tuple<Matrix, std::size_t, std::size_t>> cases{
        {Matrix(f, {{1, 0}}), 2, 3},         {Matrix(f, {{0, 0}}), 2, 3},
        {Matrix(f, {{1, 2}, {2, 1}}), 3, 3}, {Matrix(f, {{1, 0}, {0, 1}}), 3, 3},
        {Matrix(f, {{0}, {1}}), 3, 2},
    };
    for (const auto& [corner, A, B] : cases) {
        const std::size_t r = rank(corner);
        for (std::size_t R = 0; R <= std::min(A, B); ++R)
            EXPECT_EQ(count_rank_extensions(corner.rows(), corner.cols(), r, A, B, R, f),
                      brute_extensions(corner, A, B, R))
                << corner.rows() << "x" << corner.cols() << " r=" << r << " in " << A << "x" << B << " R=" << R;
    }
}

TEST(Extensions, SumOverCornersIsRankCount) {
    for (std::uint32_t d : {3u, 5u}) {
        const Field f(d);
        for (std::size_t A = 1; A <= 4; ++A)
            for (std::size_t B = 1; B <= 4; ++B)
                for (std::size_t a = 0; a <= A; ++a)
                    for (std::size_t b = 0; b <= B; ++b)
                        for (std::size_t R = 0; R <= std::min(A, B); ++R) {
                            BigCount total = 0;
                            for (std::size_t r = 0; r <= std::min(a, b); ++r)
                                total += count_rank_matrices(a, b, r, f) * count_rank_extensions(a, b, r, A, B, R, f);
                            EXPECT_EQ(total, count_rank_matrices(A, B, R, f));
                        }
    }
}

TEST(CycleCounts, Examples) {
    const Field f(3);
    EXPECT_EQ(count_Z(1, 1, 0, 0, f), BigCount(1));
    EXPECT_EQ(count_Z(0, 2, 0, 0, f), BigCount(1));
    // Without boundary every vector is a cycle.
    for (std::size_t rp = 0; rp <= 2; ++rp)
        for (std::size_t rm = 0; rm <= 2; ++rm)
            EXPECT_EQ(count_Z(2, 0, rp, rm, f), count_rank_matrices(2, 2, rp, f) * count_rank_matrices(2, 2, rm, f));
}

TEST(CycleCounts, MatchEnumerationOfProducts) {
    Rng rng(501);
    for (auto [d, H, L] : {std::tuple{3u, 0u, 1u}, {5u, 0u, 1u}, {3u, 1u, 1u}, {3u, 2u, 0u}}) {
        const Field f(d);
        const ComplexShape s = ComplexShape::from_hl(H, L);
        const auto p = product(random_boundary(s, f, rng).complex, random_boundary(s, f, rng).complex);
        const RankPairCounts brute = brute_cycle_ranks(p);
        BigCount total = 0;
        for (std::size_t rp = 0; rp <= s.n; ++rp)
            for (std::size_t rm = 0; rm <= s.n; ++rm) {
                const BigCount z = count_Z(H, L, rp, rm, f);
                const auto it = brute.find({rp, rm});
                EXPECT_EQ(z, it == brute.end() ? BigCount(0) : it->second) << "H=" << H << " L=" << L;
                total += z;
            }
        EXPECT_EQ(total, pow_big(d, cycle_space_plus(p).size()));
    }
}

TEST(ReducedCounts, TrivialBucket) {
    const Field f(3);
    EXPECT_EQ(count_Gamma(4, 3, 0, 2, 0, 0, f), BigCount(1));
    EXPECT_EQ(count_Gamma(3, 2, 1, 1, 0, 0, f), BigCount(1));
    EXPECT_THROW((void)count_Gamma(4, 1, 0, 2, 0, 0, f), std::invalid_argument);
    EXPECT_THROW((void)count_Gamma(5, 3, 0, 2, 0, 0, f), std::invalid_argument);
}

TEST(ReducedCounts, MatchEnumerationForGoodFactors) {
    Rng rng(502);
    const Field f(3);
    for (auto [H, L, np] : {std::tuple{0u, 2u, 3u}, {1u, 1u, 2u}, {1u, 1u, 3u}}) {
        const auto a = good_complex(H, L, np, f, rng), b = good_complex(H, L, np, f, rng);
        const RankPairCounts e = enumerate_reduced_cycles(product(a, b), np);
        const std::size_t n = H + 2 * L;
        for (std::size_t Rp = 0; Rp <= np; ++Rp)
            for (std::size_t Rm = 0; Rm <= np; ++Rm) {
                const auto it = e.find({Rp, Rm});
                EXPECT_EQ(count_Gamma(n, np, H, L, Rp, Rm, f), it == e.end() ? BigCount(0) : it->second)
                    << "H=" << H << " L=" << L << " n'=" << np << " R=" << Rp << "," << Rm;
            }
    }
}

TEST(ReducedCounts, IndependentOfTheGoodPair) {
    Rng rng(503);
    const Field f(3);
    const auto first = enumerate_reduced_cycles(product(good_complex(0, 2, 3, f, rng), good_complex(0, 2, 3, f, rng)), 3);
    for (int t = 0; t < 3; ++t)
        EXPECT_EQ(enumerate_reduced_cycles(product(good_complex(0, 2, 3, f, rng), good_complex(0, 2, 3, f, rng)), 3),
                  first);
}

TEST(ReducedCounts, LiteralAndSubspaceEnumerationAgree) {
    Rng rng(504);
    const Field f(3);
    for (int t = 0; t < 3; ++t) {
        const auto p = product(good_complex(1, 1, 2, f, rng), good_complex(1, 1, 2, f, rng));
        EXPECT_EQ(enumerate_reduced_cycles(p, 2), enumerate_reduced_cycles_subspace(p, 2));
    }
    const auto p = product(good_complex(0, 2, 3, f, rng), good_complex(0, 2, 3, f, rng));
    EXPECT_THROW((void)enumerate_reduced_cycles_subspace(p, 3, 1), BudgetExceeded);
}

TEST(Bounds, ExactRatiosAndExponents) {
    const Field f(3);
    EXPECT_EQ(e_bound_ratio(2, 2, 1, f), BigRational(32, 27));
    EXPECT_EQ(e_bound_ratio(3, 3, 0, f), BigRational(1));
    EXPECT_NEAR(predgood_exponent(0.1, 0.05, 0.01), -1.4, 1e-12);
    EXPECT_LT(predgood_exponent(0.1, 0.05, 0.01), 0.0);
    // r = 0, eps = 0, rho = 0: -2.
    EXPECT_DOUBLE_EQ(predgood_exponent(0, 0, 0), -2.0);

    const double c = 0.1;
    const double expected = -(1 - c) * std::log(1 - c) / std::log(3.0) - c * std::log(c) / std::log(3.0) +
                            c * std::log(2.0) / std::log(3.0) - 0.5;
    EXPECT_NEAR(random_code_exponent(c, 0.0, f), expected, 1e-12);
}

TEST(Bounds, ReportAgreesWithExactCounts) {
    const Field f(3);
    CountParams params;
    params.A = 3, params.B = 3, params.R = 2;
    params.a = 2, params.b = 2, params.r = 1;
    params.H = 1, params.L = 1, params.r_plus = 1, params.r_minus = 1;
    const BoundReport r = evaluate_bounds(params, 3, 0.0, 0.1, 0.05, 0.1, f);
    EXPECT_DOUBLE_EQ(r.e_exact, count_rank_matrices(3, 3, 2, f).convert_to<double>());
    EXPECT_DOUBLE_EQ(r.e_form, std::pow(3.0, 8));
    EXPECT_NEAR(r.e_ratio, r.e_exact / r.e_form, 1e-12);
    EXPECT_DOUBLE_EQ(r.e_ext_exact, count_rank_extensions(2, 2, 1, 3, 3, 2, f).convert_to<double>());
    EXPECT_DOUBLE_EQ(r.z_exact, count_Z(1, 1, 1, 1, f).convert_to<double>());
    EXPECT_TRUE(r.z_within_n_form);
    EXPECT_LT(r.predgood_exponent, 0.0);
}
