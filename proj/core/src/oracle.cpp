#include "hprod/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>

#include "hprod/complex.hpp"
#include "hprod/linalg.hpp"

namespace hprod::oracle {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

// Odometer step over residues; false after wrapping back to all zeros.
bool next_entries(std::vector<Residue>& e, Residue p) {
    for (auto& x : e) {
        if (++x < p) return true;
        x = 0;
    }
    return false;
}

// Incremental row echelon form. Rows are added one at a time and reduced
// against the stored pivot rows; the rank of the leading a x b block is the
// number of pivots below column b after a rows.
class EchelonBuilder {
public:
    EchelonBuilder(const Field& f, std::size_t cols) : f_(f), cols_(cols) { rows_.reserve(cols); }

    void clear() { rows_.clear(), pivots_.clear(); }

    // Returns the pivot column of the new row, or cols if it became zero.
    std::size_t add(const Residue* row) {
        Vector r(row, row + cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Residue x = r[pivots_[i]];
            if (x == 0) continue;
            const Residue m = f_.neg(x);
            for (std::size_t j = pivots_[i]; j < cols_; ++j) r[j] = f_.add(r[j], f_.mul(m, rows_[i][j]));
        }
        std::size_t p = 0;
        while (p < cols_ && r[p] == 0) ++p;
        if (p == cols_) return cols_;
        const Residue inv = f_.inv(r[p]);
        for (std::size_t j = p; j < cols_; ++j) r[j] = f_.mul(r[j], inv);
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return p;
    }

private:
    const Field& f_;
    std::size_t cols_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

// All (A, B) with A, B >= 1 and q^{AB} <= budget.
std::vector<std::pair<std::size_t, std::size_t>> brute_sizes(std::uint64_t q, std::uint64_t budget) {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (std::size_t A = 1; checked_power(q, A) <= budget; ++A)
        for (std::size_t B = 1; checked_power(q, A * B) <= budget; ++B) sizes.emplace_back(A, B);
    return sizes;
}

std::string key(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    std::ostringstream s;
    s << '(' << a << ',' << b << ',' << c << ',' << d << ')';
    return s.str();
}

}  // namespace

std::vector<std::uint64_t> brute_rank_counts(std::size_t A, std::size_t B, const Field& field) {
    std::vector<std::uint64_t> counts(std::min(A, B) + 1, 0);
    std::vector<Residue> entries(A * B, 0), buf(A * B);
    do {
        std::copy(entries.begin(), entries.end(), buf.begin());
        ++counts[rank_in_place(buf, A, B, field)];
    } while (next_entries(entries, field.order()));
    return counts;
}

CornerRankTable::CornerRankTable(std::size_t A, std::size_t B, const Field& field)
    : A_(A), B_(B), side_(std::min(A, B) + 1), table_((A + 1) * (B + 1) * side_ * side_, 0) {
    std::vector<Residue> entries(A * B, 0);
    EchelonBuilder ech(field, B);
    // profile[a][b] = rank of the leading a x b block
    std::vector<std::size_t> profile((A + 1) * (B + 1));
    do {
        ech.clear();
        std::fill(profile.begin(), profile.end(), 0);
        std::vector<std::size_t> per_col(B + 1, 0);  // pivots found in columns < b
        for (std::size_t a = 1; a <= A; ++a) {
            const std::size_t p = ech.add(entries.data() + (a - 1) * B);
            if (p < B)
                for (std::size_t b = p + 1; b <= B; ++b) ++per_col[b];
            for (std::size_t b = 0; b <= B; ++b) profile[a * (B + 1) + b] = per_col[b];
        }
        const std::size_t R = profile[A * (B + 1) + B];
        for (std::size_t a = 0; a <= A; ++a)
            for (std::size_t b = 0; b <= B; ++b)
                ++table_[((a * (B + 1) + b) * side_ + profile[a * (B + 1) + b]) * side_ + R];
    } while (next_entries(entries, field.order()));
}

std::uint64_t CornerRankTable::at(std::size_t a, std::size_t b, std::size_t r, std::size_t R) const {
    if (a > A_ || b > B_ || r >= side_ || R >= side_) return 0;
    return table_[((a * (B_ + 1) + b) * side_ + r) * side_ + R];
}

std::vector<std::uint64_t> brute_extension_counts(const Matrix& corner, std::size_t A, std::size_t B) {
    const Field& f = corner.field();
    const std::size_t a = corner.rows(), b = corner.cols();
    if (a > A || b > B) throw std::invalid_argument("brute_extension_counts: corner larger than the matrix");
    std::vector<std::uint64_t> counts(std::min(A, B) + 1, 0);
    std::vector<Residue> free(A * B - a * b, 0), buf(A * B);
    do {
        std::size_t k = 0;
        for (std::size_t i = 0; i < A; ++i)
            for (std::size_t j = 0; j < B; ++j) buf[i * B + j] = (i < a && j < b) ? corner(i, j) : free[k++];
        ++counts[rank_in_place(buf, A, B, f)];
    } while (next_entries(free, f.order()));
    return counts;
}

RankPairCounts brute_cycle_rank_counts(const ProductComplex& p, std::uint64_t budget) {
    const Field& f = p.complex().field();
    const std::size_t p1 = p.first().dim_plus(), p2 = p.second().dim_plus();
    const std::size_t m1 = p.first().dim_minus(), m2 = p.second().dim_minus();
    const auto basis = cycle_space_plus(p);
    if (checked_power(f.order(), basis.size()) > budget)
        throw BudgetExceeded("cycle enumeration needs " + std::to_string(f.order()) + "^" +
                             std::to_string(basis.size()) + " vectors");
    // C+ is psi+ (p1 x p2, row-major) followed by psi- (m1 x m2, row-major).
    RankPairCounts counts;
    std::vector<Residue> buf(std::max(p1 * p2, m1 * m2));
    for_each_in_span(f, p.complex().dim_plus(), basis, [&](const Vector& v) {
        std::copy_n(v.begin(), p1 * p2, buf.begin());
        const std::size_t rp = rank_in_place(std::span(buf).first(p1 * p2), p1, p2, f);
        std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(p1 * p2), m1 * m2, buf.begin());
        const std::size_t rm = rank_in_place(std::span(buf).first(m1 * m2), m1, m2, f);
        counts[{rp, rm}] += 1;
        return false;
    });
    return counts;
}

std::vector<std::string> verify_rank_partition(const VerifyScope& scope) {
    std::vector<std::string> bad;
    for (auto q : scope.primes) {
        const Field f(static_cast<Residue>(q));
        for (std::size_t A = 0; A <= scope.grid; ++A)
            for (std::size_t B = 0; B <= scope.grid; ++B) {
                BigCount sum = 0;
                for (std::size_t R = 0; R <= std::min(A, B); ++R) sum += count_rank_matrices(A, B, R, f);
                if (sum != boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(A * B)))
                    bad.push_back("rank partition D=" + std::to_string(q) + " A=" + std::to_string(A) +
                                  " B=" + std::to_string(B));
            }
    }
    return bad;
}

std::vector<std::string> verify_rank_counts(const VerifyScope& scope) {
    std::vector<std::string> bad;
    for (auto q : scope.primes) {
        const Field f(static_cast<Residue>(q));
        for (auto [A, B] : brute_sizes(q, scope.brute_budget)) {
                const auto brute = brute_rank_counts(A, B, f);
                for (std::size_t R = 0; R < brute.size(); ++R)
                    if (count_rank_matrices(A, B, R, f) != brute[R])
                        bad.push_back("E D=" + std::to_string(q) + " " + key(A, B, R, 0));
            }
    }
    return bad;
}

std::vector<std::string> verify_extension_counts(const VerifyScope& scope) {
    std::vector<std::string> bad;
    for (auto q : scope.primes) {
        const Field f(static_cast<Residue>(q));
        for (auto [A, B] : brute_sizes(q, scope.brute_budget)) {
                const CornerRankTable table(A, B, f);
                for (std::size_t a = 0; a <= A; ++a)
                    for (std::size_t b = 0; b <= B; ++b)
                        for (std::size_t r = 0; r <= std::min(a, b); ++r) {
                            const BigCount corners = count_rank_matrices(a, b, r, f);
                            for (std::size_t R = 0; R <= std::min(A, B); ++R) {
                                // Each rank-r corner has the same number of completions, so the
                                // joint count is corners * E_{a,b,r}^{A,B,R}.
                                const BigCount expect = corners * count_rank_extensions(a, b, r, A, B, R, f);
                                if (expect != table.at(a, b, r, R))
                                    bad.push_back("Eext D=" + std::to_string(q) + " a,b,r=" + key(a, b, r, 0) +
                                                  " A,B,R=" + key(A, B, R, 0));
                            }
                        }
            }
        // Fixed representatives: leading identity corners, completed exhaustively.
        for (auto [A, B] : brute_sizes(q, scope.brute_budget / 100))
                for (std::size_t a = 1; a <= A; ++a)
                    for (std::size_t b = 1; b <= B; ++b) {
                        if (checked_power(q, A * B - a * b) > scope.brute_budget / 100) continue;
                        for (std::size_t r = 0; r <= std::min(a, b); ++r) {
                            Matrix corner(f, a, b);
                            for (std::size_t i = 0; i < r; ++i) corner(i, i) = 1;
                            const auto brute = brute_extension_counts(corner, A, B);
                            for (std::size_t R = 0; R < brute.size(); ++R)
                                if (count_rank_extensions(a, b, r, A, B, R, f) != brute[R])
                                    bad.push_back("Eext fixed corner D=" + std::to_string(q) +
                                                  " a,b,r=" + key(a, b, r, 0) + " A,B,R=" + key(A, B, R, 0));
                        }
                    }
    }
    return bad;
}

std::vector<std::string> verify_z_counts(const Field& f) {
    std::vector<std::string> bad;
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 0}, {0, 1}, {2, 0}, {1, 1}};
    for (auto [H, L] : shapes) {
        const ComplexShape shape = ComplexShape::from_hl(H, L);
        const InvolutiveComplex standard = standard_boundary(shape, f);
        Rng rng(0x5eed + 31 * H + L);
        const InvolutiveComplex conj1 = random_boundary(shape, f, rng).complex;
        const InvolutiveComplex conj2 = random_boundary(shape, f, rng).complex;
        for (const auto& [c1, c2, tag] : {std::tuple{&standard, &standard, "standard"},
                                          std::tuple{&conj1, &conj2, "conjugated"}}) {
            const ProductComplex p = product(*c1, *c2);
            RankPairCounts brute;
            try {
                brute = brute_cycle_rank_counts(p);
            } catch (const BudgetExceeded&) {
                continue;
            }
            for (std::size_t rp = 0; rp <= shape.n; ++rp)
                for (std::size_t rm = 0; rm <= shape.n; ++rm) {
                    const auto it = brute.find({rp, rm});
                    const BigCount got = it == brute.end() ? BigCount(0) : it->second;
                    if (count_Z(H, L, rp, rm, f) != got)
                        bad.push_back(std::string("Z ") + tag + " D=" + std::to_string(f.order()) +
                                      " H,L,r+,r-=" + key(H, L, rp, rm));
                }
        }
    }
    return bad;
}

std::vector<std::string> verify_gamma_counts(const ProductComplex& p, std::size_t n_prime, std::size_t H,
                                             std::size_t L) {
    std::vector<std::string> bad;
    const Field& f = p.complex().field();
    const std::size_t n = H + 2 * L;
    const RankPairCounts brute = enumerate_reduced_cycles(p, n_prime);
    for (const auto& [ranks, count] : brute)
        if (ranks.first > n_prime || ranks.second > n_prime) bad.push_back("Gamma: rank out of range");
    for (std::size_t Rp = 0; Rp <= n_prime; ++Rp)
        for (std::size_t Rm = 0; Rm <= n_prime; ++Rm) {
            const auto it = brute.find({Rp, Rm});
            const BigCount got = it == brute.end() ? BigCount(0) : it->second;
            if (count_Gamma(n, n_prime, H, L, Rp, Rm, f) != got)
                bad.push_back("Gamma D=" + std::to_string(f.order()) + " n,n',R+,R-=" + key(n, n_prime, Rp, Rm));
        }
    return bad;
}

std::vector<std::string> verify_counting(const VerifyScope& scope) {
    std::vector<std::string> bad = verify_rank_partition(scope);
    auto append = [&](std::vector<std::string> more) { bad.insert(bad.end(), more.begin(), more.end()); };
    append(verify_rank_counts(scope));
    append(verify_extension_counts(scope));
    if (!scope.include_products) return bad;

    const Field f3(3);
    append(verify_z_counts(f3));
    // Good factor pairs by seeded rejection sampling.
    struct Case {
        std::size_t H, L, n_prime;
    };
    for (const Case cs : {Case{1, 1, 2}, Case{0, 2, 3}}) {
        const ComplexShape shape = ComplexShape::from_hl(cs.H, cs.L);
        Rng rng(0xC0FFEE + cs.H);
        auto good = [&] {
            for (;;) {
                auto c = random_boundary(shape, f3, rng).complex;
                if (is_good(c, cs.n_prime)) return c;
            }
        };
        const InvolutiveComplex c1 = good();
        const InvolutiveComplex c2 = good();
        append(verify_gamma_counts(product(c1, c2), cs.n_prime, cs.H, cs.L));
    }
    return bad;
}

}  // namespace hprod::oracle
