#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hprod/complex.hpp"
#include "hprod/errors.hpp"
#include "hprod/product.hpp"
#include "hprod/reduction.hpp"

namespace hprod {

/// CSS code of a complex with involution: physical qudits are the basis of
/// C+, the columns of the C- -> C+ block are Z-type generators and the rows
/// of the C+ -> C- block are X-type generators.
struct CssCode {
    Field field;
    Matrix z_gens;  ///< n_phys x m, generators are columns
    Matrix x_gens;  ///< m' x n_phys, generators are rows
    std::size_t n_phys = 0;
    std::size_t k = 0;
    std::size_t stab_weight = 0;
};

/// With Sector::minus the involution is negated, i.e. the code lives on C-.
/// Throws std::invalid_argument when the complex does not validate.
CssCode extract_css(const InvolutiveComplex& c, Sector physical = Sector::plus);

/// Builds a code from generator matrices, checking x_gens z_gens = 0.
CssCode make_css(Matrix z_gens, Matrix x_gens);

enum class DistanceMethod { exhaustive, bounded };

struct DistanceOptions {
    DistanceMethod method = DistanceMethod::exhaustive;
    std::size_t w_max = 0;                 ///< bounded mode weight cutoff
    std::uint64_t budget = 10'000'000;     ///< max vectors per side in exhaustive mode
};

/// Closed interval [lo, hi]; exact when lo == hi.
struct DistanceInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;
    [[nodiscard]] bool exact() const { return lo == hi; }
    friend bool operator==(const DistanceInterval&, const DistanceInterval&) = default;
};

struct DistanceReport {
    DistanceInterval d_z;
    DistanceInterval d_x;
    DistanceMethod method = DistanceMethod::exhaustive;
    std::size_t search_bound = 0;

    [[nodiscard]] DistanceInterval distance() const {
        return {std::min(d_z.lo, d_x.lo), std::min(d_z.hi, d_x.hi)};
    }
};

/// d_z = min weight over ker(x_gens) \ colspace(z_gens),
/// d_x = min weight over ker(z_gens^T) \ rowspace(x_gens).
DistanceReport min_distance(const CssCode& code, const DistanceOptions& opts = {});

/// Minimum weight of ker(check) \ colspace(gens) by exhaustive enumeration of
/// the kernel; throws BudgetExceeded when D^{dim ker} > budget.
std::size_t min_weight_outside_exhaustive(const Matrix& check, const Matrix& gens, std::uint64_t budget);

/// Smallest w <= w_max admitting a vector of ker(check) \ colspace(gens)
/// of weight w, enumerating supports in colex order; nullopt if none.
std::optional<std::size_t> min_weight_outside_bounded(const Matrix& check, const Matrix& gens, std::size_t w_max);

/// Smallest weight of a nonzero vector of ker(check) if it is at most w_max.
std::optional<std::size_t> min_kernel_weight_bounded(const Matrix& check, std::size_t w_max);

/// Cleaning: returns omega in the coboundary space of `side` such that
/// hbar + omega vanishes on S. nullopt when hbar is not a cocycle or no such
/// omega exists.
///
/// On the + side cocycles are ker(pm^T) and coboundaries im(mp^T); on the -
/// side the blocks are exchanged.
std::optional<Vector> clean_cocycle(const InvolutiveComplex& c, Sector side, const Vector& hbar,
                                    std::span<const std::size_t> S);

/// Decides h in im(d) exactly, for a cycle h of C+ whose reduced matrix on
/// `support` vanishes. Throws std::invalid_argument when h is not a cycle or
/// the reduced matrix is nonzero.
bool vanishing_reduced_implies_boundary(const ProductComplex& p, const Vector& h, const ReducedSupport& support);

/// Basis of the cycles of C+ whose reduced matrix on `support` vanishes.
std::vector<Vector> cycles_vanishing_on(const ProductComplex& p, const ReducedSupport& support);

/// True iff CSS(c, P) and CSS(c, -P) both have distance >= 2(n - n') + 1
/// (decided by bounded search up to weight 2(n - n')).
bool meets_cleaning_hypothesis(const InvolutiveComplex& c, std::size_t n_prime);

/// Header line `CSS D n_phys k stab_weight`, then z_gens and x_gens.
void write_css(std::ostream& out, const CssCode& code);
CssCode read_css(std::istream& in);

}  // namespace hprod
