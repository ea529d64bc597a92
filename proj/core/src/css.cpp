#include "hprod/css.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>

namespace hprod {

CssCode make_css(Matrix z_gens, Matrix x_gens) {
    if (x_gens.cols() != z_gens.rows()) throw std::invalid_argument("css: generator shapes disagree on n_phys");
    if (!(x_gens * z_gens).is_zero()) throw std::invalid_argument("css: x_gens z_gens != 0");
    CssCode code{z_gens.field(), std::move(z_gens), std::move(x_gens), 0, 0, 0};
    code.n_phys = code.z_gens.rows();
    code.k = kernel_basis(code.x_gens).size() - rank(code.z_gens);
    code.stab_weight = std::max(weight(code.z_gens), weight(code.x_gens));
    return code;
}

CssCode extract_css(const InvolutiveComplex& c, Sector physical) {
    if (auto v = validate(c); !v.empty()) throw std::invalid_argument("css: invalid complex: " + v.front());
    return physical == Sector::plus ? make_css(c.plus_minus(), c.minus_plus())
                                    : make_css(c.minus_plus(), c.plus_minus());
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

// Advances a size-w combination in colex order; false after the last one.
bool next_colex(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t w = comb.size();
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t limit = i + 1 < w ? comb[i + 1] : n;
        if (comb[i] + 1 < limit) {
            ++comb[i];
            for (std::size_t j = 0; j < i; ++j) comb[j] = j;
            return true;
        }
    }
    return false;
}

// Advances nonzero values in lexicographic order; false after the last one.
bool next_values(std::vector<Residue>& vals, Residue p) {
    for (std::size_t i = vals.size(); i-- > 0;) {
        if (vals[i] + 1 < p) {
            ++vals[i];
            return true;
        }
        vals[i] = 1;
    }
    return false;
}

// Calls visit(v) for every vector of the given weight in colex support
// order; stops early when visit returns true.
template <typename Visit>
bool for_each_of_weight(std::size_t n, std::size_t w, Residue p, Visit&& visit) {
    if (w > n) return false;
    std::vector<std::size_t> support(w);
    std::iota(support.begin(), support.end(), 0);
    Vector v(n, 0);
    do {
        std::vector<Residue> vals(w, 1);
        do {
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t i = 0; i < w; ++i) v[support[i]] = vals[i];
            if (visit(v)) return true;
        } while (next_values(vals, p));
    } while (next_colex(support, n));
    return false;
}

}  // namespace

std::size_t min_weight_outside_exhaustive(const Matrix& check, const Matrix& gens, std::uint64_t budget) {
    const Field& f = check.field();
    const std::size_t n = check.cols();
    const auto basis = kernel_basis(check);
    const std::uint64_t count = checked_power(f.order(), basis.size(), budget);
    if (count > budget)
        throw BudgetExceeded("exhaustive distance search needs " + std::to_string(f.order()) + "^" +
                             std::to_string(basis.size()) + " vectors, over budget " + std::to_string(budget));

    // v lies in colspace(gens) iff every annihilator row q has q.v = 0.
    const auto annihilator = kernel_basis(gens.transpose());
    const std::size_t m = annihilator.size();
    std::vector<Vector> step_syndrome(basis.size(), Vector(m, 0));
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t a = 0; a < m; ++a) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                acc = (acc + static_cast<std::uint64_t>(annihilator[a][j]) * basis[b][j]) % f.order();
            step_syndrome[b][a] = static_cast<Residue>(acc);
        }

    // Modular Gray code over coefficient tuples: each step adds one basis
    // vector, so v and its syndrome are updated incrementally.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    Vector v(n, 0), syndrome(m, 0);
    std::vector<Residue> counter(basis.size(), 0);
    const Residue p = f.order();
    for (;;) {
        std::size_t digit = 0;
        while (digit < counter.size() && counter[digit] == p - 1) counter[digit++] = 0;
        if (digit == counter.size()) break;
        ++counter[digit];
        // The Gray digit that changes is the counter digit that was incremented.
        const Vector& step = basis[digit];
        for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], step[j]);
        for (std::size_t a = 0; a < m; ++a) syndrome[a] = f.add(syndrome[a], step_syndrome[digit][a]);
        if (is_zero(syndrome)) continue;
        best = std::min(best, support_size(v));
    }
    return best;
}

std::optional<std::size_t> min_weight_outside_bounded(const Matrix& check, const Matrix& gens, std::size_t w_max) {
    const std::size_t n = check.cols();
    for (std::size_t w = 1; w <= std::min(w_max, n); ++w) {
        const bool found = for_each_of_weight(n, w, check.field().order(), [&](const Vector& v) {
            return is_zero(check * v) && !solve(gens, v).has_value();
        });
        if (found) return w;
    }
    return std::nullopt;
}

std::optional<std::size_t> min_kernel_weight_bounded(const Matrix& check, std::size_t w_max) {
    const std::size_t n = check.cols();
    for (std::size_t w = 1; w <= std::min(w_max, n); ++w) {
        // Scalar multiples share kernel membership, so the first nonzero
        // value can be fixed to 1.
        const bool found = for_each_of_weight(n, w, check.field().order(), [&](const Vector& v) {
            for (auto x : v)
                if (x != 0) {
                    if (x != 1) return false;
                    break;
                }
            return is_zero(check * v);
        });
        if (found) return w;
    }
    return std::nullopt;
}

DistanceReport min_distance(const CssCode& code, const DistanceOptions& opts) {
    if (code.k == 0) throw NoLogicalOperators();
    const Matrix z_t = code.z_gens.transpose();
    const Matrix x_t = code.x_gens.transpose();
    DistanceReport r;
    r.method = opts.method;
    if (opts.method == DistanceMethod::exhaustive) {
        const std::size_t dz = min_weight_outside_exhaustive(code.x_gens, code.z_gens, opts.budget);
        const std::size_t dx = min_weight_outside_exhaustive(z_t, x_t, opts.budget);
        r.d_z = {dz, dz};
        r.d_x = {dx, dx};
        r.search_bound = code.n_phys;
        return r;
    }
    r.search_bound = opts.w_max;
    auto bounded = [&](const Matrix& check, const Matrix& gens) -> DistanceInterval {
        if (auto w = min_weight_outside_bounded(check, gens, opts.w_max)) return {*w, *w};
        return {opts.w_max + 1, code.n_phys};
    };
    r.d_z = bounded(code.x_gens, code.z_gens);
    r.d_x = bounded(z_t, x_t);
    return r;
}

std::optional<Vector> clean_cocycle(const InvolutiveComplex& c, Sector side, const Vector& hbar,
                                    std::span<const std::size_t> S) {
    const Matrix pm = c.plus_minus();
    const Matrix mp = c.minus_plus();
    const Matrix cocycle_check = (side == Sector::plus ? pm : mp).transpose();
    const Matrix coboundary = (side == Sector::plus ? mp : pm).transpose();
    if (hbar.size() != coboundary.rows()) throw std::invalid_argument("clean_cocycle: hbar has wrong length");
    if (!is_zero(cocycle_check * hbar)) return std::nullopt;

    const Field& f = c.field();
    std::vector<std::size_t> all_cols(coboundary.cols());
    std::iota(all_cols.begin(), all_cols.end(), 0);
    const std::vector<std::size_t> rows(S.begin(), S.end());
    Vector rhs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = f.neg(hbar.at(rows[i]));
    auto x = solve(coboundary.select(rows, all_cols), rhs);
    if (!x) return std::nullopt;
    return coboundary * *x;
}

std::vector<Vector> cycles_vanishing_on(const ProductComplex& p, const ReducedSupport& s) {
    const Matrix mp = p.complex().minus_plus();
    const std::size_t p1 = p.first().dim_plus(), p2 = p.second().dim_plus();
    std::vector<Vector> constraints;
    auto pin = [&](std::size_t pos) {
        Vector e(mp.cols(), 0);
        e[pos] = 1;
        constraints.push_back(std::move(e));
    };
    for (auto i : s.rows_plus)
        for (auto j : s.cols_plus) pin(p.index_of(i, j));
    for (auto i : s.rows_minus)
        for (auto j : s.cols_minus) pin(p.index_of(p1 + i, p2 + j));
    return kernel_basis(vstack(mp, Matrix::from_rows(mp.field(), mp.cols(), constraints)));
}

bool vanishing_reduced_implies_boundary(const ProductComplex& p, const Vector& h, const ReducedSupport& support) {
    const InvolutiveComplex& c = p.complex();
    if (h.size() != c.dim_plus() || !is_zero(c.minus_plus() * h))
        throw std::invalid_argument("h is not a cycle of C+");
    auto [psi_plus, psi_minus] = p.split_plus(h);
    auto [red_plus, red_minus] = reduced_matrix(psi_plus, psi_minus, support);
    if (!red_plus.is_zero() || !red_minus.is_zero())
        throw std::invalid_argument("reduced matrix of h does not vanish");
    return solve(c.plus_minus(), h).has_value();
}

bool meets_cleaning_hypothesis(const InvolutiveComplex& c, std::size_t n_prime) {
    const std::size_t n = c.dim_plus();
    if (n_prime > n) throw std::invalid_argument("n' exceeds the sector dimension");
    const std::size_t cutoff = 2 * (n - n_prime);
    for (Sector s : {Sector::plus, Sector::minus}) {
        const CssCode code = extract_css(c, s);
        if (code.k == 0) continue;
        if (min_weight_outside_bounded(code.x_gens, code.z_gens, cutoff)) return false;
        if (min_weight_outside_bounded(code.z_gens.transpose(), code.x_gens.transpose(), cutoff)) return false;
    }
    return true;
}

void write_css(std::ostream& out, const CssCode& code) {
    out << "CSS " << code.field.order() << ' ' << code.n_phys << ' ' << code.k << ' ' << code.stab_weight << '\n';
    write_matrix(out, code.z_gens);
    write_matrix(out, code.x_gens);
}

CssCode read_css(std::istream& in) {
    std::string tag;
    long long d = 0, n = -1, k = -1, w = -1;
    if (!(in >> tag >> d >> n >> k >> w) || tag != "CSS")
        throw std::runtime_error("css: malformed header, expected `CSS D n_phys k stab_weight`");
    Matrix z = read_matrix(in);
    Matrix x = read_matrix(in);
    CssCode code = make_css(std::move(z), std::move(x));
    if (static_cast<long long>(code.field.order()) != d || static_cast<long long>(code.n_phys) != n ||
        static_cast<long long>(code.k) != k || static_cast<long long>(code.stab_weight) != w)
        throw std::runtime_error("css: header inconsistent with the stored generators");
    return code;
}

}  // namespace hprod
