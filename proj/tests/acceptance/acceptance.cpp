// Acceptance suite. Each criterion prints one PASS/FAIL line; pass criterion
// numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "hprod/complex.hpp"
#include "hprod/counting.hpp"
#include "hprod/css.hpp"
#include "hprod/experiments.hpp"
#include "hprod/oracle.hpp"
#include "hprod/product.hpp"
#include "hprod/reduction.hpp"

namespace fs = std::filesystem;
using namespace hprod;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double time_limit_s;
    std::function<Outcome()> run;
};

// Shape with sector dimension n and a seeded homological dimension of matching parity.
ComplexShape random_shape(std::size_t n, Rng& rng) {
    const std::size_t L = rng.below(n / 2 + 1);
    return {n, n - 2 * L, L};
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 3) {
    std::string s;
    for (std::size_t i = 0; i < std::min(limit, v.size()); ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > limit) s += "; ...";
    return s;
}

Outcome c1_identities() {
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (std::size_t n : {3, 4, 5})
        for (std::uint32_t d : {3, 5, 7}) {
            const Field f(d);
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                Rng rng = Rng::derive(1000 * n + d, seed);
                const auto a = random_boundary(random_shape(n, rng), f, rng).complex;
                const auto b = random_boundary(random_shape(n, rng), f, rng).complex;
                const auto p = product(a, b);
                for (const auto* c : {&a, &b, &p.complex()}) {
                    auto v = validate(*c);
                    bad.insert(bad.end(), v.begin(), v.end());
                    ++checked;
                }
            }
        }
    return {bad.empty(), std::to_string(checked) + " complexes validated, " + std::to_string(bad.size()) +
                             " violations" + (bad.empty() ? "" : ": " + join(bad))};
}

Outcome c2_product_code_parameters() {
    std::ostringstream s;
    bool pass = true;
    for (std::uint32_t d : {3, 5}) {
        const Field f(d);
        const ComplexShape shape = ComplexShape::from_hl(1, 1);
        Rng rng(17 + d);
        const auto p = product(random_boundary(shape, f, rng).complex, random_boundary(shape, f, rng).complex);
        const CssCode code = extract_css(p.complex());
        const bool ok = code.n_phys == 18 && code.k == 2 && code.stab_weight <= 6;
        pass = pass && ok;
        s << "D=" << d << ": [[" << code.n_phys << "," << code.k << "]] w=" << code.stab_weight << "  ";
    }
    return {pass, s.str()};
}

Outcome c3_kunneth() {
    std::size_t runs = 0;
    std::vector<std::string> bad;
    for (std::size_t H1 = 0; H1 <= 2; ++H1)
        for (std::size_t H2 = 0; H2 <= 2; ++H2)
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                Rng rng = Rng::derive(31 * H1 + H2, seed);
                const Field f(rng.below(2) == 0 ? 3 : 5);
                // n = H + 2L <= 5
                const ComplexShape s1 = ComplexShape::from_hl(H1, rng.below((5 - H1) / 2 + 1));
                const ComplexShape s2 = ComplexShape::from_hl(H2, rng.below((5 - H2) / 2 + 1));
                const auto p = product(random_boundary(s1, f, rng).complex, random_boundary(s2, f, rng).complex);
                const KunnethReport r = kunneth_check(p);
                ++runs;
                if (r.cycles_plus - r.boundaries_plus != 2 * H1 * H2 || !r.ok())
                    bad.push_back("H1=" + std::to_string(H1) + " H2=" + std::to_string(H2) + " seed " +
                                  std::to_string(seed) + ": " + std::to_string(r.cycles_plus - r.boundaries_plus) +
                                  (r.ok() ? "" : " " + join(r.violations)));
            }
    return {bad.empty(), std::to_string(runs) + " products, " + std::to_string(bad.size()) + " mismatches" +
                             (bad.empty() ? "" : ": " + join(bad))};
}

Outcome c4_reduction() {
    std::size_t done = 0, attempts = 0;
    std::vector<std::string> bad;
    Rng rng(4444);
    while (done < 100) {
        ++attempts;
        const std::size_t n = 3 + done % 3;
        const Field f(done % 2 == 0 ? 3 : 5);
        const std::size_t n_prime = (n + 1) / 2 + rng.below(n - (n + 1) / 2 + 1);
        const auto c = random_boundary(random_shape(n, rng), f, rng).complex;
        if (!is_good(c, n_prime)) continue;
        const ReducedComplex rc = reduce(c, n_prime);
        auto v = check_reduction(rc);
        const KerImReport k = reduced_kerim_check(rc);
        v.insert(v.end(), k.violations.begin(), k.violations.end());
        if (!k.good || !k.kernel_equal || !k.image_equal) v.emplace_back("kernel/image equality failed");
        if (k.dim_v_plus != 2 * n_prime - n || k.dim_v_minus != 2 * n_prime - n) v.emplace_back("dim V' != 2n'-n");
        if (k.ker_mp_reduced + (n - n_prime) != k.ker_mp) v.emplace_back("dim ker d'-+ != dim ker d-+ - (n-n')");
        for (auto& s : v) bad.push_back("n=" + std::to_string(n) + " n'=" + std::to_string(n_prime) + ": " + s);
        ++done;
    }
    return {bad.empty(), std::to_string(done) + " good complexes (" + std::to_string(attempts) + " sampled), " +
                             std::to_string(bad.size()) + " violations" + (bad.empty() ? "" : ": " + join(bad))};
}

Outcome c5_counting() {
    oracle::VerifyScope scope;
    scope.brute_budget = 10'000'000;
    scope.grid = 8;
    auto bad = oracle::verify_rank_partition(scope);
    const auto e = oracle::verify_rank_counts(scope);
    const auto x = oracle::verify_extension_counts(scope);
    bad.insert(bad.end(), e.begin(), e.end());
    bad.insert(bad.end(), x.begin(), x.end());
    return {bad.empty(), "D in {3,5,7,11}, brute force for D^{AB} <= 1e7, partition grid A,B <= 8: " +
                             std::to_string(bad.size()) + " mismatches" + (bad.empty() ? "" : ": " + join(bad))};
}

Outcome c6_gamma() {
    const Field f(3);
    const ComplexShape shape = ComplexShape::from_hl(1, 1);
    std::vector<std::string> bad;
    std::size_t pairs = 0, sampled = 0;
    Rng rng(6);
    auto good = [&] {
        for (;;) {
            ++sampled;
            auto c = random_boundary(shape, f, rng).complex;
            if (is_good(c, 2)) return c;
        }
    };
    std::map<std::pair<std::size_t, std::size_t>, BigCount> first;
    while (pairs < 5) {
        const auto p = product(good(), good());
        auto v = oracle::verify_gamma_counts(p, 2, 1, 1);
        bad.insert(bad.end(), v.begin(), v.end());
        ++pairs;
    }
    return {bad.empty(), std::to_string(pairs) + " good factor pairs (" + std::to_string(sampled) +
                             " factors sampled), " + std::to_string(bad.size()) + " mismatches" +
                             (bad.empty() ? "" : ": " + join(bad))};
}

Outcome c7_z_sum() {
    std::ostringstream s;
    bool pass = true;
    for (std::uint32_t d : {3, 5}) {
        const Field f(d);
        const auto std_c = standard_boundary(ComplexShape::from_hl(1, 1), f);
        const std::size_t dim = cycle_space_plus(product(std_c, std_c)).size();
        BigCount sum = 0;
        for (std::size_t rp = 0; rp <= 3; ++rp)
            for (std::size_t rm = 0; rm <= 3; ++rm) sum += count_Z(1, 1, rp, rm, f);
        const BigCount expect = boost::multiprecision::pow(BigCount(d), static_cast<unsigned>(dim));
        pass = pass && sum == expect;
        s << "D=" << d << ": sum Z = " << sum << ", D^" << dim << " = " << expect << "  ";
    }
    return {pass, s.str()};
}

Outcome c8_distance() {
    std::ostringstream s;
    bool pass = true;
    const Field f(3);
    const ComplexShape shape = ComplexShape::from_hl(1, 1);
    std::vector<CssCode> codes;
    const auto std_c = standard_boundary(shape, f);
    codes.push_back(extract_css(product(std_c, std_c).complex()));
    for (std::uint64_t seed : {101, 202, 303}) {
        Rng rng(seed);
        codes.push_back(extract_css(
            product(random_boundary(shape, f, rng).complex, random_boundary(shape, f, rng).complex).complex()));
    }
    for (const auto& code : codes) {
        const bool orth = (code.x_gens * code.z_gens).is_zero();
        const DistanceReport ex = min_distance(code, {DistanceMethod::exhaustive, 0, 10'000'000});
        const DistanceReport bd = min_distance(code, {DistanceMethod::bounded, code.n_phys, 0});
        const bool agree = ex.d_z == bd.d_z && ex.d_x == bd.d_x;
        pass = pass && orth && agree;
        s << "d=" << ex.distance().lo << (agree ? "" : " (bounded disagrees)") << (orth ? "" : " (x z != 0)")
          << "  ";
    }
    return {pass, s.str()};
}

Outcome c9_vanishing_reduced() {
    // Factors whose codes on both sectors have distance >= 3, so n' = n - 1.
    struct Setting {
        std::uint32_t d;
        std::size_t H, L;
    };
    std::vector<InvolutiveComplex> pool;
    std::size_t sampled = 0;
    Rng rng(9);
    for (const Setting st : {Setting{5, 1, 3}, Setting{7, 1, 3}, Setting{7, 1, 2}}) {
        const Field f(st.d);
        const ComplexShape shape = ComplexShape::from_hl(st.H, st.L);
        std::size_t found = 0;
        for (std::size_t tries = 0; tries < 4000 && found < 4; ++tries) {
            ++sampled;
            auto c = random_boundary(shape, f, rng).complex;
            if (meets_cleaning_hypothesis(c, shape.n - 1)) {
                pool.push_back(std::move(c));
                ++found;
            }
        }
    }
    if (pool.size() < 2) return {false, "could not sample factors meeting the distance hypothesis"};

    std::size_t instances = 0, in_image = 0, nontrivial = 0;
    std::vector<std::string> bad;
    while (instances < 200) {
        const auto& c1 = pool[rng.below(pool.size())];
        std::vector<const InvolutiveComplex*> partners;
        for (const auto& c : pool)
            if (c.field() == c1.field() && c.dim_plus() == c1.dim_plus()) partners.push_back(&c);
        const auto& c2 = *partners[rng.below(partners.size())];
        const ProductComplex p = product(c1, c2);
        const std::size_t n = c1.dim_plus(), n_prime = n - 1;

        ReducedSupport support = ReducedSupport::leading(n_prime);
        if (instances % 2 == 1) {
            // Any n'-subsets: the cleaning set is then the complement.
            auto subset = [&] {
                std::vector<std::size_t> all(n);
                std::iota(all.begin(), all.end(), 0);
                all.erase(all.begin() + static_cast<std::ptrdiff_t>(rng.below(n)));
                return all;
            };
            support = {subset(), subset(), subset(), subset()};
        }
        const auto basis = cycles_vanishing_on(p, support);
        Vector h(p.complex().dim_plus(), 0);
        const Field& f = c1.field();
        for (const auto& b : basis) {
            const Residue coef = static_cast<Residue>(rng.below(f.order()));
            for (std::size_t i = 0; i < h.size(); ++i) h[i] = f.add(h[i], f.mul(coef, b[i]));
        }
        if (!is_zero(h)) ++nontrivial;
        const bool boundary = vanishing_reduced_implies_boundary(p, h, support);
        if (boundary) ++in_image;
        else bad.push_back("instance " + std::to_string(instances) + " not in im d");
        ++instances;
    }
    return {bad.empty() && in_image == 200,
            std::to_string(in_image) + "/200 in im d (" + std::to_string(nontrivial) + " nonzero h, " +
                std::to_string(pool.size()) + " factors from " + std::to_string(sampled) + " samples)"};
}

Outcome c10a_uniform_low_weight() {
    const Field f(3);
    // n' = 2, R = 1, threshold c' n' = 1.
    const auto [hits, total] = exact_uniform_low_weight(2, 1, 0.5, f);
    const double exact = static_cast<double>(hits) / static_cast<double>(total);
    std::size_t covered = 0;
    for (std::uint64_t run = 0; run < 100; ++run) {
        const EstimateReport r = mc_uniform_low_weight(2, 1, 0.5, f, 1000, 10'000 + run);
        if (r.wilson_lo <= exact && exact <= r.wilson_hi) ++covered;
    }
    return {covered >= 93, "exact " + std::to_string(hits) + "/" + std::to_string(total) + ", covered by the 95% " +
                               "interval in " + std::to_string(covered) + "/100 runs of 1000 trials"};
}

Outcome c10b_kernel_decay() {
    TrialConfig cfg;
    cfg.field = Field(3);
    cfg.rho = 0.1;
    cfg.c = 0.35;
    cfg.trials = 10'000;
    cfg.master_seed = 1010;
    const auto sweep = mc_low_weight_kernel_sweep(cfg, {3, 5, 7, 9});
    bool decay = true;
    std::ostringstream s;
    s << "c=0.35 rho=0.1 D=3:";
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        s << " n=" << sweep[i].n << " " << sweep[i].estimate << " [" << sweep[i].wilson_lo << ","
          << sweep[i].wilson_hi << "]";
        if (i > 0 && !(sweep[i].wilson_hi < sweep[i - 1].wilson_lo)) decay = false;
    }
    s << (decay ? "" : " (not decreasing)");
    return {decay, s.str()};
}

// Runs every pipeline in `dir`, returns output file contents by name.
std::map<std::string, std::string> read_outputs(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string name = e.path().filename().string();
        if (name.find(".manifest.json") != std::string::npos) continue;
        std::ifstream in(e.path(), std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        out[name] = s.str();
    }
    return out;
}

Outcome c11_determinism() {
    const fs::path root = fs::temp_directory_path() / ("hprod_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root / "run");
    const fs::path old = fs::current_path();
    fs::current_path(root / "run");
    const std::vector<std::vector<std::string>> pipeline{
        {"sample-complex", "--n", "3", "--rho", "0.3", "--dim", "3", "--seed", "7", "--out", "a.cx"},
        {"sample-complex", "--n", "3", "--rho", "0.3", "--dim", "3", "--seed", "8", "--out", "b.cx"},
        {"product", "--a", "a.cx", "--b", "b.cx", "--out", "p.cx"},
        {"css-extract", "--in", "p.cx", "--out", "p.css"},
        {"distance", "--in", "p.css", "--json", "--out", "d.json"},
        {"distance", "--in", "p.css", "--mode", "bounded", "--wmax", "3", "--out", "db.json"},
        {"reduce", "--in", "a.cx", "--nprime", "2", "--out", "a_red.cx"},
        {"reduce", "--in", "a.cx", "--nprime", "2", "--check", "--out", "a_check.json"},
        {"count", "--what", "Gamma", "--params", "n=3,n_prime=2,H=1,L=1,R_plus=1,R_minus=1", "--json", "--out",
         "gamma.json"},
        {"count", "--verify", "--budget", "20000", "--out", "verify.json"},
        {"mc", "--experiment", "kernel", "--n", "3", "5", "--c", "0.4", "--trials", "300", "--seed", "3",
         "--threads", "2", "--csv", "kernel.csv"},
        {"mc", "--experiment", "goodness", "--n", "4", "--nprime", "3", "--trials", "300", "--seed", "3", "--csv",
         "good.csv"},
        {"mc", "--experiment", "ulw", "--nprime", "2", "--R", "1", "--c", "0.5", "--trials", "300", "--seed", "3",
         "--csv", "ulw.csv"},
    };
    std::ostringstream sink;
    std::vector<std::string> bad;
    for (const auto& args : pipeline)
        if (int rc = cli::dispatch(args, sink, sink); rc != 0) bad.push_back(args.front() + " exit " + std::to_string(rc));
    const auto first = read_outputs(".");

    // Replay every manifest from a fresh copy holding only the manifests and
    // the pipeline inputs they name.
    fs::create_directories(root / "replay");
    std::size_t replays = 0;
    for (const auto& e : fs::directory_iterator(".")) {
        const std::string name = e.path().filename().string();
        if (name.size() > 14 && name.ends_with(".manifest.json"))
            fs::copy_file(e.path(), root / "replay" / name, fs::copy_options::overwrite_existing);
    }
    fs::current_path(root / "replay");
    // Manifests are replayed in pipeline order so that inputs exist.
    for (const auto& args : pipeline) {
        const std::string out = args.back();
        if (int rc = cli::dispatch({"replay", "--manifest", out + ".manifest.json"}, sink, sink); rc != 0)
            bad.push_back("replay of " + out + " exit " + std::to_string(rc));
        ++replays;
    }
    const auto second = read_outputs(".");
    fs::current_path(old);
    fs::remove_all(root);

    if (first.size() != pipeline.size()) bad.push_back("missing outputs");
    for (const auto& [name, body] : first) {
        const auto it = second.find(name);
        if (it == second.end() || it->second != body) bad.push_back(name + " differs after replay");
    }
    return {bad.empty(), std::to_string(first.size()) + " outputs, " + std::to_string(replays) + " replays, " +
                             std::to_string(bad.size()) + " differences" + (bad.empty() ? "" : ": " + join(bad))};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {"1", "algebraic identities of factors and products", 10, c1_identities},
        {"2", "product code parameters [[2n^2, 2H^2]], weight <= 2n", 1, c2_product_code_parameters},
        {"3", "Kunneth: dim ker - dim im on C+ = 2 H1 H2", 30, c3_kunneth},
        {"4", "reduced complex identities and dimensions", 30, c4_reduction},
        {"5", "rank and extension counts vs brute force", 120, c5_counting},
        {"6", "Gamma closed form vs reduced cycle enumeration", 300, c6_gamma},
        {"7", "sum of Z over ranks = D^dim(cycles)", 60, c7_z_sum},
        {"8", "exhaustive and bounded distances agree", 600, c8_distance},
        {"9", "vanishing reduced matrix implies boundary", 300, c9_vanishing_reduced},
        {"10a", "uniform low weight estimates cover the exact probability", 300, c10a_uniform_low_weight},
        {"10b", "low-weight kernel probability decays over n = 3, 5, 7, 9", 300, c10b_kernel_decay},
        {"11", "CLI replay determinism", 600, c11_determinism},
    };
    std::vector<std::string> wanted(argv + 1, argv + argc);
    int failures = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.time_limit_s;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
                  << std::setprecision(2) << secs << " s / " << c.time_limit_s << " s"
                  << (in_time ? "" : ", over time") << ") -- " << std::defaultfloat << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
