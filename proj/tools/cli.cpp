#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hprod/complex.hpp"
#include "hprod/counting.hpp"
#include "hprod/css.hpp"
#include "hprod/experiments.hpp"
#include "hprod/oracle.hpp"
#include "hprod/product.hpp"
#include "hprod/reduction.hpp"

#ifndef HPROD_VERSION
#define HPROD_VERSION "0.0.0"
#endif

namespace hprod::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("HPROD_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("HPROD_BUDGET is not a number: ") + env);
        }
    }
    return 10'000'000;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return in;
}

// Writes `body` to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, const std::string& body, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << body)) throw std::runtime_error("cannot write " + path);
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

struct Context {
    std::vector<std::string> args;
    std::ostream& out;
    std::ostream& err;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

// Records how an output was produced, next to the output file.
void write_manifest(const Context& ctx, const CLI::App& sub, const std::vector<std::string>& outputs,
                    std::optional<std::uint64_t> seed) {
    std::vector<std::string> files;
    for (const auto& o : outputs)
        if (!o.empty() && o != "-") files.push_back(o);
    if (files.empty()) return;
    json params = json::object();
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0) continue;
        const auto& res = opt->results();
        std::string name = opt->get_name();
        while (!name.empty() && name.front() == '-') name.erase(name.begin());
        params[name] = res.size() == 1 ? json(res.front()) : json(res);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.start).count();
    json m;
    m["subcommand"] = sub.get_name();
    m["argv"] = ctx.args;
    m["params"] = params;
    m["master_seed"] = seed ? json(*seed) : json(nullptr);
    m["outputs"] = files;
    m["version"] = HPROD_VERSION;
    m["timestamp"] = utc_timestamp();
    m["elapsed_seconds"] = elapsed;
    emit(files.front() + ".manifest.json", m.dump(2) + "\n", ctx.out);
}

Field parse_field(std::uint32_t d) {
    try {
        return Field(d);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::map<std::string, std::size_t> parse_params(const std::string& text) {
    std::map<std::string, std::size_t> p;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("bad --params entry `" + item + "`, expected key=value");
        try {
            std::size_t used = 0;
            const auto value = std::stoull(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
            p[item.substr(0, eq)] = value;
        } catch (const std::logic_error&) {
            throw UsageError("bad --params value in `" + item + "`");
        }
    }
    return p;
}

std::size_t need(const std::map<std::string, std::size_t>& p, const std::string& key) {
    const auto it = p.find(key);
    if (it == p.end()) throw UsageError("--params is missing `" + key + "`");
    return it->second;
}

// Accepts a CSS file or a complex file (extracted on its + sector).
CssCode read_code(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string first;
    in >> first;
    in.seekg(0);
    if (first == "CSS") return read_css(in);
    return extract_css(read_complex(in));
}

std::string describe(DistanceMethod m) { return m == DistanceMethod::exhaustive ? "exhaustive" : "bounded"; }

json interval(const DistanceInterval& d) { return json::array({d.lo, d.hi}); }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{args, out, err};
    CLI::App app{"Homological product codes over GF(D): sampling, products, CSS codes, counts, Monte Carlo"};
    app.name("hprod");
    app.require_subcommand(1);
    app.set_version_flag("--version", HPROD_VERSION);

    // sample-complex
    auto* sample = app.add_subcommand("sample-complex", "Random complex with involution (conjugated standard form)");
    std::size_t s_n = 0, s_H = 0, s_L = 0;
    double s_rho = 0.0;
    std::uint32_t s_dim = 3;
    std::uint64_t s_seed = 0;
    std::string s_out;
    bool s_standard = false;
    auto* opt_n = sample->add_option("--n", s_n, "sector dimension n (with --rho)");
    auto* opt_rho = sample->add_option("--rho", s_rho, "H = floor(rho n), adjusted for parity")->needs(opt_n);
    auto* opt_H = sample->add_option("--H", s_H, "homological dimension per sector")->excludes(opt_rho);
    sample->add_option("--L", s_L, "rank of each boundary block")->needs(opt_H);
    sample->add_option("--dim", s_dim, "field order D (odd prime)");
    sample->add_option("--seed", s_seed, "master seed");
    sample->add_flag("--standard", s_standard, "emit the standard complex without conjugation");
    sample->add_option("--out", s_out, "output file (default stdout)");

    // product
    auto* prod = app.add_subcommand("product", "Tensor product of two complexes");
    std::string p_a, p_b, p_out;
    prod->add_option("--a,--in1", p_a, "first factor")->required();
    prod->add_option("--b,--in2", p_b, "second factor")->required();
    prod->add_option("--out", p_out, "output file (default stdout)");

    // css-extract
    auto* css = app.add_subcommand("css-extract", "CSS code of a complex");
    std::string c_in, c_out, c_sector = "plus";
    css->add_option("--in", c_in, "complex file")->required();
    css->add_option("--sector", c_sector, "physical sector")->check(CLI::IsMember({"plus", "minus"}));
    css->add_option("--out", c_out, "output file (default stdout)");

    // distance
    auto* dist = app.add_subcommand("distance", "Minimum distance of a CSS code (or of a complex's code)");
    std::string d_in, d_out, d_method = "exhaustive";
    std::size_t d_wmax = 0;
    std::uint64_t d_budget = 0;
    bool d_timing = false;
    dist->add_option("--in", d_in, "CSS or complex file")->required();
    dist->add_option("--method,--mode", d_method, "search method")->check(CLI::IsMember({"exhaustive", "bounded"}));
    dist->add_option("--w-max,--wmax", d_wmax, "bounded search weight cutoff");
    dist->add_option("--budget", d_budget, "max vectors per side for exhaustive search (env HPROD_BUDGET)");
    dist->add_flag("--timing", d_timing, "include elapsed time in the report");
    dist->add_flag("--json", "JSON output (the default)");
    dist->add_option("--out", d_out, "output file (default stdout)");

    // reduce
    auto* red = app.add_subcommand("reduce", "Reduced complex on the first n' coordinates");
    std::string r_in, r_out;
    std::size_t r_nprime = 0;
    bool r_check = false;
    red->add_option("--in", r_in, "complex file")->required();
    red->add_option("--nprime", r_nprime, "n'")->required();
    red->add_flag("--check", r_check, "verify the reduction identities, report JSON");
    red->add_option("--out", r_out, "output file (default stdout)");

    // count
    auto* cnt = app.add_subcommand("count", "Exact rank-enumeration counts");
    std::string k_what, k_params, k_out;
    std::uint32_t k_dim = 3;
    bool k_json = false, k_verify = false;
    std::uint64_t k_budget = 0;
    auto* opt_what = cnt->add_option("--what", k_what, "quantity")->check(CLI::IsMember({"E", "Eext", "Z", "Gamma"}));
    cnt->add_option("--params", k_params, "comma separated key=value, e.g. A=2,B=2,R=1");
    cnt->add_option("--dim", k_dim, "field order D");
    cnt->add_flag("--json", k_json, "JSON output");
    auto* opt_verify = cnt->add_flag("--verify", k_verify, "compare every closed form with its brute-force oracle");
    cnt->add_option("--budget", k_budget, "brute-force budget for --verify (env HPROD_BUDGET)");
    cnt->add_option("--out", k_out, "output file (default stdout)");
    opt_what->excludes(opt_verify);

    // mc
    auto* mc = app.add_subcommand("mc", "Seeded Monte Carlo estimates");
    std::string m_exp, m_csv;
    std::vector<std::size_t> m_n{3};
    std::uint32_t m_dim = 3;
    double m_rho = 0.0, m_c = 0.0;
    std::size_t m_nprime = 0, m_R = 1;
    std::uint64_t m_trials = 1000, m_seed = 0;
    unsigned m_threads = 1;
    mc->add_option("--experiment", m_exp, "experiment")->required()->check(CLI::IsMember({"kernel", "goodness", "ulw"}));
    mc->add_option("--n", m_n, "sector dimension(s); several values sweep")->expected(1, -1);
    mc->add_option("--dim", m_dim, "field order D");
    mc->add_option("--rho", m_rho, "H / n");
    mc->add_option("--c", m_c, "weight density (c' for ulw)");
    mc->add_option("--nprime", m_nprime, "n' (goodness, ulw)");
    mc->add_option("--R", m_R, "rank (ulw)");
    mc->add_option("--trials", m_trials, "trials per estimate")->check(CLI::PositiveNumber);
    mc->add_option("--seed", m_seed, "master seed");
    mc->add_option("--threads", m_threads, "worker threads")->check(CLI::PositiveNumber);
    mc->add_option("--csv", m_csv, "CSV output file (default stdout)");

    // replay
    auto* rep = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    std::string rp_manifest;
    rep->add_option("--manifest", rp_manifest, "manifest file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << HPROD_VERSION << '\n';
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return usage;
    }

    try {
        if (*sample) {
            const Field f = parse_field(s_dim);
            ComplexShape shape;
            if (opt_H->count() > 0) {
                shape = ComplexShape::from_hl(s_H, s_L);
                if (opt_n->count() > 0 && s_n != shape.n) throw UsageError("--n disagrees with H + 2L");
            } else if (opt_n->count() > 0) {
                shape = ComplexShape::from_rho(s_n, s_rho);
            } else {
                throw UsageError("give --n [--rho] or --H --L");
            }
            Rng rng(s_seed);
            const InvolutiveComplex c =
                s_standard ? standard_boundary(shape, f) : random_boundary(shape, f, rng).complex;
            std::ostringstream body;
            write_complex(body, c);
            emit(s_out, body.str(), out);
            write_manifest(ctx, *sample, {s_out}, s_seed);
            return ok;
        }
        if (*prod) {
            std::ifstream a = open_in(p_a), b = open_in(p_b);
            const ProductComplex p = product(read_complex(a), read_complex(b));
            std::ostringstream body;
            write_complex(body, p.complex());
            emit(p_out, body.str(), out);
            write_manifest(ctx, *prod, {p_out}, std::nullopt);
            return ok;
        }
        if (*css) {
            std::ifstream in = open_in(c_in);
            const CssCode code = extract_css(read_complex(in), c_sector == "plus" ? Sector::plus : Sector::minus);
            std::ostringstream body;
            write_css(body, code);
            emit(c_out, body.str(), out);
            write_manifest(ctx, *css, {c_out}, std::nullopt);
            return ok;
        }
        if (*dist) {
            const CssCode code = read_code(d_in);
            DistanceOptions opts;
            opts.method = d_method == "bounded" ? DistanceMethod::bounded : DistanceMethod::exhaustive;
            opts.w_max = d_wmax;
            opts.budget = dist->get_option("--budget")->count() > 0 ? d_budget : default_budget();
            if (opts.method == DistanceMethod::bounded && d_wmax == 0) throw UsageError("bounded search needs --w-max");
            const auto t0 = std::chrono::steady_clock::now();
            DistanceReport rep_d;
            try {
                rep_d = min_distance(code, opts);
            } catch (const NoLogicalOperators& e) {
                err << "error: " << e.what() << '\n';
                return failure;
            }
            json j;
            j["n_phys"] = code.n_phys;
            j["k"] = code.k;
            j["stab_weight"] = code.stab_weight;
            j["D"] = code.field.order();
            j["method"] = describe(rep_d.method);
            j["search_bound"] = rep_d.search_bound;
            j["d_z"] = interval(rep_d.d_z);
            j["d_x"] = interval(rep_d.d_x);
            j["d"] = interval(rep_d.distance());
            j["exact"] = rep_d.distance().exact();
            if (d_timing)
                j["elapsed"] =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            emit(d_out, j.dump(2) + "\n", out);
            write_manifest(ctx, *dist, {d_out}, std::nullopt);
            return ok;
        }
        if (*red) {
            std::ifstream in = open_in(r_in);
            const InvolutiveComplex c = read_complex(in);
            const ReducedComplex rc = reduce(c, r_nprime);
            if (!r_check) {
                std::ostringstream body;
                write_complex(body, rc.induced);
                emit(r_out, body.str(), out);
                write_manifest(ctx, *red, {r_out}, std::nullopt);
                return ok;
            }
            std::vector<std::string> violations = check_reduction(rc);
            const KerImReport kr = reduced_kerim_check(rc);
            violations.insert(violations.end(), kr.violations.begin(), kr.violations.end());
            json j;
            j["n"] = c.dim_plus();
            j["n_prime"] = r_nprime;
            j["good"] = kr.good;
            j["dim_v_plus"] = kr.dim_v_plus;
            j["dim_v_minus"] = kr.dim_v_minus;
            j["kernel_equal"] = kr.kernel_equal;
            j["image_equal"] = kr.image_equal;
            j["violations"] = violations;
            j["ok"] = violations.empty();
            emit(r_out, j.dump(2) + "\n", out);
            write_manifest(ctx, *red, {r_out}, std::nullopt);
            return violations.empty() ? ok : failure;
        }
        if (*cnt) {
            if (k_verify) {
                oracle::VerifyScope scope;
                scope.brute_budget = cnt->get_option("--budget")->count() > 0 ? k_budget : 200'000;
                const auto bad = oracle::verify_counting(scope);
                json j;
                j["budget"] = scope.brute_budget;
                j["mismatches"] = bad;
                j["ok"] = bad.empty();
                emit(k_out, j.dump(2) + "\n", out);
                write_manifest(ctx, *cnt, {k_out}, std::nullopt);
                for (const auto& b : bad) err << "mismatch: " << b << '\n';
                return bad.empty() ? ok : failure;
            }
            if (k_what.empty()) throw UsageError("count needs --what or --verify");
            const Field f = parse_field(k_dim);
            const auto p = parse_params(k_params);
            BigCount value;
            try {
                if (k_what == "E") {
                    value = count_rank_matrices(need(p, "A"), need(p, "B"), need(p, "R"), f);
                } else if (k_what == "Eext") {
                    value = count_rank_extensions(need(p, "a"), need(p, "b"), need(p, "r"), need(p, "A"),
                                                  need(p, "B"), need(p, "R"), f);
                } else if (k_what == "Z") {
                    value = count_Z(need(p, "H"), need(p, "L"), need(p, "r_plus"), need(p, "r_minus"), f);
                } else {
                    value = count_Gamma(need(p, "n"), need(p, "n_prime"), need(p, "H"), need(p, "L"),
                                        need(p, "R_plus"), need(p, "R_minus"), f);
                }
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::string body;
            if (k_json) {
                json j;
                j["what"] = k_what;
                j["D"] = k_dim;
                j["params"] = p;
                j["value"] = value.str();
                body = j.dump(2) + "\n";
            } else {
                body = value.str() + "\n";
            }
            emit(k_out, body, out);
            write_manifest(ctx, *cnt, {k_out}, std::nullopt);
            return ok;
        }
        if (*mc) {
            const Field f = parse_field(m_dim);
            std::vector<EstimateReport> reports;
            TrialConfig cfg;
            cfg.field = f;
            cfg.rho = m_rho;
            cfg.c = m_c;
            cfg.trials = m_trials;
            cfg.master_seed = m_seed;
            cfg.threads = m_threads;
            if (m_exp == "kernel") {
                reports = mc_low_weight_kernel_sweep(cfg, m_n);
            } else if (m_exp == "goodness") {
                for (auto n : m_n) {
                    cfg.n = n;
                    reports.push_back(mc_goodness(cfg, m_nprime));
                }
            } else {
                reports.push_back(mc_uniform_low_weight(m_nprime, m_R, m_c, f, m_trials, m_seed, m_threads));
            }
            std::ostringstream body;
            emit_csv(body, reports);
            emit(m_csv, body.str(), out);
            write_manifest(ctx, *mc, {m_csv}, m_seed);
            return ok;
        }
        if (*rep) {
            std::ifstream in = open_in(rp_manifest);
            json m;
            try {
                m = json::parse(in);
            } catch (const json::exception& e) {
                throw UsageError(std::string("unreadable manifest: ") + e.what());
            }
            if (!m.contains("argv") || !m["argv"].is_array()) throw UsageError("manifest has no argv");
            const auto replay_args = m["argv"].get<std::vector<std::string>>();
            if (!replay_args.empty() && replay_args.front() == "replay") throw UsageError("manifest replays itself");
            return dispatch(replay_args, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return usage;
}

}  // namespace hprod::cli
