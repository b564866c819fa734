#include "lascoux/cli.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lascoux/asymptotics.hpp"
#include "lascoux/cache_io.hpp"
#include "lascoux/errors.hpp"
#include "lascoux/identities.hpp"
#include "lascoux/lascoux.hpp"
#include "lascoux/pascal.hpp"
#include "lascoux/schur.hpp"
#include "lascoux/sdp.hpp"

namespace lascoux {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_consistency = 2;
constexpr int exit_resource = 3;

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

json polynomial_json(const RationalPolynomial& poly) {
    json j;
    j["coefficients"] = json::array();
    for (const auto& c : poly.coefficients()) j["coefficients"].push_back(c.str());
    const std::optional<int> deg = poly.degree();
    if (deg) j["degree"] = *deg;
    else j["degree"] = nullptr;
    j["lc"] = poly.leading_coefficient().str();
    return j;
}

/// Common option bundle for subcommands that touch the memo or the oracle.
struct ComputeOptions {
    std::string cache_path;
    int oracle_max_vars = OracleBudget{}.max_vars;
    int oracle_max_degree = OracleBudget{}.max_degree;

    void attach_cache(CLI::App* sub) {
        sub->add_option("--cache", cache_path,
                        "memo cache file: loaded if present, rewritten on success")
            ->envname("LASCOUX_CACHE");
    }
    void attach_oracle(CLI::App* sub) {
        sub->add_option("--oracle-max-vars", oracle_max_vars,
                        "Schur oracle budget: variables per block")
            ->capture_default_str();
        sub->add_option("--oracle-max-degree", oracle_max_degree,
                        "Schur oracle budget: expansion degree")
            ->capture_default_str();
    }

    OracleBudget budget() const { return OracleBudget{oracle_max_vars, oracle_max_degree}; }
    void load_into(MemoTable& memo) const {
        if (!cache_path.empty() && std::filesystem::exists(cache_path))
            memo_from_cache(load_cache(cache_path), memo);
    }
    void save_from(const MemoTable& memo) const {
        if (!cache_path.empty()) save_cache(cache_from_memo(memo), cache_path);
    }
};

void require_distinct_agreement(const std::string& label,
                                const std::vector<std::pair<std::string, BigRational>>& values) {
    for (size_t i = 1; i < values.size(); ++i) {
        if (!(values[i].second == values[0].second))
            throw consistency_error(label + ": method " + values[0].first + " gives " +
                                    values[0].second.str() + " but method " + values[i].first +
                                    " gives " + values[i].second.str());
    }
}

// psi | d | alpha: one Lascoux coefficient.
struct CoefficientCommand {
    explicit CoefficientCommand(std::string k) : kind(std::move(k)) {}

    std::string kind; // "psi", "d", "alpha"
    std::string set_str;
    std::string set2_str;
    std::string method;
    bool cross_check = false;
    ComputeOptions opts;

    void attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand(kind, description());
        sub->add_option("--set", set_str, "index set I, e.g. 0,2 (\"\" for empty)")->required();
        if (kind == "d") sub->add_option("--set2", set2_str, "index set J")->required();
        sub->add_option("--method", method, "computation route: " + methods_help())
            ->capture_default_str();
        sub->add_flag("--cross-check", cross_check, "run every applicable method and compare");
        opts.attach_oracle(sub);
        sub->callback([this] { run_self(); });
    }

    std::string description() const {
        if (kind == "psi") return "type C Lascoux coefficient psi_I";
        if (kind == "d") return "type A Lascoux coefficient d_{I,J}";
        return "type D Lascoux coefficient alpha_I";
    }
    std::string methods_help() const {
        if (kind == "psi") return "minors|schur|formula (formula: singleton I only)";
        if (kind == "d") return "schur|formula (formula: singleton I, J only)";
        return "schur|formula (formula: two-element I only)";
    }

    std::ostream* out_ = nullptr;
    void run_self() {
        if (method.empty()) method = kind == "psi" ? "minors" : "schur";
        const IndexSet I = parse_index_set(set_str);
        const IndexSet J = parse_index_set(set2_str);
        const SchurOracle oracle(opts.budget());

        auto compute = [&](const std::string& how) -> BigRational {
            if (kind == "psi") {
                if (how == "minors") return psi_via_minors(I);
                if (how == "schur") return oracle.psi(I);
                if (how == "formula") {
                    if (I.size() != 1)
                        throw input_error("psi closed form needs a singleton set, got " + I.str());
                    return pow(BigRational(2), I.min());
                }
            } else if (kind == "d") {
                if (how == "schur") return oracle.d(I, J);
                if (how == "formula") {
                    if (I.size() != 1 || J.size() != 1)
                        throw input_error("d closed form needs singleton sets, got " + I.str() +
                                          " and " + J.str());
                    return BigRational(binomial(I.min() + J.min(), I.min()));
                }
            } else {
                if (how == "schur") return oracle.alpha(I);
                if (how == "formula") {
                    if (I.size() != 2)
                        throw input_error("alpha closed form needs a two-element set, got " + I.str());
                    return alpha_two_element(I.elements()[0], I.elements()[1]);
                }
            }
            throw input_error("unknown method \"" + how + "\" for " + kind + ", expected " +
                              methods_help());
        };

        json j;
        if (cross_check) {
            std::vector<std::pair<std::string, BigRational>> values;
            if (kind == "psi") {
                values.emplace_back("minors", compute("minors"));
                values.emplace_back("schur", compute("schur"));
                if (I.size() == 1) values.emplace_back("formula", compute("formula"));
            } else if (kind == "d") {
                values.emplace_back("schur", compute("schur"));
                if (I.size() == 1 && J.size() == 1) values.emplace_back("formula", compute("formula"));
            } else {
                values.emplace_back("schur", compute("schur"));
                if (I.size() == 2) values.emplace_back("formula", compute("formula"));
            }
            require_distinct_agreement(kind + " " + I.str(), values);
            j[kind] = values[0].second.str();
            j["cross_checked"] = true;
        } else {
            j[kind] = compute(method).str();
        }
        emit(*out_, j);
    }
};

struct LpCommand {
    std::string type_str;
    std::string set_str;
    std::string set2_str;
    int n = -1;
    bool poly = false;
    ComputeOptions opts;
    std::ostream* out_ = nullptr;

    void attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("lp", "Lascoux polynomial value or reconstruction");
        sub->add_option("--type", type_str, "C, A or D")->required();
        sub->add_option("--set", set_str, "index set I")->required();
        sub->add_option("--set2", set2_str, "index set J (type A)");
        auto* n_opt = sub->add_option("--n", n, "evaluate at this argument");
        auto* poly_opt = sub->add_flag("--poly", poly, "reconstruct the (quasi)polynomial");
        n_opt->excludes(poly_opt);
        opts.attach_cache(sub);
        sub->callback([this] { run_self(); });
    }

    void run_self() {
        const LType type = type_from_name(type_str);
        const IndexSet I = parse_index_set(set_str);
        const IndexSet J = parse_index_set(set2_str);
        MemoTable memo;
        opts.load_into(memo);

        json j;
        if (poly) {
            const LascouxPolynomial lp = lp_polynomial(type, I, J, &memo);
            if (type == LType::D) {
                const auto& quasi = std::get<QuasiPolynomial2>(lp.body);
                j["even"] = polynomial_json(quasi.even_branch);
                j["odd"] = polynomial_json(quasi.odd_branch);
            } else {
                j = polynomial_json(std::get<RationalPolynomial>(lp.body));
            }
            j["validity_floor"] = lp.validity_floor;
        } else {
            if (n < 0) throw input_error("lp needs --n N (N >= 0) or --poly");
            BigRational value;
            switch (type) {
                case LType::C: value = lp_value_C(I, n, &memo); break;
                case LType::A: value = lp_value_A(I, J, n, &memo); break;
                case LType::D: value = lp_value_D(I, n, &memo); break;
            }
            j["lp"] = value.str();
        }
        opts.save_from(memo);
        emit(*out_, j);
    }
};

struct DeltaCommand {
    std::string type_str;
    int m = 0, n = 0, r = 0;
    ComputeOptions opts;
    std::ostream* out_ = nullptr;

    void attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("delta", "algebraic degree delta(m, n, r)");
        sub->add_option("--type", type_str, "C, A or D")->required();
        sub->add_option("--m", m, "linear-space dimension m >= 1")->required();
        sub->add_option("--n", n, "matrix size parameter n >= 1")->required();
        sub->add_option("--r", r, "rank bound r")->required();
        opts.attach_cache(sub);
        opts.attach_oracle(sub);
        sub->callback([this] { run_self(); });
    }

    void run_self() {
        const DeltaQuery q{type_from_name(type_str), m, n, r};
        const SchurOracle oracle(opts.budget());
        MemoTable memo;
        opts.load_into(memo);
        json j;
        j["delta"] = delta_value(q, oracle, &memo).str();
        opts.save_from(memo);
        emit(*out_, j);
    }
};

struct DeltaTableCommand {
    std::string type_str;
    int s = 1;
    int m_min = 1, m_max = 4;
    int n_min = 2, n_max = 6;
    std::string format = "json";
    int jobs = 1;
    ComputeOptions opts;
    std::ostream* out_ = nullptr;

    void attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("delta-table", "grid of delta(m, n, n-s) values");
        sub->add_option("--type", type_str, "C, A or D")->required();
        sub->add_option("--s", s, "corank s = n - r >= 1")->required();
        sub->add_option("--m-min", m_min)->required();
        sub->add_option("--m-max", m_max)->required();
        sub->add_option("--n-min", n_min)->required();
        sub->add_option("--n-max", n_max)->required();
        sub->add_option("--format", format, "json or csv")->capture_default_str();
        sub->add_option("--jobs", jobs, "worker threads sharing the memo table")
            ->capture_default_str();
        opts.attach_cache(sub);
        opts.attach_oracle(sub);
        sub->callback([this] { run_self(); });
    }

    void run_self() {
        const LType type = type_from_name(type_str);
        if (format != "json" && format != "csv")
            throw input_error("unknown format \"" + format + "\", expected json or csv");
        if (s < 1) throw input_error("delta-table needs s >= 1");
        if (m_min < 1 || m_max < m_min || n_max < n_min)
            throw input_error("delta-table needs 1 <= m-min <= m-max and n-min <= n-max");
        const int n_floor = type == LType::D ? s : s + 1;
        if (n_min < n_floor)
            throw input_error("delta-table type " + type_str + " with s=" + std::to_string(s) +
                              " needs n-min >= " + std::to_string(n_floor));
        if (jobs < 1) throw input_error("delta-table needs jobs >= 1");

        const SchurOracle oracle(opts.budget());
        MemoTable memo;
        opts.load_into(memo);

        const int rows = m_max - m_min + 1, cols = n_max - n_min + 1;
        std::vector<std::vector<BigRational>> grid(static_cast<size_t>(rows),
                                                   std::vector<BigRational>(static_cast<size_t>(cols)));
        const int cells = rows * cols;
        const int workers = std::min(jobs, cells);
        std::vector<std::exception_ptr> failures(static_cast<size_t>(workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int cell = w; cell < cells; cell += workers) {
                        const int mi = cell / cols, ni = cell % cols;
                        const DeltaQuery q{type, m_min + mi, n_min + ni, n_min + ni - s};
                        grid[static_cast<size_t>(mi)][static_cast<size_t>(ni)] =
                            delta_value(q, oracle, &memo);
                    }
                } catch (...) {
                    failures[static_cast<size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& failure : failures)
            if (failure) std::rethrow_exception(failure);

        opts.save_from(memo);
        if (format == "csv") {
            std::string line = "m";
            for (int ni = 0; ni < cols; ++ni) line += "," + std::to_string(n_min + ni);
            *out_ << line << "\n";
            for (int mi = 0; mi < rows; ++mi) {
                line = std::to_string(m_min + mi);
                for (int ni = 0; ni < cols; ++ni)
                    line += "," + grid[static_cast<size_t>(mi)][static_cast<size_t>(ni)].str();
                *out_ << line << "\n";
            }
            return;
        }
        json j;
        j["type"] = type_name(type);
        j["s"] = s;
        j["m_values"] = json::array();
        for (int mi = 0; mi < rows; ++mi) j["m_values"].push_back(m_min + mi);
        j["n_values"] = json::array();
        for (int ni = 0; ni < cols; ++ni) j["n_values"].push_back(n_min + ni);
        j["rows"] = json::array();
        for (int mi = 0; mi < rows; ++mi) {
            json row = json::array();
            for (int ni = 0; ni < cols; ++ni)
                row.push_back(grid[static_cast<size_t>(mi)][static_cast<size_t>(ni)].str());
            j["rows"].push_back(row);
        }
        emit(*out_, j);
    }
};

struct DeltaPolyCommand {
    std::string type_str;
    int m = 1, s = 1;
    ComputeOptions opts;
    std::ostream* out_ = nullptr;

    void attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("delta-poly", "delta(m, n, n-s) as a polynomial in n");
        sub->add_option("--type", type_str, "C, A or D")->required();
        sub->add_option("--m", m, "m >= 1")->required();
        sub->add_option("--s", s, "corank s >= 1")->required();
        opts.attach_cache(sub);
        opts.attach_oracle(sub);
        sub->callback([this] { run_self(); });
    }

    void run_self() {
        const LType type = type_from_name(type_str);
        const SchurOracle oracle(opts.budget());
        MemoTable memo;
        opts.load_into(memo);
        const RationalPolynomial poly = delta_polynomial(type, m, s, oracle, &memo);
        opts.save_from(memo);

        json j = polynomial_json(poly);
        j["threshold"] = delta_degree_threshold(type, s);
        j["threshold_met"] = m >= delta_degree_threshold(type, s);
        if (s == 1) {
            const BigRational closed = lc_delta_s1(type, m);
            j["lc_closed_form"] = closed.str();
            if (!(poly.leading_coefficient() == closed))
                throw consistency_error("delta-poly " + type_str + " m=" + std::to_string(m) +
                                        ": interpolated LC " + poly.leading_coefficient().str() +
                                        " disagrees with the closed form " + closed.str());
        }
        emit(*out_, j);
    }
};

struct VerifyIdentitiesCommand {
    int r_max = 5;
    int trials = 100;
    std::uint64_t seed = 12345;
    long max_num = SamplerBudget{}.max_abs_numerator;
    long max_den = SamplerBudget{}.max_denominator;
    int max_resamples = SamplerBudget{}.max_resamples;
    std::ostream* out_ = nullptr;

    void attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("verify-identities",
                                           "check the four rational-function identities at random points");
        sub->add_option("--r-max", r_max, "check r = 1..r-max")->capture_default_str();
        sub->add_option("--trials", trials, "instances per identity per r")->capture_default_str();
        sub->add_option("--seed", seed, "base seed")->capture_default_str();
        sub->add_option("--max-num", max_num, "sampler |numerator| bound")->capture_default_str();
        sub->add_option("--max-den", max_den, "sampler denominator bound")->capture_default_str();
        sub->add_option("--max-resamples", max_resamples, "sampler retry budget")
            ->capture_default_str();
        sub->callback([this] { run_self(); });
    }

    void run_self() {
        if (r_max < 1 || trials < 1) throw input_error("verify-identities needs r-max, trials >= 1");
        const SamplerBudget budget{max_num, max_den, max_resamples};
        const IdentityName names[] = {IdentityName::double_sum, IdentityName::sum,
                                      IdentityName::double_product, IdentityName::product};
        json results;
        for (IdentityName name : names) {
            int passed = 0;
            for (int r = 1; r <= r_max; ++r) {
                for (int t = 0; t < trials; ++t) {
                    const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(t);
                    const IdentityInstance inst = random_admissible_point(name, r, instance_seed, budget);
                    if (!check_identity(inst))
                        throw consistency_error("identity " + identity_name_str(name) + " fails at r=" +
                                                std::to_string(r) + " seed=" +
                                                std::to_string(instance_seed));
                    ++passed;
                }
            }
            results[identity_name_str(name)] = passed;
        }
        json j;
        j["r_max"] = r_max;
        j["trials_per_r"] = trials;
        j["seed"] = seed;
        j["results"] = results;
        j["all_passed"] = true;
        emit(*out_, j);
    }
};

struct CacheCommand {
    std::string load_path;
    std::string save_path;
    ComputeOptions opts;
    std::ostream* out_ = nullptr;

    void attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand("cache", "inspect, verify and rewrite memo cache files");
        sub->add_option("--load", load_path, "cache file to load and verify by recomputation");
        sub->add_option("--save", save_path, "write the (possibly empty) loaded state here");
        opts.attach_oracle(sub);
        sub->callback([this] { run_self(); });
    }

    void run_self() {
        if (load_path.empty() && save_path.empty())
            throw input_error("cache needs --load and/or --save");
        json j;
        MemoTable memo;
        if (!load_path.empty()) {
            const CacheFile file = load_cache(load_path);
            memo_from_cache(file, memo);
            // Every entry is recomputed from scratch; a cache must never be
            // able to change a result.
            for (const auto& [key_str, value_str] : file.entries) {
                const LascouxKey key = parse_cache_key(key_str);
                const BigRational claimed = BigRational::from_string(value_str);
                MemoTable fresh;
                BigRational actual;
                switch (key.type) {
                    case LType::C: actual = lp_value_C(key.I, key.n, &fresh); break;
                    case LType::A: actual = lp_value_A(key.I, key.J, key.n, &fresh); break;
                    case LType::D: actual = lp_value_D(key.I, key.n, &fresh); break;
                }
                if (!(actual == claimed))
                    throw consistency_error("cache entry " + key_str + " claims " + value_str +
                                            " but recomputation gives " + actual.str());
            }
            j["entries"] = file.entries.size();
            j["verified"] = true;
        } else {
            j["entries"] = 0;
        }
        if (!save_path.empty()) {
            save_cache(cache_from_memo(memo), save_path);
            j["saved"] = save_path;
        }
        emit(*out_, j);
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lascoux coefficients, Lascoux (quasi)polynomials and algebraic degrees "
                 "of semidefinite programming, types C, A and D",
                 "lascoux"};
    app.require_subcommand(1);

    CoefficientCommand psi_cmd{"psi"}, d_cmd{"d"}, alpha_cmd{"alpha"};
    LpCommand lp_cmd;
    DeltaCommand delta_cmd;
    DeltaTableCommand table_cmd;
    DeltaPolyCommand poly_cmd;
    VerifyIdentitiesCommand verify_cmd;
    CacheCommand cache_cmd;
    psi_cmd.out_ = d_cmd.out_ = alpha_cmd.out_ = lp_cmd.out_ = delta_cmd.out_ = table_cmd.out_ =
        poly_cmd.out_ = verify_cmd.out_ = cache_cmd.out_ = &out;
    psi_cmd.attach(app);
    d_cmd.attach(app);
    alpha_cmd.attach(app);
    lp_cmd.attach(app);
    delta_cmd.attach(app);
    table_cmd.attach(app);
    poly_cmd.attach(app);
    verify_cmd.attach(app);
    cache_cmd.attach(app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const consistency_error& e) {
        err << "consistency error: " << e.what() << "\n";
        return exit_consistency;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return exit_resource;
    }
}

} // namespace lascoux
