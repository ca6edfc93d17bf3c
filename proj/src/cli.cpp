#include <qseries/cli.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <qseries/partitions.hpp>
#include <qseries/recurrences.hpp>
#include <qseries/report_io.hpp>
#include <qseries/verifier.hpp>

namespace qseries::cli
{

namespace
{

constexpr std::int64_t max_table_n = 100000;
constexpr std::int64_t max_sweep_k = 8;
constexpr std::int64_t max_sweep_n = 100000;

// Thrown for bad values that CLI11's own checks cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "json";
    std::string path;
};

struct Result {
    std::string text;
    int status = exit_ok;
};

template <typename Id, typename Range>
std::string id_list(const Range &ids)
{
    std::string s;
    for (Id id : ids) {
        if (!s.empty()) {
            s += ", ";
        }
        s += to_string(id);
    }
    return s;
}

template <typename Id, typename Range>
Id parse_or_throw(std::optional<Id> parsed, const std::string &given, const Range &ids)
{
    if (!parsed) {
        throw UsageError("unknown id '" + given + "'; expected one of: " + id_list<Id>(ids));
    }
    return *parsed;
}

void require_range(const char *flag, std::int64_t v, std::int64_t lo, std::int64_t hi)
{
    if (v < lo || v > hi) {
        throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi)
                         + "], got " + std::to_string(v));
    }
}

void add_output_flags(CLI::App *sub, Output &o)
{
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.path, "Write the report to FILE instead of stdout");
}

// "Q_R(3)" or "Q_R" with the parameter from a flag.
FunctionId parse_function(const std::string &name, std::optional<std::int64_t> param)
{
    static const std::regex with_param(R"(([A-Z_]+)\((\d+)\))");
    std::smatch m;
    std::string base = name;
    if (std::regex_match(name, m, with_param)) {
        base = m[1];
        const auto inline_param = std::stoll(m[2]);
        if (param && *param != inline_param) {
            throw UsageError("conflicting parameters for " + name);
        }
        param = inline_param;
    }
    const auto kind = parse_partition_kind(base);
    if (!kind) {
        throw UsageError("unknown function '" + name
                         + "'; expected one of: P, Q, Q_R, OVERPARTITION, POD, M_K, M_OK, MP_K");
    }
    FunctionId id{*kind, 0};
    if (is_parameterized(*kind)) {
        if (!param) {
            throw UsageError(base + " needs a parameter (--param, --k or --r, or " + base + "(N))");
        }
        id.param = *param;
        try {
            validate(id);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        require_range("parameter", id.param, 1, max_sweep_k);
    }
    return id;
}

Result run_bench(const std::vector<std::int64_t> &sizes, const Output &o)
{
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "kind,n_max,terms_at_nmax,wall_millis\n";
    for (auto n : sizes) {
        for (auto kind : all_recurrences) {
            const auto start = std::chrono::steady_clock::now();
            q_via_recurrence(kind, n);
            const auto stop = std::chrono::steady_clock::now();
            const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
            const auto terms = term_count(kind, n);
            csv << to_string(kind) << ',' << n << ',' << terms << ',' << millis << '\n';
            rows.push_back({{"kind", std::string(to_string(kind))},
                            {"n_max", n},
                            {"terms_at_nmax", terms},
                            {"wall_millis", millis}});
        }
    }
    if (o.format == "json") {
        return {render({{"kind", "bench"}, {"rows", std::move(rows)}})};
    }
    return {csv.str()};
}

struct AllOptions {
    std::size_t order = default_identity_order;
    std::int64_t k_max = 5;
    std::int64_t n_max = 1000;
    std::int64_t parity_n_max = 10000;
};

Result run_all(const AllOptions &a, const Output &o)
{
    Json identities = Json::array(), families = Json::array(), parities = Json::array();
    std::ostringstream csv;
    csv << "section,id,k,r,range,outcome,gating\n";
    std::size_t total = 0, failed = 0;

    for (auto id : all_identities) {
        const std::int64_t k_top = uses_k(id) ? a.k_max : 1;
        const std::int64_t r_top = uses_r(id) ? max_identity_r : 1;
        for (std::int64_t k = 1; k <= k_top; ++k) {
            for (std::int64_t r = 1; r <= r_top; ++r) {
                const auto report = verify_identity(id, {k, r}, a.order);
                ++total;
                failed += !report.passed();
                identities.push_back(to_json(report));
                csv << "identity," << to_string(id) << ',' << (uses_k(id) ? std::to_string(k) : "") << ','
                    << (uses_r(id) ? std::to_string(r) : "") << ',' << a.order << ',' << outcome(report)
                    << ",yes\n";
            }
        }
    }
    for (auto id : all_families) {
        const auto report = verify_inequality_family(id, a.k_max, a.n_max);
        const bool gating = is_proved(id);
        if (gating) {
            ++total;
            failed += !report.clean();
        }
        auto j = to_json(report, "inequality");
        j["gating"] = gating;
        families.push_back(std::move(j));
        csv << "inequality," << report.family_id << ",1-" << a.k_max << ",," << a.n_max << ',' << outcome(report)
            << ',' << (gating ? "yes" : "no") << '\n';
    }
    for (auto id : all_parities) {
        const auto report = verify_parity(id, a.parity_n_max);
        ++total;
        failed += !report.clean();
        parities.push_back(to_json(report, "parity"));
        csv << "parity," << report.family_id << ",,," << a.parity_n_max << ',' << outcome(report) << ",yes\n";
    }

    const int status = failed == 0 ? exit_ok : exit_failure;
    if (o.format == "csv") {
        return {csv.str(), status};
    }
    Json j = {{"kind", "all"},
              {"summary", {{"proved_checks", total}, {"failed", failed}, {"outcome", failed == 0 ? "PASS" : "FAIL"}}},
              {"identities", std::move(identities)},
              {"families", std::move(families)},
              {"parities", std::move(parities)}};
    return {render(j), status};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series, partition tables and truncated theta series checks", "qseries"};
    app.require_subcommand(1);

    Output output;

    // table
    auto *table = app.add_subcommand("table", "Emit a partition function table");
    std::string table_name;
    std::optional<std::int64_t> table_param;
    std::int64_t table_n = 0;
    table->add_option("--name", table_name, "P, Q, Q_R, OVERPARTITION, POD, M_K, M_OK, MP_K")->required();
    auto *param_opt = table->add_option("--param", table_param, "Parameter r or k");
    table->add_option("--k", table_param, "Alias of --param")->excludes(param_opt);
    table->add_option("--r", table_param, "Alias of --param")->excludes(param_opt);
    table->add_option("--nmax", table_n, "Largest n")->required();
    add_output_flags(table, output);

    // identity
    auto *identity = app.add_subcommand("identity", "Check one identity coefficientwise");
    std::string identity_name;
    IdentityParams params;
    std::int64_t order = static_cast<std::int64_t>(default_identity_order);
    identity->add_option("--id", identity_name, "Identity id, e.g. ID_TH14")->required();
    identity->add_option("--k", params.k, "Truncation parameter")->capture_default_str();
    identity->add_option("--r", params.r, "Dilation for ID_TH14")->capture_default_str();
    identity->add_option("--order", order, "Truncation order")->capture_default_str();
    add_output_flags(identity, output);

    // inequality
    auto *inequality = app.add_subcommand("inequality", "Sweep an inequality family");
    std::string family_name;
    std::int64_t family_k = 5, family_n = 1000;
    inequality->add_option("--family", family_name, "Family id, e.g. FAM_COR15B")->required();
    inequality->add_option("--kmax", family_k, "Largest k")->capture_default_str();
    inequality->add_option("--nmax", family_n, "Largest n")->capture_default_str();
    add_output_flags(inequality, output);

    // conjecture
    auto *conjecture = app.add_subcommand("conjecture", "Collect evidence for a conjecture");
    std::string conj_name;
    std::int64_t conj_k = 0;
    std::optional<std::int64_t> conj_n, conj_order;
    conjecture->add_option("--id", conj_name, "CONJ1, CONJ2, CONJ41 or CONJ42")->required();
    conjecture->add_option("--kmax", conj_k, "Largest k (default 4 for CONJ1/CONJ2, 5 otherwise)");
    auto *conj_n_opt = conjecture->add_option("--nmax", conj_n, "Largest n (CONJ1, CONJ2; default 500)");
    conjecture->add_option("--order", conj_order, "Series order (CONJ41, CONJ42; default 500)")->excludes(conj_n_opt);
    add_output_flags(conjecture, output);

    // parity
    auto *parity = app.add_subcommand("parity", "Check a parity corollary");
    std::string parity_name;
    std::int64_t parity_n = 10000;
    parity->add_option("--id", parity_name, "COR13, COR16A/B/C, COR43A/B")->required();
    parity->add_option("--nmax", parity_n, "Largest n")->capture_default_str();
    add_output_flags(parity, output);

    // bench
    auto *bench = app.add_subcommand("bench", "Time Q table construction through each recurrence");
    std::vector<std::int64_t> bench_sizes{10000, 100000};
    bench->add_option("--nmax", bench_sizes, "Table sizes")->capture_default_str();
    output.format = "json";
    auto *bench_format = bench->add_option("--format", output.format, "Report format (default csv)");
    bench_format->check(CLI::IsMember({"json", "csv"}));
    bench->add_option("--out", output.path, "Write the report to FILE instead of stdout");

    // all
    auto *all = app.add_subcommand("all", "Run every proved check");
    AllOptions all_opts;
    std::int64_t all_order = static_cast<std::int64_t>(all_opts.order);
    all->add_option("--order", all_order, "Identity order")->capture_default_str();
    all->add_option("--kmax", all_opts.k_max, "Largest k")->capture_default_str();
    all->add_option("--nmax", all_opts.n_max, "Largest n for families")->capture_default_str();
    all->add_option("--parity-nmax", all_opts.parity_n_max, "Largest n for parity checks")->capture_default_str();
    add_output_flags(all, output);

    std::vector<const char *> argv{"qseries"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }

    std::function<Result()> job;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (bench->parsed() && bench_format->count() == 0) {
            output.format = "csv";
        }

        // Everything is validated here, before any computation.
        if (table->parsed()) {
            const auto id = parse_function(table_name, table_param);
            require_range("--nmax", table_n, 0, max_table_n);
            job = [&, id] {
                const auto t = make_table(id, table_n);
                return Result{output.format == "csv" ? to_csv(t) : render(to_json(t))};
            };
        } else if (identity->parsed()) {
            const auto id = parse_or_throw(parse_identity(identity_name), identity_name, all_identities);
            if (uses_k(id)) {
                require_range("--k", params.k, 1, max_identity_k);
            }
            if (uses_r(id)) {
                require_range("--r", params.r, 1, max_identity_r);
            }
            require_range("--order", order, 1, static_cast<std::int64_t>(max_identity_order));
            job = [&, id] {
                const auto report = verify_identity(id, params, static_cast<std::size_t>(order));
                const int status = report.passed() ? exit_ok : exit_failure;
                for (const auto &w : report.warnings) {
                    err << "warning: " << w << '\n';
                }
                return Result{output.format == "csv" ? to_csv(report) : render(to_json(report)), status};
            };
        } else if (inequality->parsed()) {
            const auto id = parse_or_throw(parse_family(family_name), family_name, all_families);
            require_range("--kmax", family_k, 1, max_sweep_k);
            require_range("--nmax", family_n, 0, max_sweep_n);
            job = [&, id] {
                const auto report = verify_inequality_family(id, family_k, family_n);
                // The two conditional families fail only through a conjecture.
                const int bad = is_proved(id) ? exit_failure : exit_counterexample;
                return Result{output.format == "csv" ? to_csv(report) : render(to_json(report, "inequality")),
                              report.clean() ? exit_ok : bad};
            };
        } else if (conjecture->parsed()) {
            const auto id = parse_or_throw(parse_conjecture(conj_name), conj_name, all_conjectures);
            const bool theta = id == ConjectureId::conj41 || id == ConjectureId::conj42;
            if (theta && conj_n) {
                throw UsageError(conj_name + " takes --order, not --nmax");
            }
            if (!theta && conj_order) {
                throw UsageError(conj_name + " takes --nmax, not --order");
            }
            if (conj_k == 0) {
                conj_k = theta ? 5 : 4;
            }
            require_range("--kmax", conj_k, 1, max_sweep_k);
            const auto limit = theta ? conj_order.value_or(500) : conj_n.value_or(500);
            require_range(theta ? "--order" : "--nmax", limit, 0,
                          theta ? static_cast<std::int64_t>(max_identity_order) : 5000);
            job = [&, id, limit] {
                const auto report = check_conjecture(id, conj_k, limit);
                return Result{output.format == "csv" ? to_csv(report) : render(to_json(report, "conjecture")),
                              report.clean() ? exit_ok : exit_counterexample};
            };
        } else if (parity->parsed()) {
            const auto id = parse_or_throw(parse_parity(parity_name), parity_name, all_parities);
            require_range("--nmax", parity_n, 1, 1000000);
            job = [&, id] {
                const auto report = verify_parity(id, parity_n);
                return Result{output.format == "csv" ? to_csv(report) : render(to_json(report, "parity")),
                              report.clean() ? exit_ok : exit_failure};
            };
        } else if (bench->parsed()) {
            for (auto n : bench_sizes) {
                require_range("--nmax", n, 0, 1000000);
            }
            job = [&] { return run_bench(bench_sizes, output); };
        } else if (all->parsed()) {
            require_range("--order", all_order, 1, static_cast<std::int64_t>(max_identity_order));
            require_range("--kmax", all_opts.k_max, 1, max_identity_k);
            require_range("--nmax", all_opts.n_max, 0, max_sweep_n);
            require_range("--parity-nmax", all_opts.parity_n_max, 1, 1000000);
            all_opts.order = static_cast<std::size_t>(all_order);
            job = [&] { return run_all(all_opts, output); };
        }
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return exit_usage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    Result result;
    try {
        result = job();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (output.path.empty()) {
        out << result.text;
        out.flush();
        return result.status;
    }
    std::ofstream file(output.path, std::ios::binary);
    file << result.text;
    if (!file) {
        err << "error: cannot write " << output.path << '\n';
        return exit_failure;
    }
    return result.status;
}

} // namespace qseries::cli
