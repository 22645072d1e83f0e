#include "boxball/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <stdexcept>
#include <thread>

#include "boxball/path.hpp"

namespace boxball {

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* kKindNames[] = {"rows",
                            "rows-clt",
                            "columns-subcritical",
                            "columns-critical",
                            "columns-supercritical",
                            "permutation",
                            "gw-coupling"};

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

const char* to_string(ExperimentKind kind) { return kKindNames[static_cast<int>(kind)]; }

ExperimentKind experiment_kind_from_string(const std::string& name) {
    for (int i = 0; i < 7; ++i)
        if (name == kKindNames[i]) return static_cast<ExperimentKind>(i);
    throw std::invalid_argument("unknown experiment kind '" + name + "'");
}

std::vector<std::string> experiment_kind_names() {
    return std::vector<std::string>(kKindNames, kKindNames + 7);
}

double normality_ks_gate(std::int64_t trials) {
    return 2.0 / std::sqrt(static_cast<double>(trials));
}

int default_thread_count() {
    if (const char* env = std::getenv("BOXBALL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? static_cast<int>(hw) : 1;
}

namespace {

void fill_observables(const std::vector<std::int64_t>& profile, TrialRow& row) {
    for (int i = 0; i < 5; ++i)
        row.rho[static_cast<std::size_t>(i)] =
            i < static_cast<int>(profile.size()) ? profile[static_cast<std::size_t>(i)] : 0;
    for (int j = 1; j <= 5; ++j) {
        std::int64_t count = 0;
        for (const std::int64_t r : profile)
            if (r >= j) ++count;
        row.lambda[static_cast<std::size_t>(j - 1)] = count;
    }
}

TrialRow run_config_trial(const RandomParams& params, std::uint64_t stream) {
    const auto t0 = std::chrono::steady_clock::now();
    RngStream rng(params.seed, stream);
    const std::uint32_t thr = RngStream::threshold(params.p);
    DiagramScanner sc;
    for (std::int64_t k = 0; k < params.n; ++k) {
        if (rng.next_u32() < thr)
            sc.up();
        else if (sc.height() > 0)
            sc.down();
    }
    sc.close_all();
    TrialRow row;
    row.stream = stream;
    fill_observables(sc.rows(), row);
    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return row;
}

TrialRow run_permutation_trial(const RandomParams& params, std::uint64_t stream) {
    const auto t0 = std::chrono::steady_clock::now();
    RngStream rng(params.seed, stream);
    const std::vector<std::int32_t> h = uniform_dyck_heights(params.n, rng);
    DiagramScanner sc;
    for (std::size_t k = 0; k + 1 < h.size(); ++k) {
        if (h[k + 1] > h[k])
            sc.up();
        else
            sc.down();
    }
    TrialRow row;
    row.stream = stream;
    fill_observables(sc.rows(), row);
    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return row;
}

TrialRow run_gw_trial(const RandomParams& params, std::uint64_t trial) {
    const auto t0 = std::chrono::steady_clock::now();
    RngStream rng(params.seed, 2 * trial);
    const std::uint32_t thr = RngStream::threshold(params.p);
    DiagramScanner sc;
    for (std::int64_t k = 0; k < params.n; ++k) {
        if (rng.next_u32() < thr)
            sc.up();
        else if (sc.height() > 0)
            sc.down();
    }
    sc.close_all();
    TrialRow row;
    row.stream = 2 * trial;
    row.rho[0] = sc.rows().empty() ? 0 : sc.rows()[0];
    row.lambda[0] = sample_gw_leaf_count(params, 2 * trial + 1);
    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return row;
}

std::vector<double> column(const std::vector<TrialRow>& rows,
                           const std::function<double(const TrialRow&)>& f) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const TrialRow& r : rows) out.push_back(f(r));
    return out;
}

std::string ecdf_file(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::string out;
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += format_double(values[i]);
        out += ' ';
        out += format_double(static_cast<double>(i + 1) / n);
        out += '\n';
    }
    return out;
}

void add_verdict(ExperimentReport& rep, const std::string& name, double observed, double bound,
                 bool pass, const std::string& detail) {
    rep.verdicts.push_back({name, observed, bound, pass, detail});
}

void basic_aggregates(ExperimentReport& rep) {
    nlohmann::ordered_json mean_rho = nlohmann::ordered_json::array();
    nlohmann::ordered_json mean_lambda = nlohmann::ordered_json::array();
    for (int i = 0; i < 5; ++i) {
        const auto ri = column(rep.rows, [i](const TrialRow& r) {
            return static_cast<double>(r.rho[static_cast<std::size_t>(i)]);
        });
        const auto li = column(rep.rows, [i](const TrialRow& r) {
            return static_cast<double>(r.lambda[static_cast<std::size_t>(i)]);
        });
        mean_rho.push_back(sample_mean(ri));
        mean_lambda.push_back(sample_mean(li));
    }
    rep.aggregates["mean_rho"] = mean_rho;
    rep.aggregates["mean_lambda"] = mean_lambda;
}

void finish_rows(ExperimentReport& rep) {
    const double n = static_cast<double>(rep.params.n);
    nlohmann::ordered_json mu = nlohmann::ordered_json::array();
    for (int i = 1; i <= 5; ++i) mu.push_back(mu_i_theoretical(i, rep.params.p));
    rep.reference["mu"] = mu;
    basic_aggregates(rep);
    for (int i = 1; i <= 3; ++i) {
        const double target = mu[static_cast<std::size_t>(i - 1)].get<double>();
        const double mean =
            rep.aggregates["mean_rho"][static_cast<std::size_t>(i - 1)].get<double>() / n;
        const double rel = std::fabs(mean - target) / target;
        add_verdict(rep, "mean_rho" + std::to_string(i) + "_rel_err", rel, 0.01, rel <= 0.01,
                    "mean rho_" + std::to_string(i) + "/n = " + format_double(mean) +
                        " vs " + format_double(target));
    }
}

void normality_verdicts(ExperimentReport& rep, const std::vector<double>& z) {
    const double zm = sample_mean(z);
    const double zv = sample_variance(z);
    const double ks = ks_distance(z, [](double x) { return normal_cdf(x); });
    rep.aggregates["standardized"] = {
        {"mean", zm}, {"variance", zv}, {"ks_vs_normal", ks}};
    add_verdict(rep, "standardized_mean", std::fabs(zm), 0.05, std::fabs(zm) < 0.05, "");
    add_verdict(rep, "standardized_variance", std::fabs(zv - 1.0), 0.05, std::fabs(zv - 1.0) < 0.05,
                "");
    const double gate = normality_ks_gate(rep.trials);
    add_verdict(rep, "ks_vs_normal", ks, gate, ks <= gate, "");
}

void finish_rows_clt(ExperimentReport& rep) {
    const RowCltReference ref = row_clt_reference(rep.params.n, rep.params.p);
    rep.reference = {{"mean", ref.mean},
                     {"variance", ref.variance},
                     {"exact_variance", ref.exact_variance}};
    basic_aggregates(rep);
    const double sd = std::sqrt(ref.variance);
    const auto z = column(rep.rows, [&](const TrialRow& r) {
        return (static_cast<double>(r.rho[0]) - ref.mean) / sd;
    });
    normality_verdicts(rep, z);
}

void finish_columns_subcritical(ExperimentReport& rep) {
    const SubcriticalReference ref = subcritical_reference(rep.params.n, rep.params.p);
    rep.reference = {{"theta", ref.theta}, {"sigma", ref.sigma}, {"mu_n", ref.mu_n}};
    basic_aggregates(rep);
    const auto centered = column(rep.rows, [&](const TrialRow& r) {
        return static_cast<double>(r.lambda[0]) - ref.mu_n;
    });
    nlohmann::ordered_json grid = nlohmann::ordered_json::array();
    double worst = 0.0;
    const double tol = 0.03;
    for (double x = -3.0; x <= 6.0 + 1e-9; x += 0.5) {
        std::int64_t count = 0;
        for (const double c : centered)
            if (c <= x) ++count;
        const double ecdf = static_cast<double>(count) / static_cast<double>(centered.size());
        const double lower = ref.lower_envelope(x);
        const double upper = ref.upper_envelope(x);
        worst = std::max({worst, lower - ecdf, ecdf - upper});
        grid.push_back({{"x", x}, {"lower", lower}, {"upper", upper}, {"ecdf", ecdf}});
    }
    rep.aggregates["sandwich_grid"] = grid;
    rep.aggregates["mean_lambda1_centered"] = sample_mean(centered);
    add_verdict(rep, "sandwich_violation", worst, tol, worst <= tol,
                "largest envelope violation over x in [-3, 6]");
}

void finish_columns_critical(ExperimentReport& rep) {
    const double sqrt_n = std::sqrt(static_cast<double>(rep.params.n));
    const double mean_target = std::sqrt(kPi / 2.0);
    rep.reference = {{"mean_lambda1_scaled", mean_target}};
    basic_aggregates(rep);
    std::array<std::vector<double>, 3> scaled;
    for (int j = 0; j < 3; ++j)
        scaled[static_cast<std::size_t>(j)] = column(rep.rows, [&, j](const TrialRow& r) {
            return static_cast<double>(r.lambda[static_cast<std::size_t>(j)]) / sqrt_n;
        });
    const double ks =
        ks_distance(scaled[0], [](double x) { return csaki_hu_cdf(1, x); });
    const double mean1 = sample_mean(scaled[0]);
    const double rel = std::fabs(mean1 - mean_target) / mean_target;
    std::int64_t order_violations = 0;
    for (const TrialRow& r : rep.rows)
        if (r.lambda[0] < r.lambda[1] || r.lambda[1] < r.lambda[2]) ++order_violations;
    rep.aggregates["lambda1_scaled"] = {{"mean", mean1},
                                        {"ks_vs_ranked_maxima", ks},
                                        {"median", sample_median(scaled[0])}};
    rep.aggregates["median_lambda2_scaled"] = sample_median(scaled[1]);
    rep.aggregates["median_lambda3_scaled"] = sample_median(scaled[2]);
    add_verdict(rep, "ks_lambda1_scaled", ks, 0.05, ks <= 0.05, "");
    add_verdict(rep, "mean_lambda1_scaled_rel_err", rel, 0.02, rel <= 0.02,
                "mean " + format_double(mean1) + " vs sqrt(pi/2)");
    add_verdict(rep, "median_lambda2_scaled", sample_median(scaled[1]), 0.1,
                sample_median(scaled[1]) > 0.1, "must exceed the bound");
    add_verdict(rep, "median_lambda3_scaled", sample_median(scaled[2]), 0.1,
                sample_median(scaled[2]) > 0.1, "must exceed the bound");
    add_verdict(rep, "ranked_order_violations", static_cast<double>(order_violations), 0.0,
                order_violations == 0, "lambda_1 >= lambda_2 >= lambda_3 per trial");
}

void finish_columns_supercritical(ExperimentReport& rep) {
    const SupercriticalReference ref = supercritical_reference(rep.params.n, rep.params.p);
    const double lambda2_gate = ref.lambda2_threshold(0.5);
    rep.reference = {{"mean", ref.mean},
                     {"sd", ref.sd},
                     {"mu", ref.mu},
                     {"lambda2_threshold", lambda2_gate}};
    basic_aggregates(rep);
    const auto z = column(rep.rows, [&](const TrialRow& r) {
        return (static_cast<double>(r.lambda[0]) - ref.mean) / ref.sd;
    });
    normality_verdicts(rep, z);
    const double linear_cut = (2.0 * rep.params.p - 1.0 - 0.05) * static_cast<double>(rep.params.n);
    std::int64_t linear = 0, logarithmic = 0;
    for (const TrialRow& r : rep.rows) {
        if (static_cast<double>(r.lambda[0]) > linear_cut) ++linear;
        if (static_cast<double>(r.lambda[1]) > lambda2_gate) ++logarithmic;
    }
    const double f_linear = static_cast<double>(linear) / static_cast<double>(rep.trials);
    const double f_log = static_cast<double>(logarithmic) / static_cast<double>(rep.trials);
    rep.aggregates["freq_lambda1_linear"] = f_linear;
    rep.aggregates["freq_lambda2_above_log"] = f_log;
    add_verdict(rep, "freq_lambda1_linear", f_linear, 0.95, f_linear > 0.95,
                "lambda_1 > (2p-1-0.05) n");
    add_verdict(rep, "freq_lambda2_above_log", f_log, 0.05, f_log < 0.05,
                "lambda_2 > (0.5 + 5/log mu) log n");
}

void finish_permutation(ExperimentReport& rep) {
    const double n = static_cast<double>(rep.params.n);
    const double rho1_target = (n + 1.0) / 2.0;
    const double lambda1_target = std::sqrt(kPi * n) - 1.5;
    const double scaled_target = std::sqrt(kPi);
    nlohmann::ordered_json mu = nlohmann::ordered_json::array();
    for (int i = 1; i <= 3; ++i) mu.push_back(mu_i_theoretical(i, 0.5));
    rep.reference = {{"mean_rho1", rho1_target},
                     {"mean_lambda1", lambda1_target},
                     {"mean_lambda1_scaled", scaled_target},
                     {"mu_half", mu}};
    basic_aggregates(rep);
    const double mean_rho1 = rep.aggregates["mean_rho"][0].get<double>();
    const double mean_lambda1 = rep.aggregates["mean_lambda"][0].get<double>();
    const double rel_rho1 = std::fabs(mean_rho1 - rho1_target) / rho1_target;
    const double rel_l1 = std::fabs(mean_lambda1 - lambda1_target) / lambda1_target;
    const double rel_l1s = std::fabs(mean_lambda1 / std::sqrt(n) - scaled_target) / scaled_target;
    add_verdict(rep, "mean_rho1_rel_err", rel_rho1, 0.01, rel_rho1 <= 0.01,
                "mean " + format_double(mean_rho1) + " vs (n+1)/2");
    add_verdict(rep, "mean_lambda1_rel_err", rel_l1, 0.03, rel_l1 <= 0.03,
                "mean " + format_double(mean_lambda1) + " vs sqrt(pi n) - 1.5");
    add_verdict(rep, "mean_lambda1_scaled_rel_err", rel_l1s, 0.03, rel_l1s <= 0.03,
                "mean/sqrt(n) vs sqrt(pi)");
    for (int i = 1; i <= 3; ++i) {
        const double target = mu[static_cast<std::size_t>(i - 1)].get<double>();
        const double mean =
            rep.aggregates["mean_rho"][static_cast<std::size_t>(i - 1)].get<double>() / (2.0 * n);
        const double rel = std::fabs(mean - target) / target;
        add_verdict(rep, "rho" + std::to_string(i) + "_over_2n_rel_err", rel, 0.02, rel <= 0.02,
                    "mean rho_" + std::to_string(i) + "/2n = " + format_double(mean));
    }
}

void finish_gw(ExperimentReport& rep) {
    std::vector<std::int64_t> a, b;
    for (const TrialRow& r : rep.rows) {
        a.push_back(r.rho[0]);
        b.push_back(r.lambda[0]);
    }
    const TwoSampleChiSquare chi = chi_square_two_sample(a, b);
    rep.reference = {{"alpha", 0.01}};
    rep.aggregates["mean_leaves_config"] =
        sample_mean(column(rep.rows, [](const TrialRow& r) { return static_cast<double>(r.rho[0]); }));
    rep.aggregates["mean_leaves_gw"] = sample_mean(
        column(rep.rows, [](const TrialRow& r) { return static_cast<double>(r.lambda[0]); }));
    rep.aggregates["chi_square"] = {{"statistic", chi.statistic},
                                    {"dof", chi.dof},
                                    {"p_value", chi.p_value}};
    add_verdict(rep, "chi_square_p_value", chi.p_value, 0.01, chi.p_value >= 0.01,
                "two-sample leaf-count comparison");
}

}  // namespace

bool ExperimentReport::all_pass() const {
    for (const Verdict& v : verdicts)
        if (!v.pass) return false;
    return true;
}

ExperimentReport run_experiment(ExperimentKind kind, const RandomParams& params,
                                std::int64_t trials, int threads) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    switch (kind) {
        case ExperimentKind::ColumnsSubcritical:
            if (!(params.p < 0.5))
                throw std::invalid_argument("columns-subcritical requires p < 1/2");
            break;
        case ExperimentKind::ColumnsCritical:
            if (std::fabs(params.p - 0.5) > 1e-12)
                throw std::invalid_argument("columns-critical requires p = 1/2");
            break;
        case ExperimentKind::ColumnsSupercritical:
            if (!(params.p > 0.5))
                throw std::invalid_argument("columns-supercritical requires p > 1/2");
            break;
        default:
            break;
    }
    if (threads <= 0) threads = default_thread_count();

    const auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep;
    rep.kind = kind;
    rep.params = params;
    rep.trials = trials;
    rep.threads = threads;
    rep.rows.resize(static_cast<std::size_t>(trials));

    const auto trial_fn = [&](std::uint64_t t) -> TrialRow {
        switch (kind) {
            case ExperimentKind::Permutation:
                return run_permutation_trial(params, t);
            case ExperimentKind::GwCoupling:
                return run_gw_trial(params, t);
            default:
                return run_config_trial(params, t);
        }
    };

    if (threads == 1) {
        for (std::int64_t t = 0; t < trials; ++t)
            rep.rows[static_cast<std::size_t>(t)] = trial_fn(static_cast<std::uint64_t>(t));
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::int64_t t = next.fetch_add(1);
                    if (t >= trials) break;
                    rep.rows[static_cast<std::size_t>(t)] = trial_fn(static_cast<std::uint64_t>(t));
                }
            });
        for (std::thread& th : pool) th.join();
    }

    switch (kind) {
        case ExperimentKind::Rows:
            finish_rows(rep);
            break;
        case ExperimentKind::RowsClt:
            finish_rows_clt(rep);
            break;
        case ExperimentKind::ColumnsSubcritical:
            finish_columns_subcritical(rep);
            break;
        case ExperimentKind::ColumnsCritical:
            finish_columns_critical(rep);
            break;
        case ExperimentKind::ColumnsSupercritical:
            finish_columns_supercritical(rep);
            break;
        case ExperimentKind::Permutation:
            finish_permutation(rep);
            break;
        case ExperimentKind::GwCoupling:
            finish_gw(rep);
            break;
    }

    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    rep.timestamp = buf;
    return rep;
}

nlohmann::ordered_json ExperimentReport::to_json(bool include_trials) const {
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind);
    j["params"] = {{"n", params.n},
                   {"p", params.p},
                   {"trials", trials},
                   {"seed", std::to_string(params.seed)}};
    j["reference"] = reference;
    j["aggregates"] = aggregates;
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const Verdict& v : verdicts)
        vs.push_back({{"name", v.name},
                      {"observed", v.observed},
                      {"bound", v.bound},
                      {"pass", v.pass},
                      {"detail", v.detail}});
    j["verdicts"] = vs;
    j["all_pass"] = all_pass();
    if (include_trials) {
        nlohmann::ordered_json data = nlohmann::ordered_json::array();
        for (const TrialRow& r : rows) {
            nlohmann::ordered_json line = nlohmann::ordered_json::array();
            line.push_back(r.stream);
            for (const std::int64_t x : r.rho) line.push_back(x);
            for (const std::int64_t x : r.lambda) line.push_back(x);
            line.push_back(r.sweeps);
            data.push_back(std::move(line));
        }
        j["trials_data"] = {{"columns",
                             {"stream", "rho1", "rho2", "rho3", "rho4", "rho5", "lambda1",
                              "lambda2", "lambda3", "lambda4", "lambda5", "sweeps"}},
                            {"rows", std::move(data)}};
    }
    j["metadata"] = {{"timestamp", timestamp}, {"wall_ms", wall_ms}, {"threads", threads}};
    return j;
}

std::string ExperimentReport::to_csv() const {
    std::string out =
        "stream,rho1,rho2,rho3,rho4,rho5,lambda1,lambda2,lambda3,lambda4,lambda5,sweeps,micros\n";
    for (const TrialRow& r : rows) {
        out += std::to_string(r.stream);
        for (const std::int64_t x : r.rho) out += ',' + std::to_string(x);
        for (const std::int64_t x : r.lambda) out += ',' + std::to_string(x);
        out += ',' + std::to_string(r.sweeps);
        out += ',' + std::to_string(r.micros);
        out += '\n';
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> ExperimentReport::cdf_files() const {
    std::vector<std::pair<std::string, std::string>> files;
    const double sqrt_n = std::sqrt(static_cast<double>(params.n));
    switch (kind) {
        case ExperimentKind::Rows: {
            files.push_back({"rho1_over_n_cdf",
                             ecdf_file(column(rows, [&](const TrialRow& r) {
                                 return static_cast<double>(r.rho[0]) /
                                        static_cast<double>(params.n);
                             }))});
            break;
        }
        case ExperimentKind::RowsClt: {
            const RowCltReference ref = row_clt_reference(params.n, params.p);
            const double sd = std::sqrt(ref.variance);
            files.push_back({"standardized_cdf",
                             ecdf_file(column(rows, [&](const TrialRow& r) {
                                 return (static_cast<double>(r.rho[0]) - ref.mean) / sd;
                             }))});
            break;
        }
        case ExperimentKind::ColumnsSupercritical: {
            const SupercriticalReference ref = supercritical_reference(params.n, params.p);
            files.push_back({"standardized_cdf",
                             ecdf_file(column(rows, [&](const TrialRow& r) {
                                 return (static_cast<double>(r.lambda[0]) - ref.mean) / ref.sd;
                             }))});
            break;
        }
        case ExperimentKind::ColumnsSubcritical: {
            const SubcriticalReference ref = subcritical_reference(params.n, params.p);
            files.push_back({"lambda1_centered_cdf",
                             ecdf_file(column(rows, [&](const TrialRow& r) {
                                 return static_cast<double>(r.lambda[0]) - ref.mu_n;
                             }))});
            break;
        }
        case ExperimentKind::ColumnsCritical:
        case ExperimentKind::Permutation: {
            files.push_back({"lambda1_scaled_cdf",
                             ecdf_file(column(rows, [&](const TrialRow& r) {
                                 return static_cast<double>(r.lambda[0]) / sqrt_n;
                             }))});
            break;
        }
        case ExperimentKind::GwCoupling: {
            files.push_back({"leaves_config_cdf", ecdf_file(column(rows, [](const TrialRow& r) {
                                 return static_cast<double>(r.rho[0]);
                             }))});
            files.push_back({"leaves_gw_cdf", ecdf_file(column(rows, [](const TrialRow& r) {
                                 return static_cast<double>(r.lambda[0]);
                             }))});
            break;
        }
    }
    return files;
}

}  // namespace boxball
