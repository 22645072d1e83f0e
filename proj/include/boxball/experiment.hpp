#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "boxball/sampling.hpp"
#include "boxball/stats.hpp"

namespace boxball {

enum class ExperimentKind {
    Rows,                  // mean rows against the excursion-height law
    RowsClt,               // standardized first row against the normal law
    ColumnsSubcritical,    // lambda_1 - mu_n against the Gumbel-type sandwich
    ColumnsCritical,       // lambda_j / sqrt(n) against ranked Brownian maxima
    ColumnsSupercritical,  // condensation: normal lambda_1, logarithmic lambda_2
    Permutation,           // uniform stack-sortable subsequence statistics
    GwCoupling,            // leaf-count law vs direct Galton-Watson sampling
};

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);  // throws on unknown
std::vector<std::string> experiment_kind_names();

struct Verdict {
    std::string name;
    double observed = 0;
    double bound = 0;
    bool pass = false;
    std::string detail;
};

struct TrialRow {
    std::uint64_t stream = 0;
    std::array<std::int64_t, 5> rho{};
    std::array<std::int64_t, 5> lambda{};
    std::int64_t sweeps = 0;
    std::int64_t micros = 0;  // timing only; excluded from deterministic output
};

// KS gate used by the normality checks, stated as 0.02 at 10^4 trials and
// scaled with the usual sqrt(trials) normalization elsewhere.
double normality_ks_gate(std::int64_t trials);

struct ExperimentReport {
    ExperimentKind kind = ExperimentKind::Rows;
    RandomParams params;
    std::int64_t trials = 0;
    int threads = 1;

    std::vector<TrialRow> rows;
    nlohmann::ordered_json reference;
    nlohmann::ordered_json aggregates;
    std::vector<Verdict> verdicts;

    std::int64_t wall_ms = 0;  // metadata
    std::string timestamp;     // metadata

    bool all_pass() const;

    // Deterministic function of (kind, params, trials); wall time and
    // timestamp live under "metadata" so reports can be compared without them.
    nlohmann::ordered_json to_json(bool include_trials = true) const;
    std::string to_csv() const;

    // (suffix, contents) pairs of gnuplot-ready empirical CDFs.
    std::vector<std::pair<std::string, std::string>> cdf_files() const;
};

ExperimentReport run_experiment(ExperimentKind kind, const RandomParams& params,
                                std::int64_t trials, int threads = 0);

int default_thread_count();

}  // namespace boxball
