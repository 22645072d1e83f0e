#include "boxball/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "boxball/config.hpp"
#include "boxball/experiment.hpp"
#include "boxball/forest.hpp"
#include "boxball/path.hpp"
#include "boxball/perm.hpp"
#include "boxball/sampling.hpp"

namespace boxball {

namespace {

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    const int base = text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0 ? 16 : 10;
    const std::uint64_t v = std::stoull(text, &used, base);
    if (used != text.size()) throw std::invalid_argument("bad seed '" + text + "'");
    return v;
}

// --config accepts a 0/1 string directly or @file for large inputs.
BoxBallConfig load_config(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open config file '" + arg.substr(1) + "'");
        std::string text, line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            text += line;
        }
        return BoxBallConfig::parse(text);
    }
    return BoxBallConfig::parse(arg);
}

int cmd_evolve(const std::string& config_arg, std::int64_t sweeps, const std::string& format) {
    const BoxBallConfig start = load_config(config_arg);
    std::vector<BoxBallConfig> rows{start};
    for (std::int64_t s = 0; s < sweeps; ++s) rows.push_back(carrier_update(rows.back()));
    std::int64_t width = 0;
    for (const BoxBallConfig& c : rows) width = std::max(width, c.last_ball());
    if (format == "json") {
        nlohmann::ordered_json j;
        j["sweeps"] = sweeps;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const BoxBallConfig& c : rows) arr.push_back(c.to_string(width));
        j["rows"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t s = 0; s < rows.size(); ++s)
            std::cout << "s=" << s << " " << rows[s].to_string(width) << "\n";
    }
    return 0;
}

int cmd_diagram(const std::string& config_arg, std::string method, const std::string& format) {
    const BoxBallConfig cfg = load_config(config_arg);
    const LatticePath gamma = path_of_config(cfg);
    std::vector<std::pair<std::string, YoungDiagram>> results;
    const bool all = method == "all";
    if (all || method == "path") results.push_back({"path", young_diagram(gamma)});
    if (all || method == "scan") results.push_back({"scan", young_diagram_scan(gamma)});
    if (all || method == "forest") results.push_back({"forest", young_from_forest(forest_of_path(gamma))});
    if (all || method == "rsk")
        results.push_back({"rsk", cfg.empty() ? YoungDiagram{} : rs_shape(sigma_of_config(cfg))});
    if (all || method == "stabilize") {
        std::vector<std::int64_t> lengths = soliton_lengths(stabilize(cfg).config);
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        results.push_back(
            {"stabilize", lengths.empty() ? YoungDiagram{} : YoungDiagram::from_columns(lengths)});
    }
    if (results.empty()) throw std::invalid_argument("unknown diagram method '" + method + "'");
    bool consistent = true;
    for (const auto& [name, d] : results)
        if (!(d == results.front().second)) consistent = false;
    if (format == "json") {
        nlohmann::ordered_json j = results.front().second.to_json();
        nlohmann::ordered_json methods = nlohmann::ordered_json::array();
        for (const auto& [name, d] : results) methods.push_back(name);
        j["methods"] = methods;
        j["consistent"] = consistent;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << results.front().second.lambda_line() << "\n"
                  << results.front().second.rho_line() << "\n";
        std::cout << "methods:";
        for (const auto& [name, d] : results) std::cout << " " << name;
        std::cout << (consistent ? " -- consistent" : " -- MISMATCH") << "\n";
        if (!consistent)
            for (const auto& [name, d] : results)
                std::cout << "  " << name << ": " << d.lambda_line() << "\n";
    }
    return consistent ? 0 : 1;
}

int cmd_perm(const std::string& config_arg, const std::string& format) {
    const BoxBallConfig cfg = load_config(config_arg);
    const Permutation sigma = sigma_of_config(cfg);
    const Permutation sigma_inv =
        cfg.empty() ? Permutation() : sigma_of_path(path_of_config(cfg));
    const YoungDiagram shape = cfg.empty() ? YoungDiagram{} : rs_shape(sigma);
    const bool a312 = cfg.empty() || avoids(sigma, Permutation::parse("3 1 2"));
    const bool a231 = cfg.empty() || avoids(sigma_inv, Permutation::parse("2 3 1"));
    if (format == "json") {
        nlohmann::ordered_json j;
        j["sigma"] = sigma.values();
        j["sigma_inverse"] = sigma_inv.values();
        j["shape"] = shape.to_json();
        j["avoids_312"] = a312;
        j["inverse_avoids_231"] = a231;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sigma = " << sigma.to_string() << "\n";
        std::cout << "sigma_inverse = " << sigma_inv.to_string() << "\n";
        std::cout << shape.lambda_line() << "\n" << shape.rho_line() << "\n";
        std::cout << "avoids 312: " << (a312 ? "yes" : "no")
                  << ", inverse avoids 231: " << (a231 ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_sample(const std::string& kind, std::int64_t n, double p, std::uint64_t seed,
               std::uint64_t stream) {
    if (kind == "config") {
        std::cout << sample_config({n, p, seed}, stream).to_string() << "\n";
    } else if (kind == "dyck") {
        std::cout << uniform_dyck_path(n, seed, stream).serialize() << "\n";
    } else if (kind == "perm") {
        std::cout << uniform_stack_sortable(n, seed, stream).to_string() << "\n";
    } else if (kind == "forest") {
        std::cout << sample_gw_forest({n, p, seed}, stream).serialize() << "\n";
    } else {
        throw std::invalid_argument("unknown sample kind '" + kind + "'");
    }
    return 0;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

int cmd_experiment(const std::string& kind_name, std::int64_t n, double p, std::int64_t trials,
                   const std::string& seed_text, const std::string& out_path,
                   const std::string& format, bool check, int threads) {
    const ExperimentKind kind = experiment_kind_from_string(kind_name);
    const RandomParams params{n, p, parse_seed(seed_text)};
    const ExperimentReport rep = run_experiment(kind, params, trials, threads);

    if (!out_path.empty()) {
        write_file(out_path, rep.to_json().dump(2) + "\n");
        std::string stem = out_path;
        const std::size_t dot = stem.rfind('.');
        if (dot != std::string::npos && stem.find('/', dot) == std::string::npos)
            stem = stem.substr(0, dot);
        write_file(stem + ".csv", rep.to_csv());
        for (const auto& [name, contents] : rep.cdf_files())
            write_file(stem + "." + name + ".dat", contents);
    }

    if (format == "json") {
        std::cout << rep.to_json(false).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << rep.to_csv();
    } else {
        std::cout << "experiment " << kind_name << "  n=" << n << " p=" << p
                  << " trials=" << trials << " seed=" << params.seed << "\n";
        for (const Verdict& v : rep.verdicts)
            std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.name
                      << "  observed=" << v.observed << " bound=" << v.bound
                      << (v.detail.empty() ? "" : "  (" + v.detail + ")") << "\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
    }
    if (check && !rep.all_pass()) return 2;
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"box-ball soliton cellular automaton toolkit"};
    app.require_subcommand(1);

    std::string config_arg, format = "text", method = "all", kind, seed_text = "0", out_path;
    std::int64_t sweeps = 1, n = 1000, trials = 100;
    double p = 0.5;
    std::uint64_t stream = 0;
    int threads = 0;
    bool check = false;

    CLI::App* evolve = app.add_subcommand("evolve", "run carrier sweeps and print each row");
    evolve->add_option("--config", config_arg, "0/1 occupancy string, or @file")->required();
    evolve->add_option("--sweeps", sweeps, "number of sweeps to run");
    evolve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* diagram = app.add_subcommand("diagram", "Young diagram of a configuration");
    diagram->add_option("--config", config_arg)->required();
    diagram->add_option("--method", method,
                        "path | scan | forest | rsk | stabilize | all (cross-checked)");
    diagram->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* perm = app.add_subcommand("perm", "stack permutation and RS shape");
    perm->add_option("--config", config_arg)->required();
    perm->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* sample = app.add_subcommand("sample", "draw one random object");
    sample->add_option("--kind", kind, "config | dyck | perm | forest")->required();
    sample->add_option("--n", n, "size parameter")->required();
    sample->add_option("--p", p, "ball probability");
    sample->add_option("--seed", seed_text, "decimal or 0x-hex seed");
    sample->add_option("--stream", stream, "stream index within the seed");

    CLI::App* experiment = app.add_subcommand("experiment", "Monte Carlo verification run");
    experiment->footer(
        "CSV schema (one row per trial):\n"
        "  stream,rho1..rho5,lambda1..lambda5,sweeps,micros\n"
        "where stream is the RNG stream id of the trial and micros is wall time\n"
        "(the only non-deterministic column). For gw-coupling, rho1 holds the\n"
        "leaf count of the configuration-route forest and lambda1 the leaf count\n"
        "of the directly sampled forest; streams 2t and 2t+1 feed trial t.");
    experiment->add_option("kind", kind, "rows | rows-clt | columns-subcritical | "
                                         "columns-critical | columns-supercritical | "
                                         "permutation | gw-coupling")
        ->required();
    experiment->add_option("--n", n, "box horizon (or permutation length)")->required();
    experiment->add_option("--p", p, "ball probability");
    experiment->add_option("--trials", trials, "number of Monte Carlo trials");
    experiment->add_option("--seed", seed_text, "decimal or 0x-hex seed");
    experiment->add_option("--out", out_path, "write JSON report (plus .csv and .dat files)");
    experiment->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    experiment->add_flag("--check", check, "apply acceptance thresholds to the exit code");
    experiment->add_option("--threads", threads,
                           "worker threads (default: all cores; never affects results)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (evolve->parsed()) return cmd_evolve(config_arg, sweeps, format);
        if (diagram->parsed()) return cmd_diagram(config_arg, method, format);
        if (perm->parsed()) return cmd_perm(config_arg, format);
        if (sample->parsed()) return cmd_sample(kind, n, p, parse_seed(seed_text), stream);
        if (experiment->parsed())
            return cmd_experiment(kind, n, p, trials, seed_text, out_path, format, check, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace boxball
