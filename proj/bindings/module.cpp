#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boxball/config.hpp"
#include "boxball/experiment.hpp"
#include "boxball/forest.hpp"
#include "boxball/path.hpp"
#include "boxball/perm.hpp"
#include "boxball/sampling.hpp"
#include "boxball/stats.hpp"

namespace py = pybind11;
using namespace boxball;

namespace {

BoxBallConfig cfg(const std::string& s) { return BoxBallConfig::parse(s); }

py::dict diagram_dict(const YoungDiagram& d) {
    py::dict out;
    out["lambda"] = d.lambda;
    out["rho"] = d.rho;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "box-ball soliton cellular automaton core";

    m.def("carrier_update", [](const std::string& s) { return carrier_update(cfg(s)).to_string(); });
    m.def("evolve",
          [](const std::string& s, std::int64_t k) { return evolve(cfg(s), k).to_string(); });
    m.def("evolve_rows", [](const std::string& s, std::int64_t sweeps) {
        std::vector<BoxBallConfig> rows{cfg(s)};
        for (std::int64_t i = 0; i < sweeps; ++i) rows.push_back(carrier_update(rows.back()));
        std::int64_t width = 0;
        for (const BoxBallConfig& c : rows) width = std::max(width, c.last_ball());
        std::vector<std::string> out;
        for (const BoxBallConfig& c : rows) out.push_back(c.to_string(width));
        return out;
    });
    m.def("is_stable", [](const std::string& s) { return is_stable(cfg(s)); });
    m.def("stabilize", [](const std::string& s) {
        const StabilizeResult r = stabilize(cfg(s));
        return py::make_tuple(r.config.to_string(), r.sweeps);
    });
    m.def("soliton_lengths", [](const std::string& s) { return soliton_lengths(cfg(s)); });
    m.def("occupied_boxes", [](const std::string& s) { return cfg(s).occupied_boxes(); });

    m.def("path_of_config", [](const std::string& s) { return path_of_config(cfg(s)).heights(); });
    m.def("config_of_path", [](const std::vector<std::int32_t>& h) {
        return config_of_path(LatticePath(h)).to_string();
    });
    m.def("young_diagram",
          [](const std::string& s) { return diagram_dict(young_diagram(path_of_config(cfg(s)))); });
    m.def("diagram_methods", [](const std::string& s) {
        const BoxBallConfig c = cfg(s);
        const LatticePath gamma = path_of_config(c);
        py::dict out;
        out["path"] = diagram_dict(young_diagram(gamma));
        out["scan"] = diagram_dict(young_diagram_scan(gamma));
        out["forest"] = diagram_dict(young_from_forest(forest_of_path(gamma)));
        if (!c.empty()) out["rsk"] = diagram_dict(rs_shape(sigma_of_config(c)));
        return out;
    });

    m.def("sigma_of_config", [](const std::string& s) { return sigma_of_config(cfg(s)).values(); });
    m.def("sigma_of_path", [](const std::vector<std::int32_t>& h) {
        return sigma_of_path(LatticePath(h)).values();
    });
    m.def("rs_shape", [](const std::vector<std::int32_t>& v) {
        return diagram_dict(rs_shape(Permutation(v)));
    });
    m.def("avoids", [](const std::vector<std::int32_t>& v, const std::vector<std::int32_t>& pat) {
        return avoids(Permutation(v), Permutation(pat));
    });

    m.def(
        "sample_config",
        [](std::int64_t n, double p, std::uint64_t seed, std::uint64_t stream) {
            return sample_config({n, p, seed}, stream).to_string();
        },
        py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("stream") = 0);
    m.def(
        "uniform_dyck_path",
        [](std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
            return uniform_dyck_path(n, seed, stream).heights();
        },
        py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
    m.def(
        "uniform_stack_sortable",
        [](std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
            return uniform_stack_sortable(n, seed, stream).values();
        },
        py::arg("n"), py::arg("seed"), py::arg("stream") = 0);

    m.def("mu_i_theoretical", &mu_i_theoretical, py::arg("i"), py::arg("p"));
    m.def("csaki_hu_tail", &csaki_hu_tail, py::arg("j"), py::arg("y"));

    m.def(
        "run_experiment",
        [](const std::string& kind, std::int64_t n, double p, std::int64_t trials,
           std::uint64_t seed, int threads, bool include_trials) {
            const ExperimentReport rep =
                run_experiment(experiment_kind_from_string(kind), {n, p, seed}, trials, threads);
            return rep.to_json(include_trials).dump();
        },
        py::arg("kind"), py::arg("n"), py::arg("p"), py::arg("trials"), py::arg("seed"),
        py::arg("threads") = 0, py::arg("include_trials") = false,
        "Returns the report as a JSON string.");

    m.attr("__version__") = "0.1.0";
}
