#include "augcolor/bounds.hpp"
#include "augcolor/coloring.hpp"
#include "augcolor/errors.hpp"
#include "augcolor/experiment.hpp"
#include "augcolor/host.hpp"
#include "augcolor/io.hpp"
#include "augcolor/random_models.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace augcolor;

namespace {

// Arbitrary-precision counts cross the boundary as Python ints.
py::int_ to_py(const BigInt& x)
{
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10)));
}

py::dict accounting_dict(const ColoringResult& r)
{
    py::dict d;
    d["colors"] = r.coloring.num_colors();
    d["phase1_colors"] = r.accounting.independent_set_colors;
    d["phase2_colors"] = r.accounting.fallback_colors;
    d["nu"] = r.accounting.remaining_at_switch;
    d["nu_threshold"] = r.accounting.nu_threshold;
    d["set_size"] = r.accounting.set_size;
    d["budget_exceeded"] = r.accounting.budget_exceeded;
    py::list classes;
    for (const auto& c : r.accounting.classes) {
        py::dict cd;
        cd["size"] = c.size;
        cd["large"] = c.large;
        cd["colors"] = c.colors;
        classes.append(cd);
    }
    d["classes"] = classes;
    return d;
}

Algorithm algorithm_from(const std::string& name)
{
    if (auto a = parse_algorithm(name))
        return *a;
    throw InputError("unknown algorithm '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_augcolor, m)
{
    m.doc() = "Coloring algorithms and bounds for randomly augmented graphs";
    m.attr("__version__") = std::string(kVersion);
    m.attr("RNG") = std::string(kRngName);

    auto base = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ColoringUnavailable>(m, "ColoringUnavailable", PyExc_RuntimeError);
    (void)base;

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return build_graph(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("union", &graph_union);
    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("complete_multipartite",
          [](const std::vector<std::size_t>& parts) { return complete_multipartite(parts); });
    m.def("is_independent", [](const Graph& g, const std::vector<Vertex>& s) {
        return is_independent(g, VertexSet::from(g.order(), s));
    });
    m.def("is_proper_coloring", [](const Graph& g, const std::vector<std::size_t>& colors) {
        return is_proper_coloring(g, Coloring(colors));
    });
    m.def("first_conflict", [](const Graph& g, const std::vector<std::size_t>& colors) {
        return first_conflict(g, Coloring(colors));
    });

    m.def("read_dimacs", [](const std::string& text) {
        std::istringstream in(text);
        return io::read_dimacs(in);
    });
    m.def("write_dimacs", [](const Graph& g) {
        std::ostringstream out;
        io::write_dimacs(out, g);
        return out.str();
    });

    m.def("derive_seed", [](std::uint64_t seed, std::uint64_t index) { return Seed{seed}.derive(index).value; });
    m.def(
        "sample_gnp",
        [](std::size_t n, double p, std::uint64_t seed, bool geometric) {
            return sample_gnp(n, p, Seed{seed}, geometric ? SamplingMode::geometric_skip : SamplingMode::canonical);
        },
        py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("geometric") = false);
    m.def(
        "augment",
        [](const Graph& host, double p, std::uint64_t seed) { return augment(host, p, Seed{seed}); },
        py::arg("host"), py::arg("p"), py::arg("seed"));

    py::class_<HostSpec>(m, "HostSpec")
        .def_static("multipartite", &HostSpec::multipartite)
        .def_static("parse", &parse_host_spec)
        .def_static("from_graph", [](const Graph& g, const std::vector<std::size_t>& colors) {
            return HostSpec::from_graph(g, Coloring(colors));
        })
        .def_property_readonly("graph", &HostSpec::graph)
        .def_property_readonly("n", &HostSpec::order)
        .def("describe", &HostSpec::describe)
        .def("__repr__", [](const HostSpec& h) { return "<HostSpec " + h.describe() + ">"; });

    m.def("host_coloring", [](const HostSpec& h) {
        const auto c = host_coloring(h);
        return std::vector<std::size_t>(c.assignment().begin(), c.assignment().end());
    });
    m.def(
        "count_independent_sets", [](const HostSpec& h, std::size_t k) { return to_py(count_independent_sets(h, k)); },
        py::arg("host"), py::arg("k"));

    m.def("greedy_maximal_independent_set", [](const Graph& g, std::uint64_t seed) {
        return greedy_maximal_independent_set(g, VertexSet::full(g.order()), Seed{seed}).members();
    });
    m.def("maximum_independent_set", [](const Graph& g) { return maximum_independent_set(g).members(); });

    m.def(
        "color",
        [](const std::string& alg, const Graph& g, std::optional<HostSpec> host, double p, double epsilon,
           double theta, std::uint64_t seed, std::uint64_t node_limit) {
            AlgoParams params{p, epsilon, theta, Seed{seed}, SearchBudget{node_limit}};
            ColoringResult r;
            {
                py::gil_scoped_release release;
                r = run_algorithm(algorithm_from(alg), g, host ? &*host : nullptr, params);
            }
            py::dict d = accounting_dict(r);
            d["coloring"] = std::vector<std::size_t>(r.coloring.assignment().begin(), r.coloring.assignment().end());
            return d;
        },
        py::arg("alg"), py::arg("graph"), py::arg("host") = py::none(), py::arg("p") = 0.5,
        py::arg("epsilon") = 0.1, py::arg("theta") = 0.25, py::arg("seed") = 0,
        py::arg("node_limit") = kDefaultNodeLimit);

    m.def(
        "exact_chromatic",
        [](const Graph& g, std::size_t cap) {
            auto r = exact_chromatic(g, cap);
            return py::make_tuple(r.chromatic_number,
                                  std::vector<std::size_t>(r.witness.assignment().begin(),
                                                           r.witness.assignment().end()));
        },
        py::arg("graph"), py::arg("cap") = kExactChromaticCap);

    auto b = m.def_submodule("bounds", "Closed-form quantities");
    b.def("k0", &bounds::k0);
    b.def("k0_sandwich", [](std::uint64_t n, double p) {
        const auto s = bounds::k0_sandwich(n, p);
        return py::make_tuple(s.lower, s.upper);
    });
    b.def("augmented_bound", &bounds::augmented_bound);
    b.def("small_p_bound", &bounds::small_p_bound);
    b.def("small_p_bound_log_b", &bounds::small_p_bound_log_b);
    b.def("greedy_bound", &bounds::greedy_bound);
    b.def("alpha_threshold_k", &bounds::alpha_threshold_k);
    b.def("markov_alpha_bound", [](const py::int_& count, double p, std::uint64_t k) {
        return bounds::markov_alpha_bound(BigInt(py::str(count).cast<std::string>()), p, k);
    });
    b.def("mcdiarmid_tail", [](double t, std::uint64_t n) { return bounds::mcdiarmid_tail(t, n).raw; });
    b.def("chromatic_lower_from_alpha", &bounds::chromatic_lower_from_alpha);
    b.def(
        "report_json",
        [](std::uint64_t n, double p, std::uint64_t chi, std::optional<std::uint64_t> k) {
            nlohmann::json j = bounds::bound_report(n, p, chi, k);
            return j.dump();
        },
        py::arg("n"), py::arg("p"), py::arg("chi_h") = 1, py::arg("k") = py::none());

    m.def("run_campaign_json", [](const std::string& config_json) {
        const auto config = experiment::config_from_json(nlohmann::json::parse(config_json));
        experiment::CampaignResult r;
        {
            py::gil_scoped_release release;
            r = experiment::run_campaign(config);
        }
        std::ostringstream csv;
        experiment::write_trials_csv(csv, r.records);
        return py::make_tuple(csv.str(), experiment::summary_json(r, config).dump());
    });
}
