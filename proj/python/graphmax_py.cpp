#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphmax/constants.hpp"
#include "graphmax/errors.hpp"
#include "graphmax/json_io.hpp"
#include "graphmax/search.hpp"
#include "graphmax/verify.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace graphmax;

namespace {

Centering centering_of(bool centered) { return centered ? Centering::centered : Centering::uncentered; }

std::vector<double> as_list(const VertexFunction& f) { return {f.values().begin(), f.values().end()}; }

// Structured results cross the boundary as JSON text; the Python side decodes.
std::string json_text(const Json& doc) { return doc.dump(); }

}  // namespace

PYBIND11_MODULE(_graphmax, m) {
    m.doc() = "Hardy-Littlewood maximal operators on finite graphs";
    m.attr("__version__") = GRAPHMAX_VERSION;

    py::register_exception<ZeroVariation>(m, "ZeroVariation", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
             "n"_a, "edges"_a = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::size)
        .def_property_readonly("edges", [](const Graph& g) {
            return std::vector<Edge>(g.edges().begin(), g.edges().end());
        })
        .def("dist", [](const Graph& g, Vertex u, Vertex v) -> py::object {
            const int d = g.dist(u, v);
            if (d == kUnreachable) return py::none();
            return py::int_(d);
        }, "u"_a, "v"_a, "Hop distance, or None across components.")
        .def("connected", &Graph::connected)
        .def("to_json", [](const Graph& g) { return json_text(to_json(g)); })
        .def(py::self == py::self)
        .def("__len__", &Graph::size)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.size()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete", &complete, "n"_a);
    m.def("star", &star, "n"_a, "Star with center 0.");
    m.def("path", &path, "n"_a);
    m.def("cycle", &cycle, "n"_a);
    m.def("graph_from_json", [](const std::string& text) { return graph_from_json(Json::parse(text)); },
          "text"_a);

    m.def("maximal", [](const Graph& g, std::vector<double> f, double alpha, bool centered) {
        return as_list(maximal(g, VertexFunction(std::move(f)), Alpha(alpha), centering_of(centered)));
    }, "graph"_a, "f"_a, "alpha"_a = 0.0, "centered"_a = true);

    m.def("p_variation", [](const Graph& g, std::vector<double> f, double p) {
        return p_variation(g, VertexFunction(std::move(f)), PExponent(p));
    }, "graph"_a, "f"_a, "p"_a);
    m.def("lp_norm", [](std::vector<double> f, double p) {
        return lp_norm(VertexFunction(std::move(f)), PExponent(p));
    }, "f"_a, "p"_a);

    m.def("variation_ratio", [](const Graph& g, std::vector<double> f, double p, double alpha, bool centered) {
        return variation_ratio(g, VertexFunction(std::move(f)), PExponent(p), Alpha(alpha),
                               centering_of(centered)).ratio;
    }, "graph"_a, "f"_a, "p"_a, "alpha"_a = 0.0, "centered"_a = true);
    m.def("norm_ratio", [](const Graph& g, std::vector<double> f, double p, double alpha, bool centered) {
        return norm_ratio(g, VertexFunction(std::move(f)), PExponent(p), Alpha(alpha),
                          centering_of(centered)).ratio;
    }, "graph"_a, "f"_a, "p"_a, "alpha"_a = 0.0, "centered"_a = true);

    m.def("majorizes", [](const std::vector<double>& x, const std::vector<double>& y) {
        return majorizes(x, y);
    }, "x"_a, "y"_a);

    m.def("_sharp_variation_constant", [](const std::string& family, std::size_t n, double p) {
        return json_text(to_json(sharp_variation_constant(parse_family(family), n, PExponent(p))));
    });
    m.def("_l2_norm", [](const std::string& family, std::size_t n) {
        return json_text(to_json(l2_norm(parse_family(family), n)));
    });
    m.def("boundedness_constant", [](std::size_t n, double p, double q, double alpha) {
        return boundedness_constant(n, PExponent(p), PExponent(q), Alpha(alpha));
    }, "n"_a, "p"_a, "q"_a, "alpha"_a = 0.0);

    m.def("_estimate_ratio", [](const Graph& g, const std::string& target, double p, double alpha,
                                bool centered, std::size_t restarts, std::uint64_t seed,
                                std::size_t threads) {
        SearchConfig cfg;
        cfg.target = parse_target(target);
        cfg.p = PExponent(p);
        cfg.alpha = Alpha(alpha);
        cfg.centering = centering_of(centered);
        cfg.restarts = restarts;
        cfg.seed = seed;
        cfg.threads = threads;
        SearchReport report;
        {
            py::gil_scoped_release release;
            report = estimate_ratio(g, cfg);
        }
        return json_text(to_json(report));
    });
    m.def("_verify", [](const std::string& suite, std::uint64_t seed, std::size_t restarts) {
        VerifyOptions options;
        options.seed = seed;
        options.restarts = restarts;
        const Suite parsed = parse_suite(suite);
        Report report;
        {
            py::gil_scoped_release release;
            report = run_verify(parsed, options);
        }
        return json_text(to_json(report));
    });
    m.attr("DEFAULT_SEED") = kDefaultSeed;
}
