#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mconv/euler.hpp"
#include "mconv/geometry.hpp"
#include "mconv/json_io.hpp"
#include "mconv/sdcheck.hpp"
#include "mconv/solver.hpp"
#include "mconv/star.hpp"
#include "mconv/transforms.hpp"

namespace py = pybind11;
using namespace mconv;

// All structured values cross the boundary as JSON text in the same schema
// the CLI uses; the Python package wraps them into dicts.

namespace {

std::string dump(const ojson& j) { return j.dump(); }

PointDistribution dist(const std::string& s) { return distribution_from_json(parse_json(s)); }
EulerOperator op(const std::string& s) { return operator_from_json(parse_json(s)); }

std::vector<Rational> point_from_strings(const std::vector<std::string>& p) {
    std::vector<Rational> out;
    out.reserve(p.size());
    for (const auto& s : p) out.push_back(Rational::from_string(s));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multiplicative-convolution algebra of point-supported distributions";

    // Translators run newest-first, so the base class must be registered first
    // or it would shadow the derived ones.
    py::register_exception<Error>(m, "MconvError", PyExc_RuntimeError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("delta", [](const std::vector<std::string>& point) {
        return dump(to_json(PointDistribution::delta(point_from_strings(point))));
    });
    m.def("delta_derivative",
          [](const std::vector<std::string>& point, const std::vector<std::uint32_t>& mu,
             const std::string& coef) {
              return dump(to_json(PointDistribution::delta_derivative(
                  point_from_strings(point), MultiIndex(mu), Rational::from_string(coef))));
          },
          py::arg("point"), py::arg("mu"), py::arg("coef") = "1");
    m.def("unit", [](std::size_t dim) { return dump(to_json(star_unit(dim))); });

    m.def("add", [](const std::string& a, const std::string& b) {
        return dump(to_json(dist(a).plus(dist(b))));
    });
    m.def("scale", [](const std::string& a, const std::string& c) {
        return dump(to_json(dist(a).scaled(Rational::from_string(c))));
    });
    m.def("star", [](const std::string& a, const std::string& b) {
        return dump(to_json(star(dist(a), dist(b))));
    });
    m.def("moment", [](const std::string& a, const std::vector<std::uint32_t>& alpha) {
        return dist(a).moment(MultiIndex(alpha)).to_string();
    });
    m.def("order", [](const std::string& a) { return dist(a).order(); });

    m.def("euler_to_xd", [](const std::string& p) {
        const EulerOperator P = op(p);
        return dump(xd_form_to_json(P.dim(), P.to_xd_form()));
    });
    m.def("euler_to_distribution",
          [](const std::string& p) { return dump(to_json(op(p).to_distribution())); });
    m.def("euler_from_distribution", [](const std::string& t) {
        return dump(to_json(EulerOperator::from_distribution(dist(t))));
    });
    m.def("euler_symbol", [](const std::string& p, const std::vector<std::complex<double>>& z) {
        return op(p).symbol(z);
    });
    m.def("euler_transpose_apply", [](const std::string& p, const std::string& t) {
        return dump(to_json(op(p).transpose_apply(dist(t))));
    });

    m.def("cauchy_transform", [](const std::string& t) {
        return dump(to_json(cauchy_transform(dist(t))));
    });
    m.def("taylor_coefficients",
          [](const std::string& f, const std::vector<std::uint32_t>& max_degree) {
              return dump(to_json(taylor_coefficients(transform_from_json(parse_json(f)), max_degree)));
          });
    m.def("moment_table", [](const std::string& t, const std::vector<std::uint32_t>& max_degree) {
        return dump(to_json(moment_table(dist(t), max_degree)));
    });
    m.def("hadamard_product", [](const std::string& a, const std::string& b) {
        return dump(to_json(hadamard_product(series_from_json(parse_json(a)),
                                             series_from_json(parse_json(b)))));
    });
    m.def("char_function", [](const std::string& t, const std::vector<std::complex<double>>& z) {
        return char_function(dist(t), z);
    });

    m.def("sd_check",
          [](const std::string& t, double a, std::optional<double> b, std::optional<double> c,
             double x_max, int grid, int samples) {
              SDConfig cfg;
              cfg.a = a;
              cfg.b = b;
              cfg.c = c;
              cfg.x_max = x_max;
              cfg.x_grid = grid;
              cfg.samples = samples;
              return dump(to_json(slowly_decreasing_check(dist(t), cfg)));
          },
          py::arg("t"), py::arg("a") = SDConfig{}.a, py::arg("b") = py::none(),
          py::arg("c") = py::none(), py::arg("x_max") = SDConfig{}.x_max, py::arg("grid") = 0,
          py::arg("samples") = SDConfig{}.samples);

    m.def("v_set", [](const std::string& x, const std::string& y) {
        return dump(to_json(v_set(box_from_json(parse_json(x)), box_from_json(parse_json(y)))));
    });
    m.def("u_set", [](const std::string& inner, const std::string& outer) {
        return dump(
            to_json(u_set(box_from_json(parse_json(inner)), box_from_json(parse_json(outer)))));
    });
    m.def("mconv_hull", [](const std::string& pts) {
        return dump(to_json(mconv_hull(pointset_from_json(parse_json(pts)))));
    });

    m.def("solve_euler", [](const std::string& p, const std::string& f) {
        return dump(to_json(solve_euler(op(p), grid_from_json(parse_json(f)))));
    });
    m.def("residual", [](const std::string& p, const std::string& u, const std::string& f) {
        return residual(op(p), grid_from_json(parse_json(u)), grid_from_json(parse_json(f)));
    });
    m.def("grid_nodes", [](double r, double R, int n) {
        const GridFunction g(r, R, n);
        std::vector<double> nodes(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) nodes[static_cast<std::size_t>(k)] = g.node(k);
        return nodes;
    });
}
