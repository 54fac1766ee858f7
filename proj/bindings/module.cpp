// Python bindings for the main operations. Reports and zeta functions cross
// the boundary as native python objects converted from their JSON form;
// arbitrary-precision integers go through decimal strings.

#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "zetadiv/cli.hpp"
#include "zetadiv/mu.hpp"
#include "zetadiv/padic.hpp"
#include "zetadiv/verify.hpp"
#include "zetadiv/zeta.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace zetadiv;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& v : j) out.append(json_to_py(v));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

algebra::VarietySpec spec_from_args(std::uint32_t p, std::uint32_t e,
                                    const std::string& ambient, std::uint32_t n,
                                    const std::vector<std::string>& polys) {
    json j{{"p", p}, {"e", e}, {"ambient", ambient}, {"n", n}, {"polys", polys}};
    return cli::parse_variety_json(j.dump(), "<python>").spec;
}

IntPoly poly_from_list(const std::vector<std::string>& coeffs) {
    IntPoly f;
    for (const auto& s : coeffs) f.c.emplace_back(s);
    f.trim();
    return f;
}

py::int_ big(const mpz_class& v) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.get_str()));
}

counting::CountOptions count_opts(std::uint64_t budget) {
    counting::CountOptions o;
    if (budget) o.budget = budget;
    return o;
}

zeta::ZetaOptions zeta_opts(std::uint64_t budget, std::uint32_t bound,
                            std::uint32_t holdout) {
    zeta::ZetaOptions o;
    o.bound = bound;
    o.holdout = holdout;
    o.counting = count_opts(budget);
    return o;
}

verify::VerifyOptions verify_opts(std::uint64_t budget, std::optional<int> dim,
                                  bool assert_ci = false) {
    verify::VerifyOptions o;
    o.dim_override = dim;
    o.assert_ci = assert_ci;
    o.zeta.counting = count_opts(budget);
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "zeta functions of varieties over small finite fields, with exact "
              "q-divisibility analysis of their zeros and poles";

    py::register_exception<Error>(m, "ZetadivError");

    m.def("build_field", [](std::uint32_t p, std::uint32_t e) {
        auto f = algebra::build_field(p, e);
        return py::make_tuple(f.p, f.e, f.modulus);
    }, py::arg("p"), py::arg("e"), "smallest-modulus field F_{p^e}; returns (p, e, modulus)");

    m.def("compute_mu", [](std::uint32_t j, std::uint32_t n,
                           const std::vector<std::uint32_t>& degrees) {
        return mu::compute_mu(j, n, degrees);
    }, py::arg("j"), py::arg("n"), py::arg("degrees"));

    m.def("count", [](std::uint32_t p, std::uint32_t e, const std::string& ambient,
                      std::uint32_t n, const std::vector<std::string>& polys,
                      std::uint32_t k, bool complement, std::uint64_t budget) {
        auto spec = spec_from_args(p, e, ambient, n, polys);
        counting::CountProvider prov(spec, count_opts(budget));
        return big(prov.count(k, complement));
    }, py::arg("p"), py::arg("e"), py::arg("ambient"), py::arg("n"), py::arg("polys"),
       py::arg("k") = 1, py::arg("complement") = false, py::arg("budget") = 0);

    m.def("zeta", [](std::uint32_t p, std::uint32_t e, const std::string& ambient,
                     std::uint32_t n, const std::vector<std::string>& polys,
                     bool complement, std::uint64_t budget, std::uint32_t bound,
                     std::uint32_t holdout) {
        auto spec = spec_from_args(p, e, ambient, n, polys);
        auto z = zeta::zeta_of(spec, complement, zeta_opts(budget, bound, holdout));
        return json_to_py(z.to_json());
    }, py::arg("p"), py::arg("e"), py::arg("ambient"), py::arg("n"), py::arg("polys"),
       py::arg("complement") = false, py::arg("budget") = 0, py::arg("bound") = 32,
       py::arg("holdout") = 2);

    m.def("newton_slopes", [](const std::vector<std::string>& coeffs, std::uint32_t p) {
        auto np = padic::newton_polygon(poly_from_list(coeffs), p);
        py::list out;
        for (const auto& [slope, mult] : np.slopes)
            out.append(py::make_tuple(big(slope.get_num()), big(slope.get_den()), mult));
        return out;
    }, py::arg("coeffs"), py::arg("p"),
       "lower-hull slopes as (numerator, denominator, multiplicity) triples");

    m.def("check_divisibility", [](const std::vector<std::string>& coeffs, std::uint32_t p,
                                   std::uint32_t e, std::uint32_t mu_exp) {
        return padic::check_divisibility(poly_from_list(coeffs), p, e, mu_exp);
    }, py::arg("coeffs"), py::arg("p"), py::arg("e"), py::arg("mu"));

    m.def("weight_of_factor", [](const std::vector<std::string>& coeffs, std::uint64_t q) {
        return padic::weight_of_factor(poly_from_list(coeffs), q);
    }, py::arg("coeffs"), py::arg("q"));

    m.def("factor_poly", [](const std::vector<std::string>& coeffs) {
        py::list out;
        for (const auto& [f, mult] : zeta::factor_integer_poly(poly_from_list(coeffs))) {
            py::list fc;
            for (const auto& x : f.c) fc.append(big(x));
            out.append(py::make_tuple(fc, mult));
        }
        return out;
    }, py::arg("coeffs"));

    m.def("verify_ax_katz", [](std::uint32_t p, std::uint32_t e, const std::string& ambient,
                               std::uint32_t n, const std::vector<std::string>& polys,
                               std::uint32_t kmax, std::uint64_t budget) {
        auto spec = spec_from_args(p, e, ambient, n, polys);
        return json_to_py(verify::verify_ax_katz(spec, kmax, count_opts(budget)).to_json());
    }, py::arg("p"), py::arg("e"), py::arg("ambient"), py::arg("n"), py::arg("polys"),
       py::arg("kmax") = 3, py::arg("budget") = 0);

    m.def("verify_projective", [](std::uint32_t p, std::uint32_t e, std::uint32_t n,
                                  const std::vector<std::string>& polys,
                                  std::uint64_t budget, std::optional<int> dim) {
        auto spec = spec_from_args(p, e, "projective", n, polys);
        return json_to_py(
            verify::verify_projective_bounds(spec, verify_opts(budget, dim)).to_json());
    }, py::arg("p"), py::arg("e"), py::arg("n"), py::arg("polys"), py::arg("budget") = 0,
       py::arg("dim") = py::none());

    m.def("verify_polar", [](std::uint32_t p, std::uint32_t e, std::uint32_t n,
                             const std::vector<std::string>& polys, bool assert_ci,
                             std::uint64_t budget) {
        auto spec = spec_from_args(p, e, "affine", n, polys);
        return json_to_py(
            verify::verify_polar(spec, verify_opts(budget, std::nullopt, assert_ci))
                .to_json());
    }, py::arg("p"), py::arg("e"), py::arg("n"), py::arg("polys"),
       py::arg("assert_ci") = false, py::arg("budget") = 0);

    m.def("verify_excision", [](std::uint32_t p, std::uint32_t e, std::uint32_t n,
                                const std::vector<std::string>& polys, std::uint32_t kmax,
                                std::uint64_t budget) {
        auto spec = spec_from_args(p, e, "affine", n, polys);
        return json_to_py(verify::verify_excision(spec, kmax, count_opts(budget)).to_json());
    }, py::arg("p"), py::arg("e"), py::arg("n"), py::arg("polys"), py::arg("kmax") = 3,
       py::arg("budget") = 0);

    m.def("probe_affine", [](std::uint32_t p, std::uint32_t e, std::uint32_t n,
                             const std::vector<std::string>& polys, std::uint64_t budget) {
        auto spec = spec_from_args(p, e, "affine", n, polys);
        return json_to_py(verify::probe_affine(spec, verify_opts(budget, std::nullopt))
                              .to_json());
    }, py::arg("p"), py::arg("e"), py::arg("n"), py::arg("polys"), py::arg("budget") = 0);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "run the command-line driver in-process; returns (exit, out, err)");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
