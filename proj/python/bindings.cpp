#include "synpath/diagram.hpp"
#include "synpath/distributions.hpp"
#include "synpath/flow.hpp"
#include "synpath/realizability.hpp"
#include "synpath/serialize.hpp"
#include "synpath/verify.hpp"
#include "synpath/witness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace synpath;

namespace {

GraphSpec make_spec(const std::string& family, int n) {
    return parse_family(family) == Family::CompleteN ? GraphSpec::complete(n) : GraphSpec::bipartite(n);
}

Configuration make_config(const std::string& family, const std::vector<double>& x) {
    int n = static_cast<int>(parse_family(family) == Family::CompleteN ? x.size() : x.size() / 2);
    return {make_spec(family, n), x};
}

// Big integers cross the boundary as Python ints via their decimal text.
py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

py::list to_py(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_synpath, m) {
    m.doc() = "Paths towards synchronization on K_N and K_{N,N}";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

    m.def("encode", [](const std::string& family, const std::vector<std::string>& x, const std::string& eps) {
        std::string csv;
        for (std::size_t i = 0; i < x.size(); ++i) csv += (i ? "," : "") + x[i];
        int n = static_cast<int>(parse_family(family) == Family::CompleteN ? x.size() : x.size() / 2);
        auto cfg = parse_configuration(make_spec(family, n), csv);
        Rational e = parse_rational(eps);
        return cfg.spec.family == Family::CompleteN ? to_text(encode_kn(cfg, e)) : to_text(encode_knn(cfg, e));
    }, py::arg("family"), py::arg("x"), py::arg("eps") = "1", "code text of the eps-synchronized subnetwork");

    m.def("witness", [](const std::string& family, const std::string& code, const std::string& eps) {
        auto x = witness(parse_code(parse_family(family), code), parse_rational(eps));
        std::vector<std::string> out;
        for (const auto& v : x.values) out.push_back(to_string(v));
        return out;
    }, py::arg("family"), py::arg("code"), py::arg("eps") = "1", "exact witness coordinates as p/q strings");

    m.def("simulate", [](const std::string& family, const std::vector<double>& x, double eps, const std::string& flow) {
        auto cfg = make_config(family, x);
        auto seq = flow == "kuramoto" ? kuramoto_sequence(cfg, KuramotoParams{}, eps) : laplacian_sequence(cfg, eps);
        return from_json(to_json(seq));
    }, py::arg("family"), py::arg("x"), py::arg("eps"), py::arg("flow") = "laplacian");

    m.def("length_distribution", [](const std::string& family, int n) {
        return to_py(distribution_for(parse_family(family), n).counts);
    }, py::arg("family"), py::arg("n"));

    m.def("count_realizable_paths_kn", [](int n) { return to_py(count_realizable_paths_kn(n)); }, py::arg("n"));

    m.def("admissible_paths", [](const std::string& family, int n) {
        auto d = build_diagram(make_spec(family, n));
        BigInt total = 0;
        for (int s : d.starts) total += count_admissible_paths(d, d.vertices[s]);
        return to_py(total);
    }, py::arg("family"), py::arg("n"));

    m.def("diagram_dot", [](const std::string& family, int n) { return export_dot(build_diagram(make_spec(family, n))); },
          py::arg("family"), py::arg("n"));

    m.def("verify", [](const std::vector<int>& ids, bool quick) {
        VerifyOptions opts;
        opts.quick = quick;
        std::vector<CheckResult> results;
        for (int id : ids) results.push_back(run_check(id, opts));
        return from_json(report_json(results, quick));
    }, py::arg("ids"), py::arg("quick") = true);
}
