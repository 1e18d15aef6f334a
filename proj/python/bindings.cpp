#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpb/api.hpp"
#include "bpb/counterexample.hpp"

namespace py = pybind11;

namespace {

// Documents cross the boundary as JSON text; the json module does the rest.
bpb::Json to_json(const py::object& obj) {
  const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return bpb::parse_json_text(text, "<python>");
}

py::object from_json(const bpb::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

bpb::ArithmeticMode mode_for(const std::optional<std::string>& mode, const bpb::Json* doc = nullptr) {
  return bpb::api::resolve_mode(mode, doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact corrections for positive operators from L_inf to L_1";

  py::register_exception<bpb::Error>(m, "BpbError", PyExc_ValueError);

  m.def(
      "correct",
      [](const py::object& instance, std::optional<std::string> eps, std::optional<std::string> mode, bool normalize,
         bool c0, std::size_t exact_cap) {
        const bpb::Json doc = to_json(instance);
        bpb::api::CorrectRequest req;
        req.eps = std::move(eps);
        req.mode = mode_for(mode, &doc);
        req.normalize = normalize;
        req.c0 = c0;
        req.exact_cap = exact_cap;
        return from_json(bpb::api::correct(doc, req));
      },
      py::arg("instance"), py::arg("eps") = py::none(), py::arg("mode") = py::none(), py::arg("normalize") = false,
      py::arg("c0") = false, py::arg("exact_cap") = bpb::kDefaultExactCap);

  m.def(
      "lemma",
      [](const py::object& instance, std::optional<std::string> eps, std::optional<std::string> mode) {
        const bpb::Json doc = to_json(instance);
        return from_json(bpb::api::lemma(doc, eps, mode_for(mode, &doc)));
      },
      py::arg("instance"), py::arg("eps") = py::none(), py::arg("mode") = py::none());

  m.def(
      "norm",
      [](const py::object& op, std::optional<std::string> mode, bool exact, std::size_t cap) {
        const bpb::Json doc = to_json(op);
        return from_json(bpb::api::norm(doc, mode_for(mode, &doc), exact, cap));
      },
      py::arg("op"), py::arg("mode") = py::none(), py::arg("exact") = false,
      py::arg("exact_cap") = bpb::kDefaultExactCap);

  m.def(
      "generate",
      [](std::uint64_t seed, std::size_t n, std::size_t m, const std::string& eps, const std::string& profile,
         const std::string& kind, std::optional<std::string> mode) {
        return from_json(bpb::api::generate(seed, n, m, eps, bpb::parse_profile(profile), bpb::parse_kind(kind),
                                            mode_for(mode)));
      },
      py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("eps") = "1/10", py::arg("profile") = "norming-perturbed",
      py::arg("kind") = "linfty", py::arg("mode") = py::none());

  m.def(
      "generate_lemma",
      [](std::uint64_t seed, std::size_t dim, std::optional<std::string> eps, std::optional<std::string> mode) {
        return from_json(bpb::api::generate_lemma(seed, dim, eps, mode_for(mode)));
      },
      py::arg("seed"), py::arg("dim"), py::arg("eps") = py::none(), py::arg("mode") = py::none());

  m.def(
      "sweep",
      [](const py::object& config, std::optional<std::string> mode) {
        const bpb::Json doc = to_json(config);
        bpb::SweepConfig cfg = bpb::parse_sweep_config(doc);
        cfg.mode = mode_for(mode, &doc);
        const bpb::SweepResult result = bpb::run_sweep(cfg);
        return py::make_tuple(bpb::sweep_csv(result, cfg.record_runtime), from_json(bpb::sweep_summary(result)));
      },
      py::arg("config"), py::arg("mode") = py::none(), "Returns (csv_text, summary).");

  m.def(
      "counterexample",
      [](std::size_t n_max, std::size_t k_max, std::size_t convexity_trials, std::uint64_t seed) {
        bpb::api::CounterexampleRequest req;
        req.n_max = n_max;
        req.k_max = k_max;
        req.brute_force_max = std::min<std::size_t>(n_max, 12);
        req.convexity_trials = convexity_trials;
        req.seed = seed;
        return from_json(bpb::api::counterexample(req));
      },
      py::arg("n_max") = 12, py::arg("k_max") = 30, py::arg("convexity_trials") = 0, py::arg("seed") = 0);

  m.def("tnorm", [](std::vector<double> x) { return bpb::counterexample::tnorm({std::move(x)}); });
  m.def("identity_norm", &bpb::counterexample::identity_norm, py::arg("n"));
  m.def("attainment_gap", &bpb::counterexample::attainment_gap, py::arg("k"));
}
