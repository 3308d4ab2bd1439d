#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ainf/appendix_suite.hpp"
#include "ainf/cli.hpp"
#include "ainf/floer.hpp"
#include "ainf/signs.hpp"
#include "ainf/spec_io.hpp"

namespace py = pybind11;
using namespace ainf;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
py::tuple run(const std::string& command, const std::vector<std::string>& specs, std::optional<std::uint64_t> seed,
              std::optional<int> trials, std::optional<std::string> cutoff, std::vector<std::string> mutate) {
  CliFlags flags;
  flags.seed = seed;
  flags.trials = trials;
  if (cutoff) flags.cutoff = parse_scalar(*cutoff);
  flags.mutations = std::move(mutate);
  CommandResult r;
  {
    py::gil_scoped_release release;
    r = run_command(command, specs, flags);
  }
  return py::make_tuple(r.exit_code, r.report.is_null() ? std::string() : r.report.dump(), r.text);
}

int hf(const std::vector<std::string>& specs, const std::string& algebra, std::optional<std::string> cochain) {
  std::vector<Json> docs;
  for (const auto& p : specs) docs.push_back(read_spec_json(p));
  const auto doc = parse_spec(merge_spec_json(docs));
  const auto& alg = doc.algebra(algebra);
  return hf_dimension(alg, cochain ? doc.cochain(*cochain).element : AlgElement{});
}

}  // namespace

PYBIND11_MODULE(_ainfkit, m) {
  m.doc() = "Exact checks for filtered A-infinity algebras";
  m.attr("SPEC_VERSION") = kSpecVersion;
  m.def("commands", &cli_commands);
  m.def("run", &run, py::arg("command"), py::arg("specs"), py::arg("seed") = py::none(),
        py::arg("trials") = py::none(), py::arg("cutoff") = py::none(), py::arg("mutate") = std::vector<std::string>{});
  m.def("hf_dimension", &hf, py::arg("specs"), py::arg("algebra"), py::arg("cochain") = py::none());
  m.def("gamma_ledger_holds",
        [](const std::vector<Degree>& degs_b, Degree a, Degree b, int n1, int n2, int i) {
          return gamma_ledger_check(degs_b, a, b, n1, n2, static_cast<int>(degs_b.size()), i).holds;
        },
        py::arg("degs_b"), py::arg("deg_a"), py::arg("deg_b"), py::arg("n1"), py::arg("n2"), py::arg("i"));
  m.def("appendix_groups", &appendix_groups);

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
}
