// Copyright 2026 The polignac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polignac/admissible.hpp"
#include "polignac/cli.hpp"
#include "polignac/errors.hpp"
#include "polignac/oracle.hpp"
#include "polignac/packing.hpp"
#include "polignac/sieve.hpp"

namespace py = pybind11;
using namespace polignac;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  static auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(r)), to_py(denominator(r)));
}

std::vector<Offset> to_list(std::span<const Offset> v) { return {v.begin(), v.end()}; }

GehStrategy parse_strategy(const std::string& s) {
  if (s == "paper-literal" || s == "paper_literal") return GehStrategy::paper_literal;
  if (s == "extended") return GehStrategy::extended;
  throw InputError("unknown strategy '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Admissible prime patterns, difference-set packings and density bounds";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("primes_up_to", [](std::uint64_t limit) { return primes_up_to(limit).primes; },
        py::arg("limit"));
  m.def("primorial", [](std::int64_t k) { return to_py(primorial(k)); }, py::arg("k"));
  m.def("prime_pair_census",
        [](std::uint64_t x, std::uint64_t dmax) { return prime_pair_census(x, dmax).counts; },
        py::arg("x"), py::arg("dmax"));

  m.def("normalize", [](const std::vector<Offset>& raw) { return to_list(normalize(raw).offsets()); },
        py::arg("offsets"));
  m.def("is_admissible", [](const std::vector<Offset>& raw) { return is_admissible(normalize(raw)); },
        py::arg("offsets"), "Admissibility of the pattern after normalization.");
  m.def("difference_set",
        [](const std::vector<Offset>& raw) { return to_list(difference_set(normalize(raw)).values()); },
        py::arg("offsets"));
  m.def("regular_admissible",
        [](std::int64_t k, std::int64_t n) { return to_list(regular_admissible(k, n).offsets()); },
        py::arg("k"), py::arg("n"));

  m.def("lower_bound_density", [](std::int64_t k) { return to_py(lower_bound_density(k).value); },
        py::arg("k"));
  m.def("trivial_upper_bound_density",
        [](std::int64_t k) { return to_py(trivial_upper_bound_density(k).value); }, py::arg("k"));
  m.def("regular_overlap", &regular_overlap, py::arg("k"), py::arg("n"), py::arg("m"));
  m.def("k3_finite_upper_bound", &k3_finite_upper_bound, py::arg("x"));

  py::class_<PackingMember>(m, "PackingMember")
      .def_readonly("label", &PackingMember::label)
      .def_readonly("index", &PackingMember::index)
      .def_property_readonly("witness", [](const PackingMember& p) { return to_list(p.witness.offsets()); })
      .def_property_readonly("values", [](const PackingMember& p) { return to_list(p.diffs.values()); })
      .def("__repr__", [](const PackingMember& p) {
        return "<PackingMember " + p.label + " " + p.diffs.to_string() + ">";
      });

  py::class_<PackingCertificate>(m, "PackingCertificate")
      .def_readonly("k", &PackingCertificate::k)
      .def_readonly("x", &PackingCertificate::x)
      .def_readonly("count", &PackingCertificate::count)
      .def_readonly("raw_count", &PackingCertificate::raw_count)
      .def_readonly("members", &PackingCertificate::members)
      .def_readonly("covered", &PackingCertificate::covered)
      .def_property_readonly("indices", &PackingCertificate::indices)
      .def_property_readonly("density", [](const PackingCertificate& c) { return to_py(c.density); })
      .def("validate", &validate_certificate)
      .def("__len__", [](const PackingCertificate& c) { return c.count; });

  m.def("greedy_regular_packing",
        [](std::int64_t k, std::int64_t x) { return greedy_regular_packing(k, x); }, py::arg("k"),
        py::arg("x"));
  m.def("geh_family",
        [](std::int64_t x, const std::string& strategy) { return geh_family(x, parse_strategy(strategy)); },
        py::arg("x"), py::arg("strategy") = "paper-literal");
  m.def("enumerate_admissible_diffsets",
        [](std::int64_t x) {
          std::vector<std::vector<Offset>> out;
          for (const auto& d : enumerate_admissible_diffsets(3, x).candidates) out.push_back(to_list(d.values()));
          return out;
        },
        py::arg("x"), "All distinct difference sets of admissible 3-tuples inside [1, x].");
  m.def("max_disjoint_packing",
        [](std::int64_t x, bool lexicographic, std::size_t max_candidates) {
          OracleOptions options{max_candidates,
                                lexicographic ? TieBreak::lexicographic : TieBreak::search_order};
          return max_disjoint_packing(enumerate_admissible_diffsets(3, x), options);
        },
        py::arg("x"), py::arg("lexicographic") = false, py::arg("max_candidates") = 5000);

  m.def("run_command",
        [](const std::vector<std::string>& args) {
          const auto r = cli::run_command(args);
          return py::make_tuple(r.exit_code, r.out, r.err);
        },
        py::arg("args"), "Run a CLI invocation; returns (exit_code, stdout, stderr).");
}
