// Copyright 2026 The Mutspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "mutspace/behavior.h"
#include "mutspace/cli.h"
#include "mutspace/diffcore.h"
#include "mutspace/errors.h"
#include "mutspace/lattice.h"
#include "mutspace/mbfl.h"
#include "mutspace/mutlang/interpreter.h"
#include "mutspace/mutlang/mutator.h"
#include "mutspace/mutlang/parser.h"
#include "mutspace/progspace.h"
#include "mutspace/subsumption.h"

namespace py = pybind11;
using namespace mutspace;

namespace {

std::vector<int> ToList(const BitVector& bits) {
  return std::vector<int>(bits.begin(), bits.end());
}

KillMatrix KillMatrixFromColumns(const std::vector<std::string>& tests,
                                 const std::vector<std::string>& mutants,
                                 const std::vector<std::vector<int>>& columns) {
  std::vector<BitVector> bits;
  for (const auto& column : columns) {
    BitVector v;
    for (int b : column) {
      if (b != 0 && b != 1) throw ArgumentError("kill bits must be 0 or 1");
      v.push_back(static_cast<std::uint8_t>(b));
    }
    bits.push_back(std::move(v));
  }
  return KillMatrix(TestVector(tests), mutants, std::move(bits));
}

py::tuple RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Difference-based mutation analysis";

  py::register_exception<LookupError>(m, "UnknownIdError", PyExc_LookupError);
  py::register_exception<RoleError>(m, "RoleError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<mutlang::SyntaxError>(m, "ProgramSyntaxError", PyExc_ValueError);

  py::class_<Differentiator>(m, "Differentiator")
      .def(py::init([](const std::string& name, double epsilon) {
             return Differentiator::FromName(name, epsilon);
           }),
           py::arg("policy") = "exact", py::arg("epsilon") = 0.0)
      .def_property_readonly("id", &Differentiator::id);

  py::class_<BehaviorMatrix>(m, "BehaviorMatrix")
      .def_static("from_json", [](const std::string& text) {
        return BehaviorMatrixFromJson(text);
      })
      .def("to_json", &BehaviorMatrixToJson)
      .def_property_readonly("tests", [](const BehaviorMatrix& bm) {
        return bm.tests().ids();
      })
      .def_property_readonly("programs", [](const BehaviorMatrix& bm) {
        std::vector<std::string> ids;
        for (const auto& info : bm.programs()) ids.push_back(info.id);
        return ids;
      })
      .def_property_readonly("spec", &BehaviorMatrix::SpecId)
      .def_property_readonly("original", &BehaviorMatrix::OriginalId)
      .def_property_readonly("mutants", &BehaviorMatrix::MutantIds)
      .def("output", [](const BehaviorMatrix& bm, const std::string& program,
                        const std::string& test) {
        return bm.Cell(program, test).output;
      })
      .def("status", [](const BehaviorMatrix& bm, const std::string& program,
                        const std::string& test) {
        return std::string(ToString(bm.Cell(program, test).status));
      });

  m.def(
      "d_vector",
      [](const BehaviorMatrix& bm, const std::string& px, const std::string& py,
         const Differentiator& d, std::optional<std::vector<std::string>> tests) {
        const TestVector tv = tests ? TestVector(*tests) : bm.tests();
        return ToList(MakeDVector(d, tv, px, py, bm).bits);
      },
      py::arg("matrix"), py::arg("left"), py::arg("right"),
      py::arg("differentiator") = Differentiator(),
      py::arg("tests") = py::none());

  m.def(
      "coincidence_counterexample",
      [](const BehaviorMatrix& bm, const std::string& origin,
         const std::string& px, const std::string& py,
         const Differentiator& d, std::optional<std::vector<std::string>> tests) {
        const TestVector tv = tests ? TestVector(*tests) : bm.tests();
        return CoincidenceCounterexample(ProgramSpace(tv, origin, d, bm), px, py);
      },
      py::arg("matrix"), py::arg("origin"), py::arg("left"), py::arg("right"),
      py::arg("differentiator") = Differentiator(),
      py::arg("tests") = py::none());

  py::class_<KillMatrix>(m, "KillMatrix")
      .def(py::init(&KillMatrixFromColumns), py::arg("tests"),
           py::arg("mutants"), py::arg("columns"))
      .def_static("from_csv", [](const std::string& text) {
        return KillMatrixFromCsv(text);
      })
      .def_static(
          "from_behavior",
          [](const BehaviorMatrix& bm, const Differentiator& d) {
            const auto original = bm.OriginalId();
            if (!original) throw RoleError("behavior matrix has no original");
            return MakeKillMatrix(ProgramSpace(bm.tests(), *original, d, bm),
                                  bm.MutantIds());
          },
          py::arg("matrix"), py::arg("differentiator") = Differentiator())
      .def("to_csv", &KillMatrixToCsv)
      .def_property_readonly("tests", [](const KillMatrix& km) {
        return km.tests().ids();
      })
      .def_property_readonly("mutants", &KillMatrix::mutants)
      .def("column", [](const KillMatrix& km, const std::string& mutant) {
        return ToList(km.Column(mutant));
      })
      .def("subsumes", &DynamicallySubsumes, py::arg("mx"), py::arg("my"));

  m.def("minimal_mutant_set", [](const KillMatrix& km) {
    const MinimalSetResult result = MinimalMutantSet(km);
    py::dict out;
    out["minimal"] = result.minimal;
    out["live"] = result.live;
    out["reduction_ratio"] = result.reduction_ratio;
    return out;
  });

  m.def("dmsg_edges", [](const KillMatrix& km) {
    const Dmsg dmsg = BuildDmsg(km);
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> edges;
    for (const auto& [from, to] : dmsg.edges) {
      edges.emplace_back(dmsg.classes[from].members, dmsg.classes[to].members);
    }
    return edges;
  });
  m.def("dmsg_dot", [](const KillMatrix& km) { return DmsgToDot(BuildDmsg(km)); });

  m.def("max_minimal_size", [](std::size_t n) {
    return py::int_(py::str(MaxMinimalSize(n).str()));
  });

  m.def(
      "pdl_shape",
      [](std::size_t n) {
        const Pdl pdl = BuildPdl(n);
        return py::make_tuple(pdl.node_count(), pdl.edge_count());
      },
      py::arg("n"));
  m.def("pdl_dot", [](std::size_t n) { return PdlToDot(BuildPdl(n)); });

  m.def(
      "mbfl_report",
      [](const BehaviorMatrix& bm, const std::string& method,
         const std::string& metric, const Differentiator& d) {
        Method chosen;
        if (method == "fix") {
          chosen = Method::Fix();
        } else if (method == "flt") {
          chosen = Method::Flt(ParseMetric(metric));
        } else {
          throw ArgumentError("unknown method '" + method + "'");
        }
        return ReportToJson(RankStatements(
            FaultLocalizationInput::FromMatrix(bm, d), chosen));
      },
      py::arg("matrix"), py::arg("method") = "fix",
      py::arg("metric") = "ochiai", py::arg("differentiator") = Differentiator());

  m.def(
      "mutate",
      [](const std::string& source, const std::string& operators) {
        py::list out;
        for (const auto& mutant : mutlang::MutateAll(
                 mutlang::Parse(source), mutlang::ParseOperatorList(operators))) {
          py::dict entry;
          entry["id"] = mutant.descriptor.id;
          entry["operator"] = std::string(mutlang::ToString(mutant.descriptor.op));
          entry["statement"] = mutlang::StatementLabel(mutant.descriptor.statement);
          entry["original"] = mutant.descriptor.original;
          entry["replacement"] = mutant.descriptor.replacement;
          entry["source"] = mutant.program.source;
          out.append(std::move(entry));
        }
        return out;
      },
      py::arg("source"), py::arg("operators") = "");

  m.def(
      "run",
      [](const std::string& source, const std::string& tests_json,
         std::optional<std::string> expected_json, bool tracing,
         std::uint64_t budget) {
        const mutlang::Program program = mutlang::Parse(source);
        std::optional<std::map<std::string, std::string>> expected;
        if (expected_json) expected = mutlang::ParseExpectedOutputs(*expected_json);
        return mutlang::BuildBehaviorMatrix(
            program, mutlang::MutateAll(program),
            mutlang::ParseTestSuite(tests_json), {budget, tracing}, expected);
      },
      py::arg("source"), py::arg("tests"), py::arg("expected") = py::none(),
      py::arg("tracing") = false,
      py::arg("budget") = mutlang::kDefaultStepBudget);

  m.def("cli", &RunCli, py::arg("args"),
        "Runs a command line; returns (exit code, stdout, stderr).");
}
