// Copyright 2026 The Authors.
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

#include <optional>
#include <string>
#include <vector>

#include "subsec/bounds.hpp"
#include "subsec/errors.hpp"
#include "subsec/harness.hpp"
#include "subsec/instance.hpp"
#include "subsec/io.hpp"
#include "subsec/multilinear.hpp"
#include "subsec/offline.hpp"
#include "subsec/online.hpp"
#include "subsec/properties.hpp"
#include "subsec/rng.hpp"

namespace py = pybind11;
using namespace subsec;

namespace {

CheckMode parse_mode(const std::string& mode) {
  if (mode == "exhaustive") return CheckMode::kExhaustive;
  if (mode == "randomized") return CheckMode::kRandomized;
  throw InputError("mode must be 'exhaustive' or 'randomized'");
}

py::dict report_to_dict(const PropertyReport& report) {
  py::dict out;
  out["passed"] = report.passed;
  out["trials_checked"] = report.trials_checked;
  if (report.witness) {
    py::dict w;
    w["s"] = report.witness->s;
    w["t"] = report.witness->t;
    w["x"] = report.witness->x;
    w["lhs"] = report.witness->lhs;
    w["rhs"] = report.witness->rhs;
    out["witness"] = w;
  } else {
    out["witness"] = py::none();
  }
  return out;
}

py::dict bound_to_dict(const BoundReport& b) {
  py::dict out;
  out["kind"] = b.kind;
  out["k"] = b.k;
  out["alpha"] = b.alpha;
  out["capacity_ratio"] = b.capacity_ratio;
  out["column_sparsity"] = b.column_sparsity;
  out["known_parameters"] = b.known_parameters;
  out["value"] = b.value;
  out["caveat"] = b.caveat;
  return out;
}

PackingPolytope make_polytope(const std::vector<std::vector<double>>& a,
                              const std::vector<double>& b, double scale,
                              std::optional<std::vector<int>> support) {
  std::vector<int> sup;
  if (support) {
    sup = *support;
  } else {
    int n = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (int j = 0; j < n; ++j) sup.push_back(j);
  }
  return PackingPolytope::create(a, b, scale, std::move(sup));
}

AlgoConfig make_algo_config(const std::string& solver,
                            std::optional<double> p, bool known,
                            int cg_steps, int cg_samples,
                            const std::string& cg_gradient, bool exhaustive) {
  AlgoConfig config;
  config.solver = solver;
  if (p) config.p = *p;
  config.known_parameters = known;
  config.cg_steps = cg_steps;
  config.cg_samples = cg_samples;
  config.cg_gradient = cg_gradient;
  config.exhaustive = exhaustive;
  return config;
}

}  // namespace

PYBIND11_MODULE(_subsec, m) {
  m.doc() = "Online monotone submodular maximization in random arrival "
            "order: oracles, offline solvers, online algorithms, bounds, "
            "and the Monte Carlo harness.";

  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<ValueOracle>(m, "ValueOracle")
      .def_static("coverage", &ValueOracle::coverage, py::arg("covers"),
                  py::arg("element_weights"))
      .def_static("modular", &ValueOracle::modular, py::arg("weights"))
      .def_static("concave_sqrt", &ValueOracle::concave_sqrt,
                  py::arg("weights"))
      .def_static("concave_cap", &ValueOracle::concave_cap,
                  py::arg("weights"), py::arg("cap"))
      .def_static("edge_valued", &ValueOracle::edge_valued, py::arg("inner"))
      .def("eval",
           [](const ValueOracle& o, ItemSet s) { return o.eval(s); },
           py::arg("items"))
      .def("marginal",
           [](const ValueOracle& o, Item j, ItemSet s) {
             return o.marginal(j, s);
           },
           py::arg("item"), py::arg("base"))
      .def_property_readonly("n", &ValueOracle::ground_size)
      .def_property_readonly("eval_count", &ValueOracle::eval_count)
      .def_property_readonly("family", [](const ValueOracle& o) {
        return family_name(o.family());
      });

  m.def("gen_oracle", &gen_oracle, py::arg("family"), py::arg("n"),
        py::arg("seed"));

  m.def(
      "check_submodular",
      [](const ValueOracle& o, const std::string& mode, long trials,
         std::uint64_t seed) {
        return report_to_dict(check_submodular(o, parse_mode(mode), trials,
                                               seed));
      },
      py::arg("oracle"), py::arg("mode") = "randomized",
      py::arg("trials") = 10000, py::arg("seed") = 0);
  m.def(
      "check_monotone",
      [](const ValueOracle& o, const std::string& mode, long trials,
         std::uint64_t seed) {
        return report_to_dict(check_monotone(o, parse_mode(mode), trials,
                                             seed));
      },
      py::arg("oracle"), py::arg("mode") = "randomized",
      py::arg("trials") = 10000, py::arg("seed") = 0);

  m.def(
      "multilinear_exact",
      [](const ValueOracle& o, std::vector<double> x) {
        return multilinear_exact(o, FractionalPoint(std::move(x)));
      },
      py::arg("oracle"), py::arg("x"));
  m.def(
      "multilinear_mc",
      [](const ValueOracle& o, std::vector<double> x, long samples,
         std::uint64_t seed) {
        McEstimate est =
            multilinear_mc(o, FractionalPoint(std::move(x)), samples, seed);
        return py::make_tuple(est.estimate, est.stderr_);
      },
      py::arg("oracle"), py::arg("x"), py::arg("samples") = 10000,
      py::arg("seed") = 0);

  m.def("brute_force_cardinality", &brute_force_cardinality,
        py::arg("oracle"), py::arg("items"), py::arg("k"));
  m.def("greedy_cardinality", &greedy_cardinality, py::arg("oracle"),
        py::arg("items"), py::arg("k"));
  m.def(
      "greedy_stage_guarantee_check",
      [](const ValueOracle& o, ItemSet l, int k, int k_prime) {
        StageGuarantee sg = greedy_stage_guarantee_check(o, l, k, k_prime);
        py::dict out;
        out["greedy_value"] = sg.greedy_value;
        out["opt_kprime_value"] = sg.opt_kprime_value;
        out["bound"] = sg.bound;
        out["holds"] = sg.holds;
        return out;
      },
      py::arg("oracle"), py::arg("items"), py::arg("k"), py::arg("k_prime"));

  m.def(
      "lp_maximize",
      [](std::vector<double> c, std::vector<std::vector<double>> a,
         std::vector<double> b, double scale,
         std::optional<std::vector<int>> support) {
        return lp_maximize(c, make_polytope(a, b, scale, std::move(support)))
            .x;
      },
      py::arg("c"), py::arg("a"), py::arg("b"), py::arg("scale") = 1.0,
      py::arg("support") = py::none());
  m.def(
      "continuous_greedy",
      [](const ValueOracle& o, std::vector<std::vector<double>> a,
         std::vector<double> b, double scale,
         std::optional<std::vector<int>> support, int steps, int mc_samples,
         const std::string& gradient, std::uint64_t seed) {
        ContinuousGreedyConfig config;
        config.steps = steps;
        config.mc_samples = mc_samples;
        config.seed = seed;
        if (gradient == "auto") {
          config.gradient = GradientMode::kAuto;
        } else if (gradient == "closed-form") {
          config.gradient = GradientMode::kClosedForm;
        } else if (gradient == "enum") {
          config.gradient = GradientMode::kEnum;
        } else if (gradient == "monte-carlo") {
          config.gradient = GradientMode::kMonteCarlo;
        } else {
          throw InputError("unknown gradient mode: " + gradient);
        }
        return continuous_greedy(o,
                                 make_polytope(a, b, scale,
                                               std::move(support)),
                                 config)
            .x;
      },
      py::arg("oracle"), py::arg("a"), py::arg("b"), py::arg("scale") = 1.0,
      py::arg("support") = py::none(), py::arg("steps") = 100,
      py::arg("mc_samples") = 1000, py::arg("gradient") = "auto",
      py::arg("seed") = 0);

  py::class_<Instance>(m, "Instance")
      .def_static(
          "from_json",
          [](const std::string& text) {
            return instance_from_json(nlohmann::ordered_json::parse(text));
          },
          py::arg("text"))
      .def_static("load", &load_instance, py::arg("path"))
      .def("save",
           [](const Instance& instance, const std::string& path) {
             save_instance(instance, path);
           },
           py::arg("path"))
      .def("to_json",
           [](const Instance& instance) {
             return instance_to_json(instance).dump(2);
           })
      .def_property_readonly("variant",
                             [](const Instance& instance) {
                               return variant_name(instance.variant);
                             })
      .def_property_readonly("n", &Instance::ground_size);

  m.def(
      "gen_instance",
      [](const std::string& variant, int n, const std::string& family,
         std::uint64_t seed, int k, int r_size, double edge_density,
         int m_rows, double capacity_ratio, int column_sparsity,
         bool declare_parameters) {
        GenParams params;
        params.variant = parse_variant(variant);
        params.n = n;
        params.family = family;
        params.seed = seed;
        params.k = k;
        params.r_size = r_size;
        params.edge_density = edge_density;
        params.m = m_rows;
        params.capacity_ratio = capacity_ratio;
        params.column_sparsity = column_sparsity;
        params.declare_parameters = declare_parameters;
        return gen_instance(params);
      },
      py::arg("variant"), py::arg("n"), py::arg("family") = "coverage",
      py::arg("seed") = 0, py::arg("k") = 2, py::arg("r_size") = 4,
      py::arg("edge_density") = 0.7, py::arg("m") = 5,
      py::arg("capacity_ratio") = 2.0, py::arg("column_sparsity") = 2,
      py::arg("declare_parameters") = false);

  m.def(
      "run_json",
      [](const Instance& instance, const std::string& solver,
         std::optional<double> p, bool known, int cg_steps, int cg_samples,
         const std::string& cg_gradient, std::uint64_t seed) {
        AlgoConfig config = make_algo_config(solver, p, known, cg_steps,
                                             cg_samples, cg_gradient, false);
        int n = instance.ground_size();
        ArrivalOrder order =
            ArrivalOrder::sample(n, derive_seed(seed, 0x6f726472ULL, 0));
        RunRecord record;
        switch (instance.variant) {
          case Variant::kCardinality: {
            const CardinalityInstance& ci = instance.cardinality();
            CardinalitySolver cs;
            cs.k = ci.k;
            cs.kind = config.solver == "brute-force"
                          ? CardinalitySolver::Kind::kBruteForce
                          : CardinalitySolver::Kind::kGreedy;
            record = run_k_secretary(ci.oracle, n, ci.k, cs,
                                     config.resolved_p(instance.variant),
                                     order);
            break;
          }
          case Variant::kMatching: {
            const MatchingInstance& mi = instance.matching();
            MatchingSolver ms;
            ms.kind = config.solver == "brute-force"
                          ? MatchingSolver::Kind::kBruteForce
                          : MatchingSolver::Kind::kGreedy;
            record = run_matching(mi.oracle, mi.l_size, mi.r_size, mi.edges,
                                  ms, config.resolved_p(instance.variant),
                                  order);
            break;
          }
          case Variant::kPacking: {
            const PackingInstance& pi = instance.packing().core;
            std::uint64_t run_seed = derive_seed(seed, 0x72756e73ULL, 0);
            ContinuousGreedyConfig cg = config.cg_config(run_seed);
            record = config.known_parameters
                         ? run_packing_known(pi, cg, order, run_seed)
                         : run_packing(pi, cg, order, run_seed);
            break;
          }
        }
        return run_record_to_json(record).dump();
      },
      py::arg("instance"), py::arg("solver") = "greedy",
      py::arg("p") = py::none(), py::arg("known") = false,
      py::arg("cg_steps") = 100, py::arg("cg_samples") = 1000,
      py::arg("cg_gradient") = "auto", py::arg("seed") = 0);

  m.def(
      "estimate_json",
      [](const Instance& instance, long trials, std::uint64_t seed,
         const std::string& solver, std::optional<double> p, bool known,
         int cg_steps, int cg_samples, const std::string& cg_gradient,
         bool exhaustive) {
        AlgoConfig config = make_algo_config(solver, p, known, cg_steps,
                                             cg_samples, cg_gradient,
                                             exhaustive);
        EstimateResult result = estimate_ratio(instance, config, trials,
                                               seed);
        Report report = make_report(instance, config, trials, seed, result);
        return report_to_json(report).dump();
      },
      py::arg("instance"), py::arg("trials") = 1000, py::arg("seed") = 0,
      py::arg("solver") = "greedy", py::arg("p") = py::none(),
      py::arg("known") = false, py::arg("cg_steps") = 100,
      py::arg("cg_samples") = 1000, py::arg("cg_gradient") = "auto",
      py::arg("exhaustive") = false);

  m.def("bound_k_secretary",
        [](int k, double alpha) {
          return bound_to_dict(bound_k_secretary(k, alpha));
        },
        py::arg("k"), py::arg("alpha") = 1.0);
  m.def("bound_greedy_k_secretary",
        [](int k) { return bound_to_dict(bound_greedy_k_secretary(k)); },
        py::arg("k"));
  m.def("bound_matching",
        [](double alpha) { return bound_to_dict(bound_matching(alpha)); },
        py::arg("alpha") = 1.0);
  m.def("bound_packing",
        [](double alpha, double capacity_ratio, int column_sparsity,
           bool known) {
          return bound_to_dict(
              bound_packing(alpha, capacity_ratio, column_sparsity, known));
        },
        py::arg("alpha"), py::arg("capacity_ratio"),
        py::arg("column_sparsity"), py::arg("known") = false);
  m.def("greedy_stage_alpha", &greedy_stage_alpha, py::arg("l"), py::arg("n"),
        py::arg("k"));
  m.def("k_secretary_n_adjustment", &k_secretary_n_adjustment, py::arg("k"),
        py::arg("n"));
  m.def("packing_sample_fraction", &packing_sample_fraction,
        py::arg("capacity_ratio"), py::arg("column_sparsity"));

  m.attr("__version__") = kCodeVersion;
}
