#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abducer/abduction.hpp"
#include "abducer/complexity.hpp"
#include "abducer/dynamics.hpp"
#include "abducer/errors.hpp"
#include "abducer/formula.hpp"
#include "abducer/model.hpp"
#include "abducer/model_json.hpp"
#include "abducer/propabduction.hpp"
#include "abducer/semantics.hpp"

namespace py = pybind11;
using namespace abducer;

namespace {

Backend backend_arg(const std::string& name) { return backend_from_name(name); }

std::vector<Formula> parse_many(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Plausibility-model abduction toolkit";

  py::register_exception<Error>(m, "AbducerError");

  py::class_<Formula>(m, "Formula")
      .def_static("parse", &parse)
      .def("__str__", &print)
      .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("desugar", &desugar)
      .def("atoms", &atoms)
      .def("is_propositional", &is_propositional);

  m.def("parse", &parse);
  m.def("atom", &atom);
  m.def("f_not", &f_not);
  m.def("f_and", &f_and);
  m.def("f_or", &f_or);
  m.def("implies", &implies);
  m.def("knowledge", &knowledge);
  m.def("belief", &belief);

  py::class_<PlausibilityModel>(m, "Model")
      .def_static("from_json", &model_from_json, py::arg("text"), py::arg("force") = false)
      .def("to_json", &model_to_json)
      .def("validate",
           [](const PlausibilityModel& mdl) {
             std::vector<std::string> out;
             for (const auto& v : validate(mdl)) {
               std::string s = v.property;
               for (const auto& w : v.witness) s += " " + w;
               out.push_back(s);
             }
             return out;
           })
      .def_property_readonly("world_ids",
                             [](const PlausibilityModel& mdl) {
                               std::vector<std::string> ids;
                               for (const auto& w : mdl.worlds) ids.push_back(w.id);
                               return ids;
                             })
      .def("__eq__",
           [](const PlausibilityModel& a, const PlausibilityModel& b) { return a == b; });

  m.def("eval", [](const PlausibilityModel& mdl, const std::string& w,
                   const std::string& f) { return eval(mdl, w, parse(f)); });
  m.def("valid_in_model", [](const PlausibilityModel& mdl, const std::string& f) {
    return valid_in_model(mdl, parse(f));
  });
  m.def("knows", [](const PlausibilityModel& mdl, const std::string& w,
                    const std::string& f) { return knows(mdl, w, parse(f)); });
  m.def("believes", [](const PlausibilityModel& mdl, const std::string& w,
                       const std::string& f) { return believes(mdl, w, parse(f)); });

  m.def("observe", [](const PlausibilityModel& mdl, const std::string& f) {
    return observe(mdl, parse(f));
  });
  m.def("conjecture", [](const PlausibilityModel& mdl, const std::string& f) {
    return conjecture(mdl, parse(f));
  });

  py::class_<AbductiveProblem>(m, "AbductiveProblem")
      .def_readonly("point", &AbductiveProblem::point)
      .def_readonly("observed_model", &AbductiveProblem::observed_model)
      .def_property_readonly("surprise",
                             [](const AbductiveProblem& p) { return print(p.surprise); })
      .def_property_readonly("kind", [](const AbductiveProblem& p) {
        return p.kind == ProblemKind::Novel ? "novel" : "anomalous";
      });

  m.def(
      "detect",
      [](const PlausibilityModel& mdl, const std::string& w,
         const std::string& phi) -> std::optional<AbductiveProblem> {
        return detect(mdl, w, parse(phi));
      },
      py::arg("model"), py::arg("world"), py::arg("phi"));
  m.def("is_solution", [](const AbductiveProblem& p, const std::string& psi) {
    return is_solution(p, parse(psi));
  });
  m.def(
      "generate_candidates",
      [](const AbductiveProblem& p, std::size_t max_literals) {
        std::vector<std::string> out;
        for (const Formula& f : generate_candidates(p, max_literals)) out.push_back(print(f));
        return out;
      },
      py::arg("problem"), py::arg("max_literals") = 1);
  m.def(
      "rank",
      [](const AbductiveProblem& p, const std::vector<std::string>& candidates,
         const std::string& backend, bool strict) {
        RankResult r = rank(p, parse_many(candidates), backend_arg(backend), strict);
        py::list ranked;
        for (const CandidateSolution& c : r.ranked)
          ranked.append(py::dict(py::arg("hypothesis") = print(c.hypothesis),
                                 py::arg("score_bits") = *c.score,
                                 py::arg("consistent_analog") = c.consistent_analog,
                                 py::arg("explanatory_analog") = c.explanatory_analog));
        py::list rejected;
        for (const Rejection& rej : r.rejected)
          rejected.append(py::dict(py::arg("hypothesis") = print(rej.hypothesis),
                                   py::arg("reason") = rej.reason));
        return py::make_tuple(ranked, rejected);
      },
      py::arg("problem"), py::arg("candidates"), py::arg("backend") = "lz76",
      py::arg("strict") = true);
  m.def("integrate", [](const AbductiveProblem& p, const std::string& chosen) {
    IntegrationResult r = integrate(p, parse(chosen));
    return py::make_tuple(r.model, r.belief_established);
  });

  m.def("entails", [](const std::vector<std::string>& theta, const std::string& phi) {
    return entails(parse_many(theta), parse(phi));
  });
  m.def("classify_problem",
        [](const std::vector<std::string>& theta, const std::string& phi) {
          switch (classify_problem(parse_many(theta), parse(phi))) {
            case ClassicalKind::Novel: return "novel";
            case ClassicalKind::Anomalous: return "anomalous";
            default: return "not_a_problem";
          }
        });
  m.def("check_solution", [](const std::vector<std::string>& theta, const std::string& phi,
                             const std::string& alpha) {
    SolutionFlags f = check_solution(parse_many(theta), parse(phi), parse(alpha));
    return py::make_tuple(f.plain, f.consistent, f.explanatory);
  });
  m.def("to_minimal_clausal", [](const std::vector<std::string>& theta) {
    return print_clausal(to_minimal_clausal(parse_many(theta)));
  });
  m.def("clausal_bits", [](const std::vector<std::string>& theta,
                           const std::vector<std::string>& atom_order) {
    return clausal_bits(to_minimal_clausal(parse_many(theta)), atom_order);
  });

  m.def("lz76_phrases", [](const std::string& s) { return lz76_phrases(s); });
  m.def(
      "plain_complexity",
      [](const std::string& s, const std::string& backend) {
        return plain_complexity(s, backend_arg(backend)).bits;
      },
      py::arg("s"), py::arg("backend") = "lz76");
  m.def(
      "conditional_complexity",
      [](const std::string& s, const std::string& x, const std::string& backend) {
        return conditional_complexity(s, x, backend_arg(backend)).bits;
      },
      py::arg("s"), py::arg("x"), py::arg("backend") = "lz76");
}
