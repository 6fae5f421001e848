// Command-line front-end: model checking, epistemic actions, abduction,
// classical abduction and complexity estimates over plausibility models.
//
// Exit codes: 0 success, 1 logical negative (formula false, not a problem,
// nothing ranked), 2 usage error, 3 data error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abducer/abduction.hpp"
#include "abducer/complexity.hpp"
#include "abducer/dynamics.hpp"
#include "abducer/errors.hpp"
#include "abducer/formula.hpp"
#include "abducer/model.hpp"
#include "abducer/model_json.hpp"
#include "abducer/propabduction.hpp"
#include "abducer/semantics.hpp"

namespace {

using nlohmann::json;
using namespace abducer;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PlausibilityModel load_model(const std::string& path, bool force) {
  return model_from_json(read_file(path), force);
}

Backend default_backend() {
  if (const char* env = std::getenv("ABDUCER_BACKEND")) return backend_from_name(env);
  return Backend::Lz76;
}

std::string kind_name(ProblemKind k) {
  return k == ProblemKind::Novel ? "novel" : "anomalous";
}

void emit(bool json_mode, const json& j, const std::string& human) {
  if (json_mode)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

json estimate_json(const ComplexityEstimate& e) {
  json j{{"bits", e.bits}, {"backend", backend_name(e.backend)},
         {"input_length", e.input_length}};
  if (e.small_input()) j["warnings"] = json::array({"small_input"});
  return j;
}

void warn_small(const ComplexityEstimate& e, bool json_mode) {
  if (e.small_input() && !json_mode)
    std::cerr << "warning: input below " << kSmallInputBits
              << " bits; compression-based estimates are unreliable at this size\n";
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& model_path, bool force, const std::string& world,
              const std::string& formula, bool json_mode) {
  PlausibilityModel m = load_model(model_path, force);
  Formula f = parse(formula);
  bool result = eval(m, world, f);
  emit(json_mode, json{{"world", world}, {"formula", print(f)}, {"result", result}},
       result ? "true" : "false");
  return result ? kExitOk : kExitNegative;
}

int cmd_action(const std::string& model_path, bool force, const std::string& formula,
               bool upgrade, bool json_mode) {
  PlausibilityModel m = load_model(model_path, force);
  Formula f = parse(formula);
  PlausibilityModel out = upgrade ? conjecture(m, f) : observe(m, f);
  (void)json_mode;  // the model JSON is the output in either mode
  std::cout << model_to_json(out) << "\n";
  return kExitOk;
}

int cmd_abduce(const std::string& model_path, bool force, const std::string& world,
               const std::string& formula, bool json_mode) {
  PlausibilityModel m = load_model(model_path, force);
  Formula phi = parse(formula);
  auto problem = detect(m, world, phi);
  if (!problem) {
    emit(json_mode, json{{"problem", false}},
         "not a problem: the agent already knows " + print(phi));
    return kExitNegative;
  }
  emit(json_mode,
       json{{"problem", true},
            {"kind", kind_name(problem->kind)},
            {"observed_model", json::parse(model_to_json(problem->observed_model))}},
       kind_name(problem->kind) + " abductive problem: " + print(phi) +
           " observed at " + world + " but not known before");
  return kExitOk;
}

int cmd_solve(const std::string& model_path, bool force, const std::string& world,
              const std::string& formula, std::size_t max_literals, bool plain_mode,
              bool json_mode) {
  PlausibilityModel m = load_model(model_path, force);
  Formula phi = parse(formula);
  auto problem = detect(m, world, phi);
  if (!problem) {
    emit(json_mode, json{{"problem", false}}, "not a problem");
    return kExitNegative;
  }

  auto candidates = generate_candidates(*problem, max_literals);
  json solutions = json::array();
  std::string human;
  for (const Formula& psi : candidates) {
    if (!is_solution(*problem, psi)) continue;
    FilterFlags flags = filter_flags(*problem, psi);
    if (!plain_mode && !(flags.consistent_analog && flags.explanatory_analog)) continue;
    solutions.push_back(json{{"hypothesis", print(psi)},
                             {"consistent_analog", flags.consistent_analog},
                             {"explanatory_analog", flags.explanatory_analog}});
    human += print(psi) + (flags.consistent_analog ? "" : " [inconsistent-analog]") +
             (flags.explanatory_analog ? "" : " [self-explanatory]") + "\n";
  }
  emit(json_mode, json{{"problem", true}, {"kind", kind_name(problem->kind)},
                       {"solutions", solutions}},
       solutions.empty() ? "no solutions"
                         : human.substr(0, human.size() - 1));
  return solutions.empty() ? kExitNegative : kExitOk;
}

int cmd_rank(const std::string& model_path, bool force, const std::string& world,
             const std::string& formula, const std::string& candidates_path,
             const std::string& backend_name_arg, bool plain_mode, bool json_mode) {
  PlausibilityModel m = load_model(model_path, force);
  Formula phi = parse(formula);
  auto problem = detect(m, world, phi);
  if (!problem) {
    emit(json_mode, json{{"problem", false}}, "not a problem");
    return kExitNegative;
  }

  std::vector<Formula> candidates;
  std::istringstream lines(read_file(candidates_path));
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    candidates.push_back(parse(line));
  }
  if (candidates.empty()) throw Error("io_error", "no candidates in '" + candidates_path + "'");

  Backend backend =
      backend_name_arg.empty() ? default_backend() : backend_from_name(backend_name_arg);
  RankResult result = rank(*problem, candidates, backend, !plain_mode);

  json ranked = json::array();
  std::string human;
  for (const CandidateSolution& c : result.ranked) {
    ranked.push_back(json{{"hypothesis", print(c.hypothesis)},
                          {"score_bits", *c.score},
                          {"consistent_analog", c.consistent_analog},
                          {"explanatory_analog", c.explanatory_analog}});
    human += print(c.hypothesis) + "  " + std::to_string(*c.score) + " bits\n";
  }
  json rejected = json::array();
  for (const Rejection& r : result.rejected)
    rejected.push_back(json{{"hypothesis", print(r.hypothesis)}, {"reason", r.reason}});
  emit(json_mode,
       json{{"backend", abducer::backend_name(backend)}, {"ranked", ranked},
            {"rejected", rejected}},
       result.ranked.empty() ? "no ranked solutions" : human.substr(0, human.size() - 1));
  return result.ranked.empty() ? kExitNegative : kExitOk;
}

// ---------------------------------------------------------------------------

std::vector<Formula> parse_theory(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse(t));
  return out;
}

int cmd_classic_classify(const std::vector<std::string>& theta_texts,
                         const std::string& phi_text, bool json_mode) {
  auto theta = parse_theory(theta_texts);
  Formula phi = parse(phi_text);
  ClassicalKind kind = classify_problem(theta, phi);
  std::string name = kind == ClassicalKind::Novel      ? "novel"
                     : kind == ClassicalKind::Anomalous ? "anomalous"
                                                        : "not_a_problem";
  emit(json_mode, json{{"kind", name}}, name);
  return kind == ClassicalKind::NotAProblem ? kExitNegative : kExitOk;
}

int cmd_classic_check(const std::vector<std::string>& theta_texts, const std::string& phi_text,
                      const std::string& alpha_text, bool json_mode) {
  auto theta = parse_theory(theta_texts);
  SolutionFlags flags = check_solution(theta, parse(phi_text), parse(alpha_text));
  emit(json_mode,
       json{{"plain", flags.plain},
            {"consistent", flags.consistent},
            {"explanatory", flags.explanatory}},
       std::string("plain: ") + (flags.plain ? "true" : "false") +
           ", consistent: " + (flags.consistent ? "true" : "false") +
           ", explanatory: " + (flags.explanatory ? "true" : "false"));
  return flags.plain ? kExitOk : kExitNegative;
}

int cmd_classic_normalize(const std::vector<std::string>& theta_texts, bool json_mode) {
  auto theta = parse_theory(theta_texts);
  ClausalTheory t = to_minimal_clausal(theta);

  std::set<std::string> names;
  for (const Formula& f : theta) {
    auto a = atoms(f);
    names.insert(a.begin(), a.end());
  }
  std::vector<std::string> order(names.begin(), names.end());
  std::string bits = clausal_bits(t, order);
  emit(json_mode,
       json{{"clauses", print_clausal(t)}, {"atom_order", order}, {"bits", bits}},
       print_clausal(t) + "\nbits over [" +
           [&order] {
             std::string s;
             for (std::size_t i = 0; i < order.size(); ++i) s += (i ? ", " : "") + order[i];
             return s;
           }() +
           "]: " + bits);
  return kExitOk;
}

int cmd_complexity(const std::string& bits_arg, const std::string& file_arg,
                   const std::string& cond_arg, const std::string& backend_name_arg,
                   bool json_mode) {
  std::string input = bits_arg;
  if (!file_arg.empty()) {
    input = read_file(file_arg);
    std::erase_if(input, [](char c) { return c != '0' && c != '1'; });
  }
  if (input.find_first_not_of("01") != std::string::npos)
    throw Error("bad_input", "bit strings may contain only '0' and '1'");
  Backend backend =
      backend_name_arg.empty() ? default_backend() : backend_from_name(backend_name_arg);

  ComplexityEstimate e = cond_arg.empty() ? plain_complexity(input, backend)
                                          : conditional_complexity(input, cond_arg, backend);
  warn_small(e, json_mode);
  emit(json_mode, estimate_json(e),
       std::to_string(e.bits) + " bits (" + abducer::backend_name(backend) + ", " +
           std::to_string(e.input_length) + " input bits)");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Golden scenarios replaying the worked examples end to end.

const char* kFig1Json = R"({
  "worlds": [{"id": "w1", "atoms": ["p"]}, {"id": "w2", "atoms": ["p", "q"]}],
  "leq": [["w1", "w1"], ["w1", "w2"], ["w2", "w2"]],
  "point": "w1"
})";

const char* kFig2Json = R"({
  "worlds": [{"id": "w1", "atoms": ["p", "q"]},
             {"id": "w2", "atoms": ["q"]},
             {"id": "w3", "atoms": []}],
  "leq": [["w1", "w1"], ["w1", "w2"], ["w1", "w3"],
          ["w2", "w1"], ["w2", "w2"], ["w2", "w3"],
          ["w3", "w1"], ["w3", "w2"], ["w3", "w3"]],
  "point": "w1"
})";

int cmd_scenario(const std::string& name, bool json_mode) {
  std::ostringstream out;
  json j;
  if (name == "fig1") {
    PlausibilityModel m = model_from_json(kFig1Json);
    out << "model: two worlds, w2 more plausible than w1\n";
    out << "knows p at w1: " << (knows(m, "w1", atom("p")) ? "true" : "false") << "\n";
    out << "knows q at w1: " << (knows(m, "w1", atom("q")) ? "true" : "false") << "\n";
    out << "believes q at w1: " << (believes(m, "w1", atom("q")) ? "true" : "false") << "\n";
    out << "believes p at w1: " << (believes(m, "w1", atom("p")) ? "true" : "false") << "\n";
    bool valid = valid_in_model(m, parse("K p & !K q & B q"));
    out << "K p & !K q & B q valid in model: " << (valid ? "true" : "false");
    j = {{"scenario", "fig1"},
         {"knows_p", knows(m, "w1", atom("p"))},
         {"knows_q", knows(m, "w1", atom("q"))},
         {"believes_q", believes(m, "w1", atom("q"))},
         {"believes_p", believes(m, "w1", atom("p"))},
         {"valid", valid}};
  } else if (name == "fig2") {
    PlausibilityModel m = model_from_json(kFig2Json);
    out << "left model: K (p -> q) valid: "
        << (valid_in_model(m, parse("K (p -> q)")) ? "true" : "false") << "\n";
    out << "left model: K q at w1: " << (knows(m, "w1", atom("q")) ? "true" : "false") << "\n";
    auto problem = detect(m, "w1", atom("q"));
    out << "observe q: " << problem->observed_model.worlds.size() << " worlds remain\n";
    out << "abductive problem: " << kind_name(problem->kind) << "\n";
    out << "is p a solution: " << (is_solution(*problem, atom("p")) ? "true" : "false") << "\n";
    IntegrationResult integrated = integrate(*problem, atom("p"));
    bool believes_p = believes(integrated.model, "w1", atom("p")) &&
                      believes(integrated.model, "w2", atom("p"));
    out << "conjecture p\n";
    out << "believes p: " << (believes_p ? "true" : "false");
    j = {{"scenario", "fig2"},
         {"kind", kind_name(problem->kind)},
         {"solution", "p"},
         {"believes_p", believes_p},
         {"final_model", json::parse(model_to_json(integrated.model))}};
  } else {
    throw CLI::ValidationError("scenario must be fig1 or fig2");
  }
  emit(json_mode, j, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plausibility-model abduction toolkit"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit JSON on stdout");

  std::string model_path, world, formula, candidates_path, backend_arg;
  bool force = false, plain_mode = false;
  std::size_t max_literals = 1;

  auto add_model_opts = [&](CLI::App* cmd, bool needs_world) {
    cmd->add_option("model", model_path, "model JSON file")->required();
    cmd->add_flag("--force", force, "load the model even if validation fails");
    if (needs_world) cmd->add_option("-w,--world", world, "world id")->required();
  };

  auto* check = app.add_subcommand("check", "evaluate a formula at a world");
  add_model_opts(check, true);
  check->add_option("-f,--formula", formula, "formula")->required();

  auto* obs = app.add_subcommand("observe", "restrict the model to psi-worlds");
  add_model_opts(obs, false);
  obs->add_option("-f,--formula", formula, "observed formula")->required();

  auto* upg = app.add_subcommand("upgrade", "radical upgrade with psi");
  add_model_opts(upg, false);
  upg->add_option("-f,--formula", formula, "conjectured formula")->required();

  auto* abd = app.add_subcommand("abduce", "detect and classify an abductive problem");
  add_model_opts(abd, true);
  abd->add_option("-f,--formula", formula, "surprising formula")->required();

  auto* solve = app.add_subcommand("solve", "generate and filter candidate solutions");
  add_model_opts(solve, true);
  solve->add_option("-f,--formula", formula, "surprising formula")->required();
  solve->add_option("--max-literals", max_literals, "literals per candidate conjunction")
      ->default_val(1);
  solve->add_flag("--plain-mode", plain_mode, "keep solutions failing the analog filters");

  auto* rank_cmd = app.add_subcommand("rank", "rank candidate solutions by complexity");
  add_model_opts(rank_cmd, true);
  rank_cmd->add_option("-f,--formula", formula, "surprising formula")->required();
  rank_cmd->add_option("--candidates", candidates_path, "file with one formula per line")
      ->required();
  rank_cmd->add_option("--backend", backend_arg, "lz76|deflate");
  rank_cmd->add_flag("--plain-mode", plain_mode, "rank every solution, skip analog filters");

  std::vector<std::string> theta_texts;
  std::string phi_text, alpha_text;
  auto* classic = app.add_subcommand("classic", "classical propositional abduction");
  classic->require_subcommand(1);
  auto* cls = classic->add_subcommand("classify", "novel / anomalous / not a problem");
  cls->add_option("-t,--theta", theta_texts, "background formula (repeatable)");
  cls->add_option("-f,--phi", phi_text, "surprising formula")->required();
  auto* chk = classic->add_subcommand("check", "plain/consistent/explanatory flags");
  chk->add_option("-t,--theta", theta_texts, "background formula (repeatable)");
  chk->add_option("-f,--phi", phi_text, "surprising formula")->required();
  chk->add_option("-a,--alpha", alpha_text, "candidate explanation")->required();
  auto* nrm = classic->add_subcommand("normalize", "minimal clausal form and bit string");
  nrm->add_option("-t,--theta", theta_texts, "formula (repeatable)")->required();

  std::string bits_arg, file_arg, cond_arg;
  auto* cx = app.add_subcommand("complexity", "complexity estimate of a bit string");
  cx->add_option("bits", bits_arg, "bit string");
  cx->add_option("--file", file_arg, "read bits from file (non-bit characters ignored)");
  cx->add_option("--conditional", cond_arg, "condition on this bit string");
  cx->add_option("--backend", backend_arg, "lz76|deflate");

  std::string scenario_name;
  auto* sc = app.add_subcommand("scenario", "replay a worked example");
  sc->add_option("name", scenario_name, "fig1|fig2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return cmd_check(model_path, force, world, formula, json_mode);
    if (*obs) return cmd_action(model_path, force, formula, false, json_mode);
    if (*upg) return cmd_action(model_path, force, formula, true, json_mode);
    if (*abd) return cmd_abduce(model_path, force, world, formula, json_mode);
    if (*solve)
      return cmd_solve(model_path, force, world, formula, max_literals, plain_mode, json_mode);
    if (*rank_cmd)
      return cmd_rank(model_path, force, world, formula, candidates_path, backend_arg,
                      plain_mode, json_mode);
    if (*classic) {
      if (*cls) return cmd_classic_classify(theta_texts, phi_text, json_mode);
      if (*chk) return cmd_classic_check(theta_texts, phi_text, alpha_text, json_mode);
      if (*nrm) return cmd_classic_normalize(theta_texts, json_mode);
    }
    if (*cx) return cmd_complexity(bits_arg, file_arg, cond_arg, backend_arg, json_mode);
    if (*sc) return cmd_scenario(scenario_name, json_mode);
  } catch (const Error& e) {
    if (json_mode)
      std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitData;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
