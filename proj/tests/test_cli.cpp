// End-to-end checks of the command-line tool. The binary path comes in via
// ABDUCER_CLI_PATH; commands run through popen with stderr discarded.
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ABDUCER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/abducer_test_") + name;
  std::ofstream(path) << content;
  return path;
}

const char* kFig1 = R"({
  "worlds": [{"id": "w1", "atoms": ["p"]}, {"id": "w2", "atoms": ["p", "q"]}],
  "leq": [["w1", "w1"], ["w1", "w2"], ["w2", "w2"]],
  "point": "w1"
})";

const char* kFig2 = R"({
  "worlds": [{"id": "w1", "atoms": ["p", "q"]},
             {"id": "w2", "atoms": ["q"]},
             {"id": "w3", "atoms": []}],
  "leq": [["w1", "w1"], ["w1", "w2"], ["w1", "w3"],
          ["w2", "w1"], ["w2", "w2"], ["w2", "w3"],
          ["w3", "w1"], ["w3", "w2"], ["w3", "w3"]]
})";

}  // namespace

TEST_CASE("check command evaluates formulas with exit-code semantics") {
  std::string model = write_temp("fig1.json", kFig1);
  auto r = run_cli("check " + model + " -w w1 -f \"K p & !K q & B q\"");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "true\n");

  r = run_cli("check " + model + " -w w1 -f \"K q\"");
  CHECK(r.exit_code == 1);
  CHECK(r.stdout_text == "false\n");

  r = run_cli("check " + model + " -w nope -f p");
  CHECK(r.exit_code == 3);

  r = run_cli("check " + model + " -w w1 -f \"p &&\"");
  CHECK(r.exit_code == 3);

  r = run_cli("check " + model);
  CHECK(r.exit_code == 2);
}

TEST_CASE("json outputs parse and observe round-trips through the loader") {
  std::string model = write_temp("fig2.json", kFig2);
  auto r = run_cli("observe " + model + " -f q");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["worlds"].size() == 2);

  std::string observed = write_temp("fig2_observed.json", r.stdout_text);
  auto check = run_cli("check " + observed + " -w w1 -f \"K q\"");
  CHECK(check.exit_code == 0);

  auto jr = run_cli("--json abduce " + model + " -w w1 -f q");
  CHECK(jr.exit_code == 0);
  auto pj = nlohmann::json::parse(jr.stdout_text);
  CHECK(pj["problem"] == true);
  CHECK(pj["kind"] == "novel");
}

TEST_CASE("invalid models are refused unless forced") {
  std::string bad = write_temp("bad.json", R"({"worlds":[{"id":"a"}],"leq":[]})");
  CHECK(run_cli("check " + bad + " -w a -f p").exit_code == 3);
  CHECK(run_cli("check " + bad + " --force -w a -f \"!p\"").exit_code == 0);
}

TEST_CASE("rank command produces a scored list") {
  std::string model = write_temp("fig2b.json", kFig2);
  std::string candidates = write_temp("cands.txt", "p\n!p\n");
  auto r = run_cli("--json rank " + model + " -w w1 -f q --candidates " + candidates);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  REQUIRE(j["ranked"].size() == 1);
  CHECK(j["ranked"][0]["hypothesis"] == "p");
  CHECK(j["rejected"].size() == 1);
}

TEST_CASE("classic subcommands") {
  auto r = run_cli("classic classify -t \"p -> q\" -f q");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "novel\n");

  r = run_cli("classic check -t \"p -> q\" -f q -a p");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "plain: true, consistent: true, explanatory: true\n");

  r = run_cli("--json classic normalize -t \"!q -> !p\" -t \"!p | q\"");
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["clauses"] == "{{!p, q}}");
  CHECK(j["bits"] == "1001");
}

TEST_CASE("scenario goldens are byte-identical across runs") {
  for (const char* name : {"fig1", "fig2"}) {
    auto a = run_cli(std::string("scenario ") + name);
    auto b = run_cli(std::string("scenario ") + name);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
  }
  auto fig2 = run_cli("scenario fig2");
  CHECK(fig2.stdout_text.find("believes p: true") != std::string::npos);
}

TEST_CASE("complexity command respects the backend flag and env default") {
  auto r = run_cli("complexity 0101010101010101010101010101010101010101");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("6.0") != std::string::npos);

  r = run_cli("complexity --backend deflate 0101010101010101010101010101010101010101");
  CHECK(r.stdout_text.find("104.0") != std::string::npos);

  r = run_cli("complexity --backend nope 01");
  CHECK(r.exit_code == 3);

  setenv("ABDUCER_BACKEND", "deflate", 1);
  r = run_cli("complexity 0101010101010101010101010101010101010101");
  CHECK(r.stdout_text.find("104.0") != std::string::npos);
  unsetenv("ABDUCER_BACKEND");
}
