// End-to-end checks of the command-line contract: exit codes 0 (satisfied
// verdicts), 1 (negative verdict), 2 (input errors), plus JSON output spot
// checks on the bundled fixtures.
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string fixture(const char* name) {
  return std::string(GFIX_FIXTURE_DIR) + "/" + name;
}

int run(const std::string& args) {
  const std::string cmd =
      std::string(GFIX_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(GFIX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes follow the contract on the fixtures") {
  // satisfied verdicts
  CHECK(run("check-axioms " + fixture("example-3.3.json")) == 0);
  CHECK(run("check " + fixture("example-3.3.json") + " --theorem banach") == 0);
  CHECK(run("check " + fixture("example-3.5.json") + " --theorem kannan") == 0);
  CHECK(run("tight-lambda " + fixture("example-3.5-t2.json") +
            " --theorem kannan") == 0);
  CHECK(run("fixed-points " + fixture("example-3.3-t2.json")) == 0);
  CHECK(run("iterate " + fixture("example-3.3.json") + " --start C") == 0);
  CHECK(run("verify " + fixture("example-3.3.json") + " --theorem banach") == 0);
  CHECK(run("reproduce --example 3.3") == 0);
  CHECK(run("reproduce --example reich --lambda 0.125") == 0);
  CHECK(run("derive " + fixture("example-3.5.json") + " --construction sum") ==
        0);

  // negative verdicts
  CHECK(run("check " + fixture("example-3.3-t2.json") + " --theorem banach") ==
        1);
  CHECK(run("verify " + fixture("example-3.5-t2.json") + " --theorem kannan") ==
        1);
  CHECK(run("iterate " + fixture("example-3.3-t2.json") + " --start C") == 1);

  // input errors
  CHECK(run("check-axioms /nonexistent.json") == 2);
  CHECK(run("check " + fixture("example-3.3.json")) == 2);  // missing --theorem
  CHECK(run("bogus-command") == 2);
  CHECK(run("check " + fixture("example-3.3.json") +
            " --theorem banach --lambda 7") == 2);
  CHECK(run("reproduce --example reich --lambda 0.7") == 2);
  CHECK(run("iterate " + fixture("example-3.3.json") + " --start Z") == 2);
}

TEST_CASE("json reports carry the headline numbers") {
  const auto tight = json::parse(capture(
      "tight-lambda " + fixture("example-3.3.json") +
      " --theorem banach --format json"));
  CHECK(tight["report"]["tight_lambda"].get<double>() ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(tight["report"]["holds"].get<bool>());
  CHECK(tight["report"]["admissible_interval"]["lo"].get<double>() ==
        doctest::Approx(0.5).epsilon(1e-9));

  const auto check = json::parse(capture(
      "check " + fixture("example-3.3-t2.json") + " --theorem banach --format json"));
  CHECK_FALSE(check["condition_one"]["holds"].get<bool>());
  CHECK(check["condition_one"]["witness"].get<std::string>() == "A");
  CHECK(check["condition_two"]["holds"].get<bool>());

  const auto fixed = json::parse(capture(
      "fixed-points " + fixture("example-3.3-t2.json") + " --format json"));
  CHECK(fixed["count"].get<int>() == 0);

  const auto rep = json::parse(
      capture("reproduce --example reich --lambda 0.2 --format json"));
  CHECK(rep["result"]["uniform_tight"]["tight_lambda"].get<double>() ==
        doctest::Approx(0.2).epsilon(1e-9));
  CHECK(rep["result"]["cases"][0]["relation"].get<std::string>() == "equality");
}

TEST_CASE("derive output re-ingests through the CLI") {
  const std::string tmp = "/tmp/gfix-derived-test.json";
  CHECK(run("derive " + fixture("example-3.3.json") +
            " --construction max -o " + tmp) == 0);
  CHECK(run("check-axioms " + tmp) == 0);
  CHECK(run("check " + tmp + " --theorem banach") == 0);
  std::remove(tmp.c_str());
}

TEST_CASE("iterate honors the step limit") {
  const auto j = json::parse(capture("iterate " + fixture("example-3.3.json") +
                                     " --start C --max-steps 5 --format json"));
  CHECK(j["status"].get<std::string>() == "fixed-point-reached");
  // cutting the budget below the orbit length reports step-limit, exit 1
  CHECK(run("iterate " + fixture("example-3.3-t2.json") +
            " --start C --max-steps 1") == 1);
}

TEST_CASE("verify accepts explicit reich coefficients") {
  // example-3.5 T1 satisfies the reich inequality at small uniform coeffs
  CHECK(run("verify " + fixture("example-3.5.json") +
            " --theorem reich --coeffs 0.12,0.12,0.12,0.12") == 0);
  // coefficients out of range are an input error
  CHECK(run("verify " + fixture("example-3.5.json") +
            " --theorem reich --coeffs 0.4,0.4,0.4,0.4") == 2);
  // constants are rejected for the tight-mode theorems
  CHECK(run("verify " + fixture("example-3.5.json") +
            " --theorem kannan --lambda 0.2") == 2);
}

TEST_CASE("text and json agree on the tight constant") {
  const auto text = capture("tight-lambda " + fixture("example-3.5.json") +
                            " --theorem kannan");
  CHECK(text.find("0.2") != std::string::npos);
  const auto j = json::parse(capture("tight-lambda " + fixture("example-3.5.json") +
                                     " --theorem kannan --format json"));
  CHECK(j["report"]["tight_lambda"].get<double>() ==
        doctest::Approx(0.2).epsilon(1e-9));
}

}  // TEST_SUITE
