#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "digitblock/gamma_expr.hpp"
#include "digitblock/report.hpp"

using namespace digitblock;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + DIGITBLOCK_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run("count --base 2 --word 11 15").out == "3\n");
  CHECK(run("count --base 2 --word 001 0").out == "0\n");
  CHECK(run("count --base 4 --word 0 4").out == "1\n");
  CHECK(run("count --base 4 --word 0 16").out == "2\n");
  CHECK(run("count --base 16 --word fF 65535").out == "3\n");
  CHECK(run("count --base 2 --word 11 15").code == 0);
}

TEST_CASE("closed-form") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"0", "8 * G(1/2) / (G(1/4)^2)"},
      {"1", "G(1/2) / (G(3/4)^2)"},
      {"00", "16 * G(1/4) / (G(1/8)^2)"},
      {"101", "G(5/8) * G(3/4) / (G(11/16)^2)"},
  };
  for (const auto& [word, text] : cases) {
    const Run r = run("closed-form --base 2 --word " + word);
    CHECK(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == text);
    CHECK(GammaExpr::from_json(nlohmann::json::parse(out[1])).to_text() == text);
  }
  const auto evaluated = lines(run("closed-form --base 2 --word 1 --eval --precision 256").out);
  REQUIRE(evaluated.size() == 3);
  CHECK(evaluated[2].rfind("1.18034059901609622604533794055848858", 0) == 0);
  CHECK(lines(run("closed-form --base 3 --word 0").out)[0] == "G(11/9) / (G(10/9)^2)");
  CHECK(lines(run("closed-form --base 3 --word 21 --a 1/3,2 --b 1/3,2").out)[0] == "1");
}

TEST_CASE("verify named targets") {
  const Run rivoal = run("verify rivoal --terms 100000");
  CHECK(rivoal.code == 0);
  CHECK(rivoal.out.find("verdict: pass") != std::string::npos);
  CHECK(rivoal.out.find("rhs: 1.27323954473516268615107010698011") != std::string::npos);

  const Run companion = run("verify companion --terms 100000 --format json");
  CHECK(companion.code == 0);
  const auto j = nlohmann::json::parse(companion.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["spec"] == "companion");
  CHECK(VerifyReport::from_json(j).to_json() == j);

  CHECK(run("verify rivoal --terms 1000 --tolerance 1e-9").code == 1);
  CHECK(run("verify rivoal --terms 1000 --tolerance 1e-9 --tail-factor 1.01").code == 0);
}

TEST_CASE("verify a word") {
  const Run csv = run("verify --base 2 --word 101 --terms 10000 --format csv");
  CHECK(csv.code == 0);
  const auto out = lines(csv.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == VerifyReport::csv_header());
  CHECK(out[1].rfind("\"base=2 word=101 a=1,1 b=0,2\",10000,128,", 0) == 0);
  CHECK(out[1].substr(out[1].size() - 5) == ",pass");

  const Run json = run("verify --base 3 --word 12 --a 1/2,1 --b 1,1/2 --terms 5000 --format json");
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["spec"]["base"] == 3);
  CHECK(VerifyReport::from_json(j).to_json() == j);
  CHECK(json.code == (j["verdict"] == "pass" ? 0 : 1));
}

TEST_CASE("lemma1-fuzz") {
  const Run fuzz = run("lemma1-fuzz --trials 1000 --seed 7");
  CHECK(fuzz.code == 0);
  CHECK(lines(fuzz.out)[0] == "1000/1000 exact");

  const Run single = run("lemma1-fuzz --f 1:1 --word 1 --base 2");
  CHECK(single.code == 0);
  CHECK(lines(single.out)[0] == "residual: 0");

  const Run control = run("lemma1-fuzz --trials 200 --seed 3 --mis-range");
  CHECK(control.code == 1);
  CHECK(control.out.find("counterexample: ") != std::string::npos);
  const Run zeros = run("lemma1-fuzz --f 1:1 --f0 1 --word 00 --base 2 --mis-range");
  CHECK(zeros.code == 1);
  CHECK(lines(zeros.out)[0] == "residual: -1");
}

TEST_CASE("enumerate, rivoal-forms and alternating") {
  const Run csv = run("enumerate --base 2 --max-len 3 --format csv");
  CHECK(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 15);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(rows[i].size() - 5) == ",pass");
  CHECK(rows[1].rfind("\"base=2 word=0 ", 0) == 0);
  CHECK(rows[14].rfind("\"base=2 word=111 ", 0) == 0);

  const Run forms = run("rivoal-forms --blocks 1000");
  CHECK(forms.code == 0);
  CHECK(lines(forms.out).back() == "exact match");

  const Run alt = run("alternating --terms 100000");
  CHECK(alt.code == 0);
  CHECK(alt.out.find("estimate: 9.76224") != std::string::npos);
  const auto j = nlohmann::json::parse(run("alternating --terms 100000 --format json").out);
  CHECK(j["checkpoints"] == nlohmann::json::array({1000, 10000, 100000}));
  CHECK(j["stable_digits"].get<int>() >= 7);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("verify --help").code == 0);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("count --base 2 --word 12 3").code == 2);
  CHECK(run("count --base 2 --word 1").code == 2);
  CHECK(run("count --base 1 --word 0 3").code == 2);
  CHECK(run("count --base 2 --word 1 -3").code == 2);
  CHECK(run("verify rivoal --terms 0").code == 2);
  CHECK(run("verify rivoal --precision 32").code == 2);
  CHECK(run("verify rivoal --tolerance 0").code == 2);
  CHECK(run("verify rivoal --format xml").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify euler").code == 2);
  CHECK(run("verify rivoal --word 1").code == 2);
  CHECK(run("verify --word 1 --a 1,1 --b 0,1").code == 2);
  CHECK(run("verify --word 1 --a 1,1").code == 2);
  CHECK(run("closed-form --base 2 --word ''").code == 2);
  CHECK(run("enumerate --base 2 --max-len 9").code == 2);
  CHECK(run("lemma1-fuzz --f 0:1 --word 1").code == 2);
  CHECK(run("verify rivoal --terms 10", "DIGITBLOCK_PRECISION=12").code == 2);
  CHECK(run("verify rivoal --terms 10", "DIGITBLOCK_PRECISION=abc").code == 2);
}

TEST_CASE("precision from the environment") {
  const auto j = nlohmann::json::parse(
      run("verify rivoal --terms 10 --format json", "DIGITBLOCK_PRECISION=256").out);
  CHECK(j["precision_bits"] == 256);
  const auto k = nlohmann::json::parse(
      run("verify rivoal --terms 10 --format json --precision 96", "DIGITBLOCK_PRECISION=256").out);
  CHECK(k["precision_bits"] == 96);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"lemma1-fuzz --trials 300 --seed 11 --mis-range",
                           "enumerate --base 3 --max-len 2 --terms 2000 --format json",
                           "enumerate --base 3 --max-len 2 --terms 2000 --format json --parallel",
                           "verify companion --terms 20000 --parallel"}) {
    const Run first = run(args);
    const Run second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}
