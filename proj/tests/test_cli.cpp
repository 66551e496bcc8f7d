#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(FUZZGRAPH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string data(const std::string& name) {
  return std::string(FUZZGRAPH_TEST_DATA) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (const char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("analyze reports indices and labels") {
  const auto r = run_cli("analyze " + data("c4.fg"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "graph: 4 vertices, 4 edges"));
  CHECK(contains(r.output, "WI = 5.2"));
  CHECK(contains(r.output, "CI = 3.6"));
  CHECK(contains(r.output, "a b  mu 0.8  alpha"));
  CHECK(contains(r.output, "b c  mu 0.5  beta"));
}

TEST_CASE("analyze prints the hexagon antipodal distance") {
  const auto r = run_cli("analyze " + data("c6.fg"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "WI = 17.1"));
  CHECK(contains(r.output, "1.8 (3)"));
}

TEST_CASE("analyze marks the Wiener index undefined when pairs are cut off") {
  const auto r = run_cli("analyze " + data("two_components.fg"));
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "WI = undefined"));
  CHECK(contains(r.output, "no strong path"));
  CHECK(contains(r.output, "CI = "));
}

TEST_CASE("analyze fails with the offending line on bad input") {
  const auto bound = run_cli("analyze " + data("bad_bound.fg"));
  CHECK(bound.exit_code == 2);
  CHECK(contains(bound.output, "line 3"));
  CHECK(contains(bound.output, "membership bound violated"));

  const auto token = run_cli("analyze " + data("bad_token.fg"));
  CHECK(token.exit_code == 2);
  CHECK(contains(token.output, "line 3"));

  const auto missing = run_cli("analyze /no/such/file.fg");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "cannot open"));
}

TEST_CASE("verify-cycle confirms the closed form") {
  const auto r = run_cli("verify-cycle --n 6 --kappa 0.8 --eta 0.5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "wi_bruteforce = 17.1"));
  CHECK(contains(r.output, "wi_corrected  = 17.1"));
  CHECK(contains(r.output, "wi_star       = 36.5625"));
  CHECK(contains(r.output, "PASS"));
}

TEST_CASE("verify-cycle rejects invalid parameters") {
  CHECK(run_cli("verify-cycle --n 5 --kappa 0.8 --eta 0.5").exit_code == 2);
  CHECK(run_cli("verify-cycle --n 6 --kappa 0.5 --eta 0.8").exit_code == 2);
  CHECK(run_cli("verify-cycle --n 6 --kappa 1.5 --eta 0.5").exit_code == 2);
}

TEST_CASE("sweep emits a deterministic CSV") {
  const auto r = run_cli("sweep --n-max 6 --trials 3 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output,
                 "n,kappa,eta,wi_bruteforce,wi_corrected,wi_star,"
                 "err_corrected,err_star\n"));
  CHECK(count_lines(r.output) == 1 + 2 * 3);

  const auto again = run_cli("sweep --n-max 6 --trials 3 --seed 7");
  CHECK(again.output == r.output);

  const auto other_seed = run_cli("sweep --n-max 6 --trials 3 --seed 8");
  CHECK(other_seed.output != r.output);
}

TEST_CASE("sweep validates its arguments") {
  CHECK(run_cli("sweep --n-max 5 --trials 3 --seed 7").exit_code == 2);
  CHECK(run_cli("sweep --n-max 2 --trials 3 --seed 7").exit_code == 2);
}

TEST_CASE("mst prints the tree and the fuzzy-tree verdict") {
  const auto r = run_cli("mst " + data("triangle.fg"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "2 edges, weight 1.7"));
  CHECK(contains(r.output, "a b  mu 0.9"));
  CHECK(contains(r.output, "unique maximizer: yes"));
  CHECK(contains(r.output, "fuzzy tree: yes"));

  const auto cut = run_cli("mst " + data("two_components.fg"));
  CHECK(cut.exit_code == 2);
  CHECK(contains(cut.output, "disconnected"));
}

TEST_CASE("classify summarizes the trichotomy") {
  const auto square = run_cli("classify " + data("c4.fg"));
  CHECK(square.exit_code == 0);
  CHECK(contains(square.output, "summary: 2 alpha, 2 beta, 0 delta"));

  const auto tri = run_cli("classify " + data("triangle.fg"));
  CHECK(tri.exit_code == 0);
  CHECK(contains(tri.output, "summary: 2 alpha, 0 beta, 1 delta"));
}

TEST_CASE("bad invocations exit with the input-error code") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify-cycle --n 6").exit_code == 2);
}

TEST_CASE("help is not an error") {
  const auto r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "analyze"));
  CHECK(contains(r.output, "verify-cycle"));
  CHECK(contains(r.output, "sweep"));
}
