// End-to-end tests that drive the installed CLI binary (path supplied via
// the FLIPGRAY_CLI environment variable) through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("FLIPGRAY_CLI");
  REQUIRE_MESSAGE(path != nullptr, "FLIPGRAY_CLI must point at the CLI binary");
  return path;
}

// Runs `cli <args>` (or a full shell pipeline when raw is set) and captures
// stdout.
RunResult run(const std::string& args, bool raw = false) {
  const std::string command = raw ? args : "'" + cli_path() + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    out.push_back(text.substr(pos, eol - pos));
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("gen prints the listing and a total line") {
  const auto result = run("gen --n 1 --k 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "1^0\ntotal:1\n");

  const auto greedy = run("gen --n 3 --k 3 --method greedy-min");
  CHECK(greedy.exit_code == 0);
  const auto rows = lines(greedy.output);
  REQUIRE(rows.size() == 163);
  CHECK(rows[0] == "1^0 2^0 3^0");
  CHECK(rows[1] == "1^1 2^0 3^0");
  CHECK(rows[2] == "1^2 2^0 3^0");
  CHECK(rows[3] == "2^1 1^0 3^0");
  CHECK(rows.back() == "total:162");
}

TEST_CASE("all equivalent gen methods emit identical bytes") {
  const auto reference = run("gen --n 3 --k 2 --method flipseq");
  REQUIRE(reference.exit_code == 0);
  for (const std::string method : {"greedy-min", "recursive", "successor"}) {
    const auto other = run("gen --n 3 --k 2 --method " + method);
    CHECK(other.exit_code == 0);
    CHECK(other.output == reference.output);
  }
  CHECK(run("gen --n 3 --k 2 --method flipseq --stream").output == reference.output);
}

TEST_CASE("greedy-max reports its stuck path via the exit code") {
  const auto result = run("gen --n 2 --k 3 --method greedy-max");
  CHECK(result.exit_code == 1);
  const auto rows = lines(result.output);
  REQUIRE(rows.size() == 13);
  CHECK(rows[0] == "1^0 2^0");
  CHECK(rows[11] == "1^1 2^2");
  CHECK(rows[12] == "total:12");

  CHECK(run("gen --n 3 --k 2 --method greedy-max").exit_code == 0);
}

TEST_CASE("flipseq emits one flip length per line without the sentinel") {
  const auto result = run("flipseq --n 2 --k 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "1\n2\n1\n2\n1\n2\n1\n");
}

TEST_CASE("rank, unrank and successor round the worked examples") {
  CHECK(run("unrank --n 3 --k 3 --rank 138").output == "1^0 3^1 2^2\n");
  CHECK(run("rank --k 3 --perm '1^0 3^1 2^2'").output == "138\n");
  CHECK(run("rank --n 3 --k 3 --start '1^0 3^1 2^2'").output == "138\n");

  const auto succ = run("successor --k 10 --perm '3^8 2^8 5^9 4^9 1^7 6^3'");
  CHECK(succ.exit_code == 0);
  CHECK(succ.output == "4^0 5^0 2^9 3^9 1^7 6^3\nflip:4\n");
}

TEST_CASE("gen piped into verify closes the cycle") {
  const std::string cli = cli_path();
  const auto piped = run("'" + cli + "' gen --n 4 --k 2 | '" + cli +
                             "' verify --n 4 --k 2 2>/dev/null",
                         true);
  CHECK(piped.exit_code == 0);
  CHECK(piped.output ==
        "total:384\nexpected:384\nduplicates:0\nbad_transitions:0\ncyclic:true\nhamilton:true\n");

  SUBCASE("non-canonical starts verify too") {
    const auto rotated = run("'" + cli + "' gen --n 2 --k 2 --start '2^1 1^0' | '" + cli +
                                 "' verify --n 2 --k 2 2>/dev/null",
                             true);
    CHECK(rotated.exit_code == 0);
  }

  SUBCASE("a truncated listing fails verification") {
    const auto broken = run("'" + cli + "' gen --n 3 --k 2 | head -n 40 | '" + cli +
                                "' verify --n 3 --k 2 2>/dev/null",
                            true);
    CHECK(broken.exit_code == 1);
  }

  SUBCASE("a mismatched total line is an input error") {
    const auto bad = run("printf '1^0\\ntotal:2\\n' | '" + cli + "' verify --n 1 --k 1 2>/dev/null",
                         true);
    CHECK(bad.exit_code == 2);
  }
}

TEST_CASE("stats reports the exact average, its decimal, and the bound") {
  const auto result = run("stats --n 2 --k 2");
  CHECK(result.exit_code == 0);
  const auto rows = lines(result.output);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "exact:3/2");
  CHECK(rows[1] == "exact_decimal:1.500000000000000");
  CHECK(rows[2] == "bound:1.648721270700128");
  CHECK(rows[3] == "empirical:3/2");
}

TEST_CASE("argument and capacity errors use distinct exit codes") {
  CHECK(run("gen --n 3").exit_code == 2);                       // missing --k
  CHECK(run("gen --n 3 --k 3 --method nonsense").exit_code == 2);
  CHECK(run("gen --n 3 --k 3 --method successor --start '1^0 2^0 3^0'").exit_code == 2);
  CHECK(run("unrank --n 3 --k 3 --rank 0").exit_code == 2);     // out of range
  CHECK(run("unrank --n 3 --k 3 --rank 163").exit_code == 2);
  CHECK(run("rank --k 2 --perm '1^0 1^1'").exit_code == 2);     // parse error
  CHECK(run("rank --n 4 --k 2 --perm '1^0 2^0'").exit_code == 2);
  CHECK(run("unrank --n 21 --k 1 --rank 1").exit_code == 3);    // beyond 64 bits
  CHECK(run("flipseq --n 22 --k 1").exit_code == 3);
  CHECK(run("nonsense --n 1 --k 1").exit_code == 2);
}
