// Copyright 2026 The adian authors
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

// End-to-end checks of the command-line tool.  The binary path arrives via
// the ADIAN_CLI_PATH compile definition.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_helpers.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;  // stdout (plus stderr when merged)
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(ADIAN_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
    output.append(buffer, got);
  }
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

// Writes the standard fixture files once per process.
class Fixtures {
 public:
  Fixtures() {
    dir_ = fs::temp_directory_path() / "adian_cli_tests";
    fs::create_directories(dir_);
    write("comm.txt", "a b\nab = ba\n");
    write("aba_cc.txt", "a b c\naba = cc\n");
    write("free_a.txt", "a\n");
    write("two_rel.txt", "a b c d\nab = cd\nac = bd\n");
    write("bad.txt", "a\n = a\n");
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

 private:
  void write(const std::string& name, const std::string& text) {
    std::ofstream out(dir_ / name, std::ios::binary);
    out << text;
  }

  fs::path dir_;
};

const Fixtures& fixtures() {
  static Fixtures f;
  return f;
}

}  // namespace

TEST_CASE("cli analyze prints the classification record") {
  auto r = run_cli("analyze -p " + fixtures().path("aba_cc.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "adian=true subword=none overlap_type=2a class=3\n");

  auto comm = run_cli("analyze -p " + fixtures().path("comm.txt"));
  CHECK(comm.exit_code == 0);
  CHECK(comm.output == "adian=true subword=none overlap_type=4 class=unknown\n");

  auto multi = run_cli("analyze -p " + fixtures().path("two_rel.txt"));
  CHECK(multi.exit_code == 0);
  CHECK(multi.output == "adian=true subword=na overlap_type=na class=na\n");
}

TEST_CASE("cli sgraph traces the worked example") {
  auto r = run_cli("sgraph -p " + fixtures().path("comm.txt") +
                   " -w aabbaabb --trace");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "step 1 expanded 3 vertices 12 edges 14\n"
        "step 2 expanded 6 vertices 18 edges 26\n"
        "step 3 expanded 4 vertices 22 edges 34\n"
        "step 4 expanded 2 vertices 24 edges 38\n"
        "step 5 expanded 1 vertices 25 edges 40\n"
        "closed\n");

  auto quiet = run_cli("sgraph -p " + fixtures().path("comm.txt") +
                       " -w aabbaabb");
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.output == "closed\n");

  auto capped = run_cli("sgraph -p " + fixtures().path("comm.txt") +
                        " -w aabbaabb --budget 2");
  CHECK(capped.exit_code == 2);
  CHECK(capped.output == "budget-exceeded\n");
}

TEST_CASE("cli sgraph writes parseable DOT") {
  fs::path dot = fs::temp_directory_path() / "adian_cli_tests" / "out.dot";
  auto r = run_cli("sgraph -p " + fixtures().path("comm.txt") +
                   " -w ab --dot " + dot.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(dot);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  adian_test::DotGraph parsed;
  CHECK(adian_test::parse_dot(text, &parsed));
  CHECK(parsed.nodes.size() == 4);
  CHECK(parsed.edges.size() == 4);
}

TEST_CASE("cli subgraph prints the report line") {
  auto r = run_cli("subgraph -p " + fixtures().path("comm.txt") +
                   " -w aabbaabb -r lhs -i 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "ab occ=1 pos=1 closed=true steps=3 regions=4 vertices=13\n");

  auto rhs = run_cli("subgraph -p " + fixtures().path("comm.txt") +
                     " -w aabbaabb -r rhs -i 1");
  CHECK(rhs.exit_code == 0);
  CHECK(rhs.output == "ba occ=1 pos=3 closed=true steps=3 regions=4 vertices=13\n");

  auto missing = run_cli("subgraph -p " + fixtures().path("comm.txt") +
                         " -w aabbaabb -r lhs -i 5", true);
  CHECK(missing.exit_code == 3);
}

TEST_CASE("cli deltas reports every occurrence") {
  auto r = run_cli("deltas -p " + fixtures().path("comm.txt") +
                   " -w aabbaabb");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "ab occ=1 pos=1 closed=true steps=3 regions=4 vertices=13\n"
        "ab occ=2 pos=5 closed=true steps=3 regions=4 vertices=13\n"
        "ba occ=1 pos=3 closed=true steps=3 regions=4 vertices=13\n"
        "all-closed=true\n");
}

TEST_CASE("cli decide reports the verdict in the exit code") {
  auto eq = run_cli("decide -p " + fixtures().path("comm.txt") +
                    " -u aabbaabb -v bbbbaaaa");
  CHECK(eq.exit_code == 0);
  CHECK(eq.output == "equal guaranteed=false\n");

  auto neq = run_cli("decide -p " + fixtures().path("comm.txt") +
                     " -u a -v b");
  CHECK(neq.exit_code == 1);
  CHECK(neq.output == "not-equal guaranteed=false\n");

  auto capped = run_cli("decide -p " + fixtures().path("comm.txt") +
                        " -u aabbaabb -v bbbbaaaa --budget 1");
  CHECK(capped.exit_code == 2);
  CHECK(capped.output == "budget-exceeded guaranteed=false\n");

  auto guaranteed = run_cli("decide -p " + fixtures().path("aba_cc.txt") +
                            " -u aba -v cc");
  CHECK(guaranteed.exit_code == 0);
  CHECK(guaranteed.output == "equal guaranteed=true\n");
}

TEST_CASE("cli idempotent mirrors the decide contract") {
  auto eq = run_cli("idempotent -p " + fixtures().path("free_a.txt") +
                    " -w aA");
  CHECK(eq.exit_code == 0);
  CHECK(eq.output == "equal guaranteed=true\n");

  auto neq = run_cli("idempotent -p " + fixtures().path("comm.txt") +
                     " -w a");
  CHECK(neq.exit_code == 1);
  CHECK(neq.output == "not-equal guaranteed=false\n");
}

TEST_CASE("cli rejects bad input with exit 3") {
  CHECK(run_cli("analyze -p /nonexistent/file", true).exit_code == 3);
  CHECK(run_cli("analyze -p " + fixtures().path("bad.txt"), true).exit_code ==
        3);
  CHECK(run_cli("decide -p " + fixtures().path("comm.txt") + " -u ax -v b",
                true)
            .exit_code == 3);
  CHECK(run_cli("subgraph -p " + fixtures().path("comm.txt") +
                    " -w aAb -r lhs -i 1",
                true)
            .exit_code == 3);

  auto diag = run_cli("analyze -p " + fixtures().path("bad.txt"), true);
  CHECK(diag.output.find("error:") != std::string::npos);

  // Usage errors from the argument parser share the same exit code.
  CHECK(run_cli("analyze", true).exit_code == 3);
  CHECK(run_cli("frobnicate -p x", true).exit_code == 3);
  CHECK(run_cli("decide -p " + fixtures().path("comm.txt") + " -u a",
                true)
            .exit_code == 3);
  CHECK(run_cli("--help").exit_code == 0);
}
