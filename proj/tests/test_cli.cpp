// End-to-end checks of the installed command surface: grammar round trips,
// exit-code contract, report files. The binary path comes from the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef WEYLRACK_CLI
#error "WEYLRACK_CLI must point at the weylrack binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& arguments) {
  const std::string command = std::string(WEYLRACK_CLI) + " " + arguments + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
    if (got < sizeof buffer) break;
  }
  const int raw = pclose(pipe);
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("class-info: documented example and exit codes") {
  const RunResult ok = run("class-info '0000;(1 2)' --kind B");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("class size:       12") != std::string::npos);
  CHECK(ok.output.find("(2,0)(1,0)(1,0)") != std::string::npos);
  CHECK(ok.output.find("centralizer size: 32") != std::string::npos);

  const RunResult singleton = run("class-info '00000;id' --kind B");
  CHECK(singleton.exit_code == 0);
  CHECK(singleton.output.find("class size:       1") != std::string::npos);

  // Odd sign parity is not a W(D_n) element.
  const RunResult odd = run("class-info '10000;id' --kind D");
  CHECK(odd.exit_code == 1);

  // Parse errors report the offending column and exit 2.
  const RunResult bad = run("class-info '10a01;id' --kind B");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("column") != std::string::npos);
}

TEST_CASE("sq: fixed-point report and closed-form agreement") {
  const RunResult moving = run("sq '00000;(1 2)' '00000;(1 3)'");
  CHECK(moving.exit_code == 0);
  CHECK(moving.output.find("sq:          00000;(1 2)") != std::string::npos);
  CHECK(moving.output.find("fixed-point: no") != std::string::npos);

  const RunResult fixed = run("sq '010;(1 2)' '010;(1 2)' --closed-form");
  CHECK(fixed.exit_code == 0);
  CHECK(fixed.output.find("fixed-point: yes") != std::string::npos);
  CHECK(fixed.output.find("agreement:   yes") != std::string::npos);
}

TEST_CASE("search: witness JSON on success, grep-style failure otherwise") {
  const RunResult found = run("search '0000;(1 2 3 4)' --kind D --recheck");
  CHECK(found.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(found.output);
  CHECK(j["kind"] == "D");
  CHECK(j["checks"]["ok"] == true);

  const RunResult none = run("search '00000;id' --kind B");
  CHECK(none.exit_code == 1);
  CHECK(none.output.find("none found") != std::string::npos);

  const RunResult refuted = run("search '00000;(1 2)' --kind B");
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.output.find("exhaustive") != std::string::npos);
}

TEST_CASE("classes: JSON listing with stable shape") {
  const RunResult r = run("classes --kind B --n 2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["kind"] == "B");
  CHECK(j["n"] == 2);
  std::uint64_t total = 0;
  for (const auto& row : j["classes"]) total += row["size"].get<std::uint64_t>();
  CHECK(total == 8);
}

TEST_CASE("verify-paper: honest summary, JSON file, determinism") {
  const std::string path1 = "cli_report_1.json";
  const std::string path2 = "cli_report_2.json";
  const RunResult r1 = run("verify-paper --n 4..4 --kinds B --json " + path1);
  CHECK(r1.exit_code == 1);  // the sweep items fail honestly
  CHECK(r1.output.find("PASS  core.action") != std::string::npos);
  CHECK(r1.output.find("FAIL  thm-1.8.sweep.B4") != std::string::npos);
  CHECK(r1.output.find("summary:") != std::string::npos);

  const RunResult r2 = run("verify-paper --n 4..4 --kinds B --parallel 3 --json " + path2);
  CHECK(r2.exit_code == 1);
  auto j1 = nlohmann::ordered_json::parse(slurp(path1));
  auto j2 = nlohmann::ordered_json::parse(slurp(path2));
  for (auto* j : {&j1, &j2}) {
    for (auto& item : (*j)["items"]) item.erase("wall_ms");
  }
  CHECK(j1 == j2);
  CHECK(j1["schema"] == 1);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("braiding-check: constants pass, export writes coordinate lines") {
  const std::string path = "cli_braiding.txt";
  const RunResult r = run("braiding-check '000;(1 2)' --kind B --yd --export " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rack-braiding.q=+1") != std::string::npos);
  CHECK(r.output.find("rack-braiding.q=-1") != std::string::npos);
  CHECK(r.output.find("yd-braiding.chi0") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
  const std::string text = slurp(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 36);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("classes --kind B").exit_code == 2);   // missing --n
  CHECK(run("class-info '00;id' --kind X").exit_code == 1);  // bad kind is an operational error
}

TEST_CASE("enumeration cap: flag and environment variable") {
  const RunResult blocked = run("classes --kind B --n 6 --cap 5");
  CHECK(blocked.exit_code == 1);
  CHECK(blocked.output.find("cap") != std::string::npos);

  const RunResult allowed = run("classes --kind D --n 4 --cap 5");
  CHECK(allowed.exit_code == 0);

  setenv("WEYLRACK_CAP", "5", 1);
  const RunResult env = run("classes --kind B --n 6");
  unsetenv("WEYLRACK_CAP");
  CHECK(env.exit_code == 1);
}
