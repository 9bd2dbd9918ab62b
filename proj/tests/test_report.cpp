#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "weylrack/report.hpp"
#include "weylrack/version.hpp"

using namespace weylrack;

namespace {

nlohmann::ordered_json strip_wall_times(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  for (auto& item : j["items"]) item.erase("wall_ms");
  return j;
}

VerifyOptions small_run() {
  VerifyOptions options;
  options.n_min = 4;
  options.n_max = 4;
  options.kind_b = true;
  options.kind_d = false;
  return options;
}

}  // namespace

TEST_CASE("verification report: schema, summary tallies, citations") {
  const Report report = run_paper_verification(small_run());
  REQUIRE(!report.items.empty());

  const auto j = nlohmann::ordered_json::parse(report_json(report));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["tool"]["name"] == kToolName);
  CHECK(j["tool"]["version"] == kToolVersion);
  CHECK(j["group"]["kinds"] == "B");
  CHECK(j["group"]["n_min"] == 4);
  CHECK(j["group"]["n_max"] == 4);

  int pass = 0, fail = 0, skip = 0;
  for (const auto& item : j["items"]) {
    const std::string status = item["status"];
    pass += status == "pass";
    fail += status == "fail";
    skip += status == "skip";
    CHECK(!item["citation"].get<std::string>().empty());
  }
  CHECK(j["summary"]["pass"] == pass);
  CHECK(j["summary"]["fail"] == fail);
  CHECK(j["summary"]["skip"] == skip);
  CHECK(j["summary"]["total"] == pass + fail + skip);
}

TEST_CASE("verification report is deterministic given flags") {
  const std::string first = report_json(run_paper_verification(small_run()));
  const std::string second = report_json(run_paper_verification(small_run()));
  CHECK(strip_wall_times(first) == strip_wall_times(second));
}

TEST_CASE("verification report: frozen statuses of the n = 4 kind B run") {
  const Report report = run_paper_verification(small_run());
  const auto status_of = [&report](const std::string& id) -> std::string {
    for (const auto& item : report.items) {
      if (item.id == id) return item.status;
    }
    return "missing";
  };
  // Arithmetic and sweeps hold.
  CHECK(status_of("core.action") == "pass");
  CHECK(status_of("core.inverse") == "pass");
  CHECK(status_of("core.conjugation") == "pass");
  CHECK(status_of("core.rack-axioms") == "pass");
  CHECK(status_of("conjugacy.fast-vs-oracle.B4") == "pass");
  CHECK(status_of("sq.closed-form") == "pass");
  CHECK(status_of("sq.e11") == "pass");
  CHECK(status_of("sq.e22") == "pass");
  CHECK(status_of("tables.thm-1.002") == "pass");
  CHECK(status_of("tables.thm-1.003") == "pass");
  // The one single-class transposition family verifies end to end.
  CHECK(status_of("prop-1.01.B4.p1") == "pass");
  // The parity-0 family and the (1,3) families split between two classes:
  // the membership clause fails against the orbit oracle.
  CHECK(status_of("prop-1.01.B4.p0") == "fail");
  CHECK(status_of("prop-1.23.B.p0") == "fail");
  CHECK(status_of("prop-1.23.B.p1") == "fail");
  // The W(B4) sweep certifies only the even type (4) class.
  CHECK(status_of("thm-1.8.sweep.B4") == "fail");
  CHECK(status_of("thm-2.6.dimension-tag") == "fail");
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("parallel sweeps produce the identical report") {
  VerifyOptions serial = small_run();
  VerifyOptions threaded = small_run();
  threaded.parallel = 4;
  CHECK(strip_wall_times(report_json(run_paper_verification(serial))) ==
        strip_wall_times(report_json(run_paper_verification(threaded))));
}
