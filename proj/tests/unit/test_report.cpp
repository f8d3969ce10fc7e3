#include <doctest.h>

#include "vafilt/cli/backends.hpp"
#include "vafilt/cli/runner.hpp"
#include "vafilt/core/errors.hpp"

using namespace vafilt;

namespace {

Report sample_report() {
  Report r;
  r.config = {{"command", "check"}, {"backend", "demo"}};
  r.families.push_back({"E_W", 1, {{"0", 0, {}}, {"1/2", 1, {}}}});
  r.families.push_back({"W/C_W", 2, {{"1", 1, "complete"}, {"3/2", 2, "truncated"}}});
  r.checks.push_back(make_check("first", true, "3 cases"));
  r.checks.push_back(make_check("second", false, "", Witness{3, "3/2", "(2)*h(-3/2)vac"}));
  r.checks.push_back({"third", CheckStatus::Unchecked, "nothing under the cutoff", std::nullopt});
  return r;
}

RunConfig filtration_config(Execution mode) {
  RunConfig c;
  c.command = "filtration";
  c.backend = "heisenberg-T2";
  c.cutoff = "7/2";
  c.families = {"E_V", "C_V", "E_W", "C_W"};
  c.n_max = 3;
  c.exec.mode = mode;
  return c;
}

}  // namespace

TEST_CASE("report JSON has a fixed layout") {
  auto j = to_json(sample_report());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"config", "families", "checks", "certificates"});
  CHECK(j["families"][1]["slices"][1]["status"] == "truncated");
  CHECK(!j["families"][0]["slices"][0].contains("status"));
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][1]["witness"]["weight"] == "3/2");
  CHECK(!j["checks"][0].contains("witness"));
  CHECK(j["checks"][2]["status"] == "unchecked");
  CHECK(!sample_report().all_passed());
}

TEST_CASE("text summary lists families and one line per check") {
  std::string t = to_text(sample_report());
  CHECK(t.find("E_W(1)  0:0  1/2:1\n") != std::string::npos);
  CHECK(t.find("W/C_W(2)  1:1  3/2:2*\n") != std::string::npos);
  CHECK(t.find("pass      first  (3 cases)\n") != std::string::npos);
  CHECK(t.find("fail      second\n          witness at weight 3/2: (2)*h(-3/2)vac\n") != std::string::npos);
  CHECK(t.find("unchecked third") != std::string::npos);
}

TEST_CASE("filtration reports are deterministic and independent of execution mode") {
  std::string a = report_json(run(filtration_config(Execution::Serial)));
  std::string b = report_json(run(filtration_config(Execution::Parallel)));
  std::string c = report_json(run(filtration_config(Execution::Parallel)));
  CHECK(a == b);
  CHECK(b == c);
  CHECK(a.back() == '\n');
  auto j = nlohmann::json::parse(a);
  CHECK(j["config"]["w_cutoff"] == "7/2");
  CHECK(j["config"]["v_cutoff"] == 3);
  // E families start at n = 0, C families at n = 2
  CHECK(j["families"][0]["name"] == "E_V");
  CHECK(j["families"][0]["n"] == 0);
  bool saw_c = false;
  for (const auto& f : j["families"])
    if (f["name"] == "C_W") {
      CHECK(f["n"].get<long>() >= 2);
      saw_c = true;
    }
  CHECK(saw_c);
}

TEST_CASE("check reports pass on the twisted Heisenberg backend") {
  RunConfig c;
  c.command = "check";
  c.backend = "heisenberg-T2";
  c.cutoff = "5/2";
  c.suite = "relations";
  c.n_max = 3;
  Report r = run(c);
  CHECK(r.all_passed());
  CHECK(!r.checks.empty());
}

TEST_CASE("backend and cutoff errors") {
  CHECK_THROWS_AS(make_backend("nonsense", "3"), ConfigError);
  CHECK_THROWS_AS(make_backend("heisenberg-T2", "1/3"), ConfigError);
  CHECK_THROWS_AS(make_backend("heisenberg-T1", "1/2"), ConfigError);
  CHECK_THROWS_AS(make_backend("heisenberg-T2", "abc"), ConfigError);
  Backend b = make_backend("heisenberg-T2", "9/2");
  CHECK(b.v_cutoff == 4);
  CHECK(b.w_cutoff_ticks == 9);
  CHECK(b.algebra->cutoff() >= 8);
  RunConfig c = filtration_config(Execution::Serial);
  c.families = {"E_X"};
  CHECK_THROWS_AS(run(c), ConfigError);
}
