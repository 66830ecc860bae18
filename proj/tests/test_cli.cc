#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "gcsim/sim/config.h"
#include "gcsim/sim/csv.h"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("gcsim_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Outcome cli(const std::string& args, const fs::path& dir) {
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + GCSIM_CLI + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Outcome o;
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.out = gcsim::sim::read_text_file(out);
  o.err = gcsim::sim::read_text_file(err);
  return o;
}

}  // namespace

TEST_CASE("run writes report and trace; replay reproduces the report") {
  const auto dir = scratch("run");
  const auto o = cli("run --strategy sc-ptm-ic --group-size 6 --set sim.horizon=1000 --out \"" +
                         dir.string() + "\"",
                     dir);
  REQUIRE(o.code == 0);
  CHECK(fs::exists(dir / "report.csv"));
  CHECK(fs::exists(dir / "trace.csv"));
  CHECK(o.out == gcsim::sim::read_text_file(dir / "report.csv"));

  const auto r = cli("replay \"" + (dir / "trace.csv").string() + "\" --compare \"" +
                         (dir / "report.csv").string() + "\"",
                     dir);
  CHECK(r.code == 0);
  CHECK(r.out == o.out);
}

TEST_CASE("replay flags a tampered report") {
  const auto dir = scratch("tamper");
  REQUIRE(cli("run --set sim.horizon=500 --out \"" + dir.string() + "\"", dir).code == 0);
  auto report = gcsim::sim::read_text_file(dir / "report.csv");
  const auto pos = report.find("sc-ptm");
  REQUIRE(pos != std::string::npos);
  report.replace(pos, 6, "pmch");
  gcsim::sim::write_text_file(dir / "bad.csv", report);
  const auto r = cli("replay \"" + (dir / "trace.csv").string() + "\" --compare \"" +
                         (dir / "bad.csv").string() + "\"",
                     dir);
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err)["error"] == "replay-mismatch");
}

TEST_CASE("configuration errors are one JSON line with exit code 2") {
  const auto dir = scratch("validate");
  const auto o = cli("validate --set grid.isd_m=-5 --set sim.horizon=0", dir);
  CHECK(o.code == 2);
  const auto j = nlohmann::json::parse(o.err);
  CHECK(j["error"] == "config");
  CHECK(j["keys"] == nlohmann::json::array({"grid.isd_m", "sim.horizon"}));
  CHECK(o.err.find('\n') == o.err.size() - 1);

  const auto unknown = cli("validate --set nope=1", dir);
  CHECK(unknown.code == 2);
  CHECK(nlohmann::json::parse(unknown.err)["keys"][0] == "nope");

  CHECK(cli("validate", dir).code == 0);
}

TEST_CASE("print-config emits a loadable effective configuration") {
  const auto dir = scratch("print");
  const auto o = cli("run --print-config --group-size 11 --set harq.max_retx=2", dir);
  REQUIRE(o.code == 0);
  const auto cfg = gcsim::sim::parse_config(o.out);
  CHECK(cfg.group_size == 11);
  CHECK(cfg.max_retx == 2);
  gcsim::sim::write_text_file(dir / "c.conf", o.out);
  const auto again = cli("run --print-config --config \"" + (dir / "c.conf").string() + "\"", dir);
  CHECK(again.out == o.out);
}

TEST_CASE("sweep writes one CSV") {
  const auto dir = scratch("sweep");
  const auto o = cli("sweep --sizes 2-3 --strategies sc-ptm,sc-ptm-ic --seeds 2 --threads 1 "
                     "--set sim.horizon=300 --out \"" + dir.string() + "\"",
                     dir);
  REQUIRE(o.code == 0);
  CHECK(o.out == gcsim::sim::read_text_file(dir / "sweep.csv"));
  int lines = 0;
  for (char c : o.out) lines += c == '\n';
  CHECK(lines == 1 + 8 + 4);
}

TEST_CASE("usage errors exit nonzero") {
  const auto dir = scratch("usage");
  const auto o = cli("frobnicate", dir);
  CHECK(o.code == 1);
  CHECK(nlohmann::json::parse(o.err)["error"] == "usage");
}
