#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gitq/cli.hpp"

using namespace gitq;

namespace {

Json json_of(const cli::CommandResult& r) { return Json::parse(r.output); }

}  // namespace

TEST_CASE("chambers command") {
  const auto r = cli::run({"chambers", "--n", "5", "--bound", "40", "--json"});
  REQUIRE(r.exit_code == cli::kExitOk);
  const auto doc = json_of(r);
  CHECK(doc["schema"] == "gitq/1");
  CHECK(doc["command"] == "chambers");
  CHECK(doc["status"] == "ok");
  CHECK(doc["payload"]["count"] == 6);
  CHECK(doc["payload"]["stabilized"] == true);
  CHECK(doc["diagnostics"].is_array());
}

TEST_CASE("output does not depend on the thread count") {
  const auto a = cli::run({"chambers", "--n", "6", "--bound", "34", "--threads", "1", "--json"});
  const auto b = cli::run({"chambers", "--n", "6", "--bound", "34", "--threads", "4", "--json"});
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("wall and empty statuses") {
  const auto wall = cli::run({"locate", "--m", "2,2,2,1,1,1", "--json"});
  CHECK(wall.exit_code == 0);
  CHECK(json_of(wall)["status"] == "wall");
  const auto empty = cli::run({"classify", "--m", "4,1,1,1,1,1", "--json"});
  CHECK(json_of(empty)["status"] == "empty");
  const auto ok = cli::run({"classify", "--m", "2,2,2,1,1,1", "--json"});
  CHECK(json_of(ok)["payload"]["kind"] == "categorical");
}

TEST_CASE("wallcross command") {
  const auto r = cli::run({"wallcross", "--m", "2,2,2,1,1,1", "--index", "3", "--dir", "-1", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto p = json_of(r)["payload"];
  CHECK(p["m_hat"] == Json::parse(R"(["2","2","1","1","1","1"])"));
  CHECK(p["direction"] == 1);
  CHECK(p["fibers"].size() == 16);
}

TEST_CASE("toric, cone and hilbert commands") {
  const auto t = json_of(cli::run({"toric", "--stratum", "pair", "--json"}));
  CHECK(t["payload"]["relations"].size() == 1);
  const auto c = json_of(cli::run({"cone", "--generators", "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1;1,1,1,-1", "--section",
                                   "1,1,1,1=2", "--drop", "4", "--json"}));
  CHECK(c["payload"]["rays"].size() == 6);
  const auto h = cli::run({"hilbert", "--kmax", "10", "--json"});
  CHECK(h.exit_code == 0);
  CHECK(json_of(h)["payload"]["rows"].size() == 11);
}

TEST_CASE("relations command") {
  const auto r = cli::run({"relations", "--trials", "20", "--seed", "5", "--json"});
  CHECK(r.exit_code == 0);
  CHECK(json_of(r)["payload"]["all_zero"] == true);
}

TEST_CASE("stability from a point file") {
  const auto path = std::filesystem::temp_directory_path() / "gitq_cli_points.txt";
  {
    std::ofstream out(path);
    out << "1 0 0\n1 0 0\n0 1 0\n0 1 0\n0 0 1\n0 0 1\n";
  }
  const auto r = cli::run({"stability", "--m", "2,2,2,2,2,2", "--points", path.string(), "--json"});
  std::filesystem::remove(path);
  REQUIRE(r.exit_code == 0);
  CHECK(json_of(r)["payload"]["verdict"]["status"] == "strictly_semistable");
  const auto missing = cli::run({"stability", "--m", "1,1,1", "--points", "/nonexistent/gitq.txt"});
  CHECK(missing.exit_code == cli::kExitUsage);
}

TEST_CASE("input errors") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"generic", "--m", "1.5,1,1"},
           {"generic", "--m", "1/0,1,1"},
           {"classify", "--m", "2,2,2,1,1,1", "--frobnicate"},
           {"wallcross", "--m", "2,2,2,1,1,1", "--index", "9", "--dir", "1"},
           {"wallcross", "--m", "2,2,2,1,1,1", "--index", "1", "--dir", "2"},
           {"chambers", "--n", "6", "--bound", "20"},
           {"nonsense"},
           {}}) {
    CAPTURE(args.size());
    const auto r = cli::run(args);
    CHECK(r.exit_code == cli::kExitUsage);
    CHECK_FALSE(r.diagnostics.empty());
  }
  const auto j = cli::run({"generic", "--m", "1.5,1,1", "--json"});
  CHECK(json_of(j)["status"] == "error");
}
