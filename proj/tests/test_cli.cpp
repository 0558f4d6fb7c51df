#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(LEVIBRANCH_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!r.out.empty() && r.out.back() == '\n') r.out.pop_back();
  return r;
}

}  // namespace

TEST_CASE("compute prints single values") {
  auto m = run("compute m --type A2 --alpha 1,0 --beta 0,1 --gamma 0,0");
  CHECK(m.code == 0);
  CHECK(m.out == "q^2 + q + 1");
  auto c = run("compute c --type A1 --levi none --mu 1 --lambda -1");
  CHECK(c.code == 0);
  CHECK(c.out == "v");
  CHECK(run("compute r --type A2 --levi 1 --mu 1,1 --lambda 0,0").out == "1");
  CHECK(run("compute n --type A2 --alpha 1,1 --beta 1,1 --gamma 1,1").out == "2");
  CHECK(run("compute n --type A2 --levi 1 --mu 1,0 --lambda 0,-1 --nu auto").out == "1");
}

TEST_CASE("compute --json") {
  auto c = run("compute c --type A1 --levi none --mu 1 --lambda 1 --json");
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out) == nlohmann::json::parse(R"({"exponents_of_v":{"1":1}})"));
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run("compute m --type E8 --alpha 1 --beta 1 --gamma 1").code == 2);
  CHECK(run("compute r --type A2 --levi 1 --mu 1,x --lambda 0,0").code == 2);
  CHECK(run("compute r --type A2 --levi 4 --mu 1,0 --lambda 1,0").code == 2);
  CHECK(run("verify --type A2 --checks nonsense").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("verify writes a report and exits 0 on success") {
  const auto path = std::filesystem::temp_directory_path() / "levibranch_cli_report.json";
  std::filesystem::remove(path);
  auto v = run("verify --type A1 --max-height 2 --no-timings --out " + path.string());
  CHECK(v.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto report = nlohmann::json::parse(in);
  CHECK(report["schema"] == 1);
  CHECK(report["summary"]["failed"] == 0);
  CHECK(report["config"]["type"] == "A1");
  CHECK_FALSE(report["records"].empty());
  CHECK_FALSE(report["records"][0].contains("timing_ms"));
  std::filesystem::remove(path);
}
