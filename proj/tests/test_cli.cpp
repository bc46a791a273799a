#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SL3_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("cli char") {
  auto r = run("char -p 5 --weight 5,-10 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["euler_check"] == true);
  CHECK(run("char -p 5 --weight 2,3 --bundle alpha --format table").code == 0);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run("char -p 4 --weight 1,1").code == 2);
  CHECK(run("char -p 5 --weight '1;1'").code == 2);
  CHECK(run("char -p 5 --weight 1,1 --format xml").code == 2);
  CHECK(run("figure -p 4").code == 2);
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("cli support") {
  auto r = run("support -p 5 --weight 5,-10 -i 1 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["class"] == "NilpotentCone");
  CHECK(j["dim"] == 6);
  auto z = run("support -p 5 --weight -1,0 -i 1 --format json");
  CHECK(z.code == 0);
  CHECK(nlohmann::json::parse(z.out)["zero_module"] == true);
}

TEST_CASE("cli figure") {
  auto a = run("figure -p 5 --box 5 -i 1");
  REQUIRE(a.code == 0);
  CHECK(a.out.find("<svg") != std::string::npos);
  CHECK(a.out.find("data-weight=\"15,-20\"") != std::string::npos);
  CHECK(a.out.find("data-kind=\"S\" data-weight=\"15,-20\" data-source=\"3,-4\">6<") != std::string::npos);
  CHECK(a.out.find("data-kind=\"T\" data-weight=\"18,-17\" data-source=\"3,-4\">7<") != std::string::npos);
  CHECK(run("figure -p 5 --box 5 -i 1").out == a.out);
}

TEST_CASE("cli verify") {
  auto r = run("verify --prop 5.3 -p 5 --box 6 --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["cases"].size() == 14);
  auto z = run("verify --prop 8.7 -p 7 --box 60 --format json");
  CHECK(z.code == 0);
  CHECK(nlohmann::json::parse(z.out)["zero_set"].size() == 2);
  CHECK(run("verify --prop r1-monotone -p 3 --box 6").code == 1);
}

TEST_CASE("cli config file") {
  const std::string path = "cli_test_config.json";
  std::ofstream(path) << R"({"prime": 5, "format": "json", "weight": "5,-10"})";
  auto r = run("char --config " + path);
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["p"] == 5);
  auto o = run("char --config " + path + " -p 3");
  REQUIRE(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["p"] == 3);
  std::remove(path.c_str());
}
