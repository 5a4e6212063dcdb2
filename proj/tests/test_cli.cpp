#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SKEINLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kDeltaK = "(v^-1 + -s^-1 + s^1 + -v^1)/(-s^-1 + s^1)\n";

}  // namespace

TEST_CASE("eigenvalues and evaluation", "[cli]") {
  auto c = run("eigen c --partition 0");
  CHECK(c.code == 0);
  CHECK(c.out == kDeltaK);
  auto k = run("skein kauffman corpus:unknot");
  CHECK(k.code == 0);
  CHECK(k.out == kDeltaK);
  CHECK(run("skein homfly corpus:unlink2").code == 0);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run("skein homfly corpus:trefoil --max-crossings 2").code == 3);
  CHECK(run("skein homfly corpus:nosuchlink").code == 2);
  CHECK(run("bogus").code != 0);
  CHECK(run("eigen c --partition 2,x").code != 0);
  CHECK(run("verify rudolph corpus:trefoil").code == 0);
}

TEST_CASE("corpus listing", "[cli]") {
  auto r = run("corpus list");
  CHECK(r.code == 0);
  CHECK(r.out.find("trefoil  components=1 crossings=3 writhe=3\n") != std::string::npos);
  CHECK(r.out.find("hopf_minus  components=2 crossings=2 writhe=-2\n") != std::string::npos);
}

TEST_CASE("expansion plans as JSON", "[cli]") {
  auto r = run("expand --partition 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["target"] == "2");
  CHECK(j["rho"] == "1");
  CHECK(j["terms"].size() == 3);
  auto nested = nlohmann::json::parse(run("expand --partition 2,1 --rho 1,1").out);
  CHECK(nested["inner"]["target"] == "1,1");
}

TEST_CASE("verification output", "[cli]") {
  auto text = run("verify rudolph corpus:hopf_plus");
  CHECK(text.code == 0);
  CHECK(text.out.rfind("rudolph hopf_plus: PASS\n", 0) == 0);
  auto json = run("verify main corpus:unknot --partition 1,1 --max-crossings 64 --format json");
  REQUIRE(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["pass"] == true);
  CHECK(j["stages"].size() == 4);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(run("verify main corpus:unknot --partition 1,1").code == 3);
}

TEST_CASE("repeated runs are byte identical", "[cli]") {
  for (const char* args : {"skein kauffman corpus:figure_eight", "eigen table --max-size 3",
                           "verify eigen-consistency --format json", "branching --rho 1"}) {
    INFO(args);
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
