#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EPSPECTRA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spectrum rows and determinism") {
    const Run a = run("spectrum --particles 11 --v 1 --c 0.00909090909 --gamma 0:1.5:500");
    CHECK(a.status == 0);
    CHECK(count_lines(a.out) == 6001);
    CHECK(a.out.rfind("param,branch,re,im\n", 0) == 0);
    const Run b = run("spectrum --particles 11 --v 1 --c 0.00909090909 --gamma 0:1.5:500 --threads 3");
    CHECK(a.out == b.out);
  }

  TEST_CASE("spectrum JSON parses") {
    const Run r = run("spectrum -N 4 --c 0.1 --gamma 0:2:5 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["spectra"].size() == 5);
    CHECK(j["metadata"]["vary"] == "gamma");
  }

  TEST_CASE("trajectory") {
    const Run r = run("trajectory -N 11 --c 0.01");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 13);
    CHECK(r.out.rfind("param,branch,re,im\n", 0) == 0);
    CHECK(run("trajectory -N 5 --c 0.001:0.2:20 --refine 3 --format json").status == 0);
  }

  TEST_CASE("charpoly and newton") {
    Run r = run("charpoly -N 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("q[0] = 6400/1 * c^2 + -30600/1 * c^4 + 50625/64 * c^6") != std::string::npos);
    r = run("charpoly -N 3 --c 0");
    CHECK(r.out.find("q[0] = 0\n") != std::string::npos);
    CHECK(run("charpoly -N 3 --v sqrt2").status == 1);
    r = run("newton -N 4 --pert-power 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("rings observed: 1 x size 5") != std::string::npos);
    r = run("newton -N 10 --format json");
    CHECK(nlohmann::json::parse(r.out)["segments"].size() == 2);
  }

  TEST_CASE("ep-map") {
    const Run r = run("ep-map -N 11 --c 0.1/11");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 7);
    CHECK(run("ep-map -N 3 --c 0:0.1:2").status == 2);  // c = 0 point fails, run continues
  }

  TEST_CASE("usage errors exit 1") {
    CHECK(run("spectrum -N 0 --gamma 0:1:3").status == 1);
    CHECK(run("spectrum -N 2 --gamma 1:0:3").status == 1);
    CHECK(run("spectrum -N 2").status == 1);
    CHECK(run("nonsense").status == 1);
    CHECK(run("spectrum -N 2 --gamma 0:1:3 --format xml").status == 1);
  }

  TEST_CASE("verify self-test and selection") {
    CHECK(run("verify --only 3").status == 0);
    const Run zero = run("verify --only 1 --only 8 --tolerance-scale 0");
    CHECK(zero.status == 3);
    CHECK(zero.out.find("FAIL  criterion 1") != std::string::npos);
    const Run again = run("verify --only 1 --only 8 --tolerance-scale 0");
    CHECK(zero.out == again.out);
  }
}
