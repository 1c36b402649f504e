#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fakedeg::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("compute") {
  CHECK(run({"compute", "--group", "d", "--pair", "1,1|1"}).out == "q^3 + q^4 + q^5\n");
  CHECK(run({"compute", "--group", "bc", "--pair", "|"}).out == "1\n");
  const Run all = run({"compute", "--group", "bc", "--pair", "1,1|1", "--route", "all"});
  CHECK(all.code == 0);
  CHECK(all.out ==
        "tuple: q^3 + q^5 + q^7\ndomino_even: q^3 + q^5 + q^7\ndomino_odd: q^3 + q^5 + q^7\nverdict: agree\n");
  CHECK(run({"compute", "--group", "wreath", "--multi", "1|1|1", "--route", "all"}).code == 0);
  CHECK(run({"compute", "--group", "d", "--pair", "2|2", "--c", "2"}).out == "q^2 + q^4 + q^6\n");
}

TEST_CASE("compute json") {
  const Run r = run({"compute", "--group", "bc", "--pair", "1,1|1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pretty"] == "q^3 + q^5 + q^7");
  CHECK(j["coeffs"].size() == 8);
  CHECK(j["route"] == "tuple");
}

TEST_CASE("compute usage errors exit 2") {
  CHECK(run({"compute", "--group", "bc", "--pair", "1,2|1"}).code == 2);
  CHECK(run({"compute", "--group", "bc", "--pair", "1|1", "--route", "shifted"}).code == 2);
  CHECK(run({"compute", "--group", "x", "--pair", "1|1"}).code == 2);
  CHECK(run({"compute", "--group", "d", "--pair", "1|"}).code == 2);
  CHECK(run({"compute", "--group", "d", "--pair", "2|1", "--c", "2"}).code == 2);
  CHECK(run({"compute", "--group", "wreath", "--multi", "1|1", "--d", "3"}).code == 2);
  CHECK(run({"compute", "--group", "bc"}).code == 2);
  const Run bad = run({"compute", "--group", "bc", "--pair", "a|1"});
  CHECK(bad.code == 2);
  CHECK(count_lines(bad.err) == 1);
}

TEST_CASE("parser errors exit 2, help exits 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"map", "--pair", "1|1", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"compute", "--help"}).code == 0);
}

TEST_CASE("enumerate") {
  const Run sdt = run({"enumerate", "--kind", "sdt", "--shape", "2,2,2", "--with-maj"});
  CHECK(sdt.code == 0);
  CHECK(sdt.out.find("maj=1") != std::string::npos);
  CHECK(sdt.out.find("maj=2") != std::string::npos);
  CHECK(sdt.out.find("maj=3") != std::string::npos);
  CHECK(sdt.out.ends_with("count: 3\n"));
  CHECK(run({"enumerate", "--kind", "sdt", "--shape", "2,1"}).out == "count: 0\n");
  CHECK(run({"enumerate", "--kind", "syt", "--shape", "3", "--with-maj"}).out == "[[1,2,3]]  maj=0\ncount: 1\n");
  CHECK(run({"enumerate", "--kind", "tuple", "--shape", "1,1|1"}).out.ends_with("count: 3\n"));
  CHECK(run({"enumerate", "--kind", "sdt", "--shape", "1,2"}).code == 2);
  CHECK(run({"enumerate", "--kind", "xyz", "--shape", "1"}).code == 2);
}

TEST_CASE("map") {
  CHECK(run({"map", "--pair", "1,1|1"}).out == "rho1 = (2,2,2)\nrho2 = (3,2,2)\n");
  CHECK(run({"map", "--pair", "1|1,1"}).out.starts_with("rho1 = (2,2,1,1)\n"));
  CHECK(run({"map", "--pair", "|"}).out == "rho1 = ()\nrho2 = (1)\n");
  CHECK(run({"map", "--pair", "1"}).code == 2);
}

TEST_CASE("explain") {
  bool found = false;
  for (int i = 1; i <= 30; ++i) {
    const Run r = run({"explain", "--shape", "3,3,3,3", "--index", std::to_string(i)});
    REQUIRE(r.code == 0);
    CHECK(r.out.ends_with("maj preserved: true\n"));
    if (r.out.find("(Y1,Y2) = [[4],[6]] ; [[1,3],[2,5]]") != std::string::npos) {
      found = true;
      CHECK(r.out.find("(Z1,Z2) = [[3],[4]] ; [[1,5],[2,6]]") != std::string::npos);
      CHECK(r.out.find("swaps: 3-4 5-6 4-5") != std::string::npos);
    }
  }
  CHECK(found);
  const Run single = run({"explain", "--shape", "2"});
  CHECK(single.out.find("swaps: none") != std::string::npos);
  CHECK(single.out.find("piC-H3") != std::string::npos);
  CHECK(run({"explain", "--shape", "3,3,3,3", "--index", "31"}).code == 2);
  CHECK(run({"explain", "--shape", "3,3,3,3", "--index", "0"}).code == 2);
  CHECK(run({"explain", "--shape", "2,1"}).code == 2);
  const Run odd = run({"explain", "--shape", "3,2,2", "--index", "2"});
  CHECK(odd.out.find("type B") != std::string::npos);
  CHECK(odd.out.ends_with("maj preserved: true\n"));
}

TEST_CASE("verify") {
  const Run thm2 = run({"verify", "--suite", "thm2", "--max-n", "4"});
  CHECK(thm2.code == 0);
  CHECK(count_lines(thm2.out) == 1 + 2 + 5 + 10 + 20);
  CHECK(nlohmann::json::parse(thm2.out.substr(0, thm2.out.find('\n')))["agree"] == true);
  CHECK(run({"verify", "--suite", "poincare", "--max-n", "4"}).code == 0);
  CHECK(run({"verify", "--suite", "all", "--max-n", "1"}).code == 0);
  CHECK(run({"verify", "--suite", "thm3"}).code == 2);
  CHECK(run({"verify", "--suite", "thm1", "--max-n", "-1"}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "fakedeg_cli_verify.jsonl";
  const Run to_file = run({"verify", "--suite", "cor1", "--max-n", "3", "--out", path.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::string first;
  REQUIRE(std::getline(in, first));
  CHECK(nlohmann::json::parse(first)["suite"] == "cor1");
  std::filesystem::remove(path);
}

TEST_CASE("poincare") {
  CHECK(run({"poincare", "--group", "bc", "--n", "1"}).out == "1 + q\n");
  CHECK(run({"poincare", "--group", "d", "--n", "2"}).out == "1 + 2q + q^2\n");
  CHECK(run({"poincare", "--group", "wreath", "--d", "3", "--n", "1"}).out == "1 + q + q^2\n");
  CHECK(run({"poincare", "--group", "d", "--n", "1"}).code == 2);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"verify", "--suite", "bijections", "--max-n", "3"};
  CHECK(run(args).out == run(args).out);
}
