#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmarkov_cli/cli.hpp"

using lmarkov::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lmarkov_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("compute examples") {
  const auto golden = run({"compute", "--n", "2", "--alpha", "0", "--format", "json"});
  CHECK(golden.code == 0);
  const auto j = json_of(golden);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["c"].get<double>() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(j[0]["iterations"].get<int>() >= 1);

  const auto one = run({"compute", "--n", "1", "--alpha", "3", "--format", "csv"});
  CHECK(one.code == 0);
  CHECK(one.out == "n,alpha,c,c_sq,residual,iterations\n1,3,0.5,0.25,0,0\n");

  CHECK(run({"compute", "--n", "0", "--alpha", "1"}).code == 2);
  CHECK(run({"compute", "--n", "3", "--alpha", "-1"}).code == 2);
  CHECK(run({"compute", "--n", "3"}).code == 2);
  CHECK(run({"compute", "--n", "3", "--alpha", "0", "--format", "xml"}).code == 2);
  CHECK(run({"compute", "--n", "3", "--alpha", "0", "--tol", "1e-20"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("compute") != std::string::npos);
}

TEST_CASE("table output is aligned with a header rule") {
  const auto t = run({"compute", "--n", "2", "--alpha", "0"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("n  alpha  c", 0) == 0);
  CHECK(t.out.find("\n-  -----  ") != std::string::npos);
}

TEST_CASE("bounds examples") {
  const auto r = run({"bounds", "--n", "3", "--alpha", "2", "--computed", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j.size() == 13);
  CHECK(j[12]["id"] == "computed");

  const auto t = json_of(run({"bounds", "--n", "2", "--alpha", "0", "--computed", "--format", "json"}));
  CHECK(t[0]["id"] == "turan_exact");
  CHECK(t[0]["applicable"] == true);
  CHECK(t[0]["value"].get<double>() == doctest::Approx(t[12]["value"].get<double>()).epsilon(1e-10));

  const auto neg = json_of(run({"bounds", "--n", "3", "--alpha", "-0.5", "--format", "json"}));
  CHECK(neg.size() == 12);
  for (const auto& rec : neg) {
    if (rec["id"] == "theorem11_upper") CHECK(rec["applicable"] == false);
  }
}

TEST_CASE("verify examples and exit codes") {
  const auto t11 = run({"verify", "--suite", "theorem11", "--format", "csv"});
  CHECK(t11.code == 0);
  CHECK(t11.out.rfind("suite,n,alpha,margin,pass,detail\n", 0) == 0);
  CHECK(t11.err.find("all_pass=true") != std::string::npos);

  CHECK(run({"verify", "--suite", "lemma31", "--alpha-min", "1"}).code == 0);
  CHECK(run({"verify", "--suite", "nosuch"}).code == 2);
  CHECK(run({"verify", "--suite", "theorem11", "--n-min", "9", "--n-max", "3"}).code == 2);

  const auto list = json_of(run({"verify", "--suite", "cor12", "--n-min", "3", "--n-max", "4", "--alpha-list",
                                 "2,5", "--format", "json"}));
  CHECK(list.size() == 4);
  CHECK(list[0]["alpha"].get<double>() == 2.0);

  const auto cor13 = run({"verify", "--suite", "cor13", "--n", "3", "--format", "json"});
  CHECK(cor13.code == 0);
  CHECK(json_of(cor13).size() == 10);

  const auto integral = run({"verify", "--suite", "integral_lemma", "--trials", "20", "--format", "json"});
  CHECK(integral.code == 0);
  CHECK(json_of(integral).size() == 20);
}

TEST_CASE("failed checks exit 1, numerical failures exit 3") {
  // A loose solver tolerance leaves c^2 visibly off Turan's exact value.
  const auto loose = run({"bounds", "--n", "30", "--alpha", "0", "--computed", "--tol", "1e-2"});
  CHECK(loose.code == 1);
  CHECK(loose.err.find("turan_exact violated") != std::string::npos);
  CHECK_FALSE(loose.out.empty());

  const auto capped = run({"compute", "--n", "50", "--alpha", "0", "--max-iter", "1"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("did not converge") != std::string::npos);
  CHECK(capped.out.empty());

  const auto obs = run({"verify", "--suite", "bound_ordering"});
  CHECK(obs.code == 0);
  CHECK(obs.err.find("(observational)") != std::string::npos);
}

TEST_CASE("asymptotic examples") {
  const auto two = json_of(run({"asymptotic", "--alpha", "2", "--n-max", "200", "--format", "json"}));
  CHECK(two[0]["c_bessel"].get<double>() == doctest::Approx(1 / std::numbers::pi).epsilon(1e-10));

  const auto zero = run({"asymptotic", "--alpha", "0", "--n-max", "2000", "--format", "json"});
  CHECK(zero.code == 0);
  const auto z = json_of(zero);
  CHECK(z[0]["relative_diff"].get<double>() <= 1e-3);

  const auto cross = json_of(run({"asymptotic", "--alpha", "43.4", "--n-max", "100", "--format", "json"}));
  CHECK(cross[0]["active_branch"] == "cbrt");
  CHECK(cross[0]["alpha_star"].get<double>() == doctest::Approx(43.4).epsilon(1e-3));

  const auto neg = run({"asymptotic", "--alpha", "-0.5", "--n-max", "100", "--format", "json"});
  CHECK(neg.code == 0);
  CHECK(json_of(neg)[0]["c_bessel"] == "nan");

  CHECK(run({"asymptotic", "--alpha", "1", "--n-max", "5"}).code == 2);
}

TEST_CASE("--out and dump files") {
  const auto out = temp_path("out.csv");
  const auto mat = temp_path("a.csv");
  const auto ext = temp_path("p.csv");
  const auto r = run({"compute", "--n", "2", "--alpha", "0", "--format", "csv", "--out", out.string(),
                      "--dump-matrix", mat.string(), "--dump-extremal", ext.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out).rfind("n,alpha,c,c_sq,residual,iterations\n2,0,", 0) == 0);
  CHECK(slurp(mat) == "row,col,value\n1,1,1\n1,2,1\n2,1,1\n2,2,2\n");
  CHECK(slurp(ext).rfind("nu,coefficient\n1,", 0) == 0);
  std::filesystem::remove(out);
  std::filesystem::remove(mat);
  std::filesystem::remove(ext);

  CHECK(run({"compute", "--n", "2", "--alpha", "0", "--out", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("CSV output is bit-stable across runs") {
  const std::vector<std::string> args = {"verify", "--suite", "theoremA", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> lemma = {"verify", "--suite", "integral_lemma", "--seed", "9", "--format", "csv"};
  CHECK(run(lemma).out == run(lemma).out);
}
