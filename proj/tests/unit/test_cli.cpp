// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "qbil/io/literals.hpp"
#include "support.hpp"

using namespace qbil;
using qt::cx;
using qt::dist;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qbil");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("complex literals") {
  CHECK(dist(parse_complex("1.5", 128), cx(1.5, 0, 128)) == 0.0);
  CHECK(dist(parse_complex("1+2i", 128), cx(1, 2, 128)) == 0.0);
  CHECK(dist(parse_complex("1-2i", 128), cx(1, -2, 128)) == 0.0);
  CHECK(dist(parse_complex("-2.5e-3-0.5i", 128), cx("-2.5e-3", "-0.5", 128)) == 0.0);
  CHECK(dist(parse_complex("3/7+1/3i", 128), cx("3/7", "1/3", 128)) == 0.0);
  CHECK(dist(parse_complex("i", 128), cx(0, 1, 128)) == 0.0);
  CHECK(dist(parse_complex("-i", 128), cx(0, -1, 128)) == 0.0);
  CHECK(dist(parse_complex("0.7i", 128), cx("0", "0.7", 128)) == 0.0);
  CHECK(dist(parse_complex("1e+2", 128), cx(100, 0, 128)) == 0.0);
  CHECK_THROWS_AS(parse_complex("", 128), ParseError);
  CHECK_THROWS_AS(parse_complex("1+", 128), ParseError);
  CHECK_THROWS_AS(parse_complex("x", 128), ParseError);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("0.25") == mpq_class(1, 4));
  CHECK(parse_rational("2/3") == mpq_class(2, 3));
  CHECK(parse_rational("-1e-2") == mpq_class(-1, 100));
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("4/6") == mpq_class(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("lists and ranges") {
  CHECK(parse_double_list("0.3,0.5,0.7") == std::vector<double>{0.3, 0.5, 0.7});
  CHECK(parse_range("3..10") == std::pair<long, long>{3, 10});
  CHECK(parse_range("7") == std::pair<long, long>{7, 7});
  CHECK_THROWS_AS(parse_range("10..3"), ParseError);
  CHECK_THROWS_AS(parse_double_list("0.3,,0.5"), ParseError);
}

TEST_CASE("eval") {
  Run r = run({"eval", "theta", "--q", "0.25", "--z", "1", "--output", "json"});
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["command"] == "eval");
  CHECK(j["result"]["value"]["re"].get<std::string>().rfind("1.2112420800258050246084929318", 0) == 0);
  Run g = run({"eval", "qgamma", "--q", "0.5", "--z", "3", "--output", "text"});
  CHECK(g.code == 0);
  CHECK(g.out.find("qgamma = 1.5") != std::string::npos);
  CHECK(run({"eval", "nosuch"}).code == 2);
  CHECK(run({"eval", "qgamma", "--q", "0.5", "--z", "-1"}).code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--identity", "MAIN1", "--q", "0.3", "--beta", "0.6+0.1i", "--w", "0.7+0.2i"}).code == 0);
  // |w| below |q^1/2 beta|
  Run d = run({"verify", "--identity", "MAIN1", "--q", "0.3", "--beta", "0.6", "--w", "0.1"});
  CHECK(d.code == 2);
  CHECK(d.err.find("MAIN1") != std::string::npos);
  CHECK(run({"verify", "--identity", "P1", "--q", "0.3", "--xi", "1+i", "--eta", "2"}).code == 1);
  CHECK(run({"verify", "--identity", "RAMANUJAN", "--q", "0.5", "--a", "4", "--b", "1", "--z", "0.5"}).code == 2);
  CHECK(run({"verify", "--identity", "NOPE", "--q", "0.3"}).code == 2);
  CHECK(run({"verify", "--identity", "MAIN1", "--q", "0.3", "--beta", "zz", "--w", "1"}).code == 2);
  Run h = run({"verify", "--identity", "HORN", "--a", "-0.3", "--c", "1.6", "--z", "-1", "--output", "json"});
  CHECK(h.code == 0);
  auto j = parse(h);
  CHECK(j["result"]["status"] == "pass");
  CHECK(j["result"]["paper_location"].get<std::string>().size() > 0);
}

TEST_CASE("report fields") {
  Run r = run({"verify", "--identity", "CO4", "--q", "0.5", "--beta", "0.7+0.2i", "--w", "0.9-0.4i", "--output",
               "json", "--deterministic"});
  CHECK(r.code == 1);
  auto j = parse(r)["result"];
  for (const char* k : {"identity", "paper_location", "anchor", "params", "lhs", "rhs", "abs_err", "rel_err",
                        "bounds", "pass", "status", "truncation", "precision_bits", "notes"})
    CHECK(j.contains(k));
  CHECK(j["truncation"]["parts"] == 4);
  CHECK_FALSE(parse(r).contains("generated_at"));
  CHECK(parse(run({"verify", "--identity", "JTP", "--q", "0.5", "--z", "2"})).contains("generated_at"));
}

TEST_CASE("formal") {
  CHECK(run({"formal", "--identity", "MAIN1", "--beta", "2/3", "--w", "1/5", "--order", "20"}).code == 0);
  Run p = run({"formal", "--identity", "P1", "--beta", "2/3", "--w", "1/5", "--order", "5", "--output", "json"});
  CHECK(p.code == 1);
  CHECK(parse(p)["result"]["first_failing"]["coefficient"] == "-91/30");
  CHECK(run({"formal", "--identity", "HORN"}).code == 2);
  CHECK(run({"formal", "--identity", "JTP", "--z", "2/3", "--order", "-1"}).code == 2);
}

TEST_CASE("limit argument checks") {
  CHECK(run({"limit", "--b", "0", "--w=-1", "--k", "3..5"}).code == 2);
  CHECK(run({"limit", "--b", "1", "--w", "1", "--k", "3..5"}).code == 2);
  CHECK(run({"limit", "--b", "1", "--w", "0.5", "--k", "3..5"}).code == 2);
  Run few = run({"limit", "--b", "1", "--w=-1", "--k", "3..4", "--richardson-order", "3", "--prec", "128"});
  CHECK(few.code == 3);
  CHECK(parse(few)["result"].contains("extrapolation_error"));
  Run c = run({"limit", "--b", "1", "--w=-1", "--k", "3..6", "--prec", "128", "--output", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("k,q,lhs_re,lhs_im,rhs_re,rhs_im,ratio_re,ratio_im,lhs_err,rhs_err\n", 0) == 0);
}

TEST_CASE("scan") {
  Run e = run({"scan", "--identity", "MAIN1", "--samples", "0", "--output", "json"});
  CHECK(e.code == 0);
  CHECK(parse(e)["result"]["summary"]["total"] == 0);
  std::vector<std::string> args{"scan", "--identity", "JTP,P1", "--samples", "2", "--seed", "9", "--deterministic"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(run({"scan", "--identity", "JTP", "--samples", "2", "--q", "0.3,1.5"}).code == 2);
}

TEST_CASE("precision from environment and flag") {
  setenv("QBILAT_PREC", "128", 1);
  auto j = parse(run({"eval", "qgamma", "--q", "0.5", "--z", "3"}));
  CHECK(j["precision_bits"] == 128);
  j = parse(run({"eval", "qgamma", "--q", "0.5", "--z", "3", "--prec", "320"}));
  CHECK(j["precision_bits"] == 320);
  unsetenv("QBILAT_PREC");
  CHECK(run({"eval", "qgamma", "--q", "0.5", "--z", "3", "--prec", "32"}).code == 2);
}

TEST_CASE("config file and output path") {
  auto dir = std::filesystem::temp_directory_path() / "qbil_cli_test";
  std::filesystem::create_directories(dir);
  auto cfg = dir / "good.ini", bad = dir / "bad.ini", outp = dir / "report.json";
  std::ofstream(cfg) << "prec = 192\nseed = 5\n";
  std::ofstream(bad) << "prec = 192\nbogus = 1\n";
  auto j = parse(run({"--config", cfg.string(), "eval", "qgamma", "--q", "0.5", "--z", "3"}));
  CHECK(j["precision_bits"] == 192);
  CHECK(j["seed"] == 5);
  CHECK(run({"--config", bad.string(), "eval", "qgamma", "--q", "0.5", "--z", "3"}).code == 2);
  Run w = run({"eval", "qgamma", "--q", "0.5", "--z", "3", "--output-path", outp.string()});
  CHECK(w.code == 0);
  std::ifstream in(outp);
  CHECK(nlohmann::json::parse(in)["command"] == "eval");
  std::filesystem::remove_all(dir);
}

TEST_CASE("location lookup and usage") {
  Run r = run({"--paper-location", "MAIN1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("anchor:") != std::string::npos);
  CHECK(run({"--paper-location", "XYZ"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--no-such-flag"}).code == 2);
  CHECK(run({}).code == 2);
}
