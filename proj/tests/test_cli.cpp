#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "opforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = opforge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"dims", "Zin"}).code == 2);
  CHECK(run({"criterion", "Lie"}).code == 2);
  CHECK(run({"normal-forms", "Nov", "3"}).code == 2);
  CHECK(run({"oracle", "Zin", "--max-n", "40"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("criterion") != std::string::npos);
}

TEST_CASE("criterion") {
  const Run leib = run({"criterion", "Leib"});
  CHECK(leib.code == 0);
  CHECK(leib.out.starts_with("Leib: dim_R=6 dim_F=3 dim_P3=6 admits=false\n"));
  const Run zin = run({"criterion", "Zin", "--json"});
  CHECK(zin.code == 0);
  const auto j = nlohmann::json::parse(zin.out);
  CHECK(j["admits"] == true);
  const auto all = nlohmann::json::parse(run({"criterion", "all", "--json"}).out);
  REQUIRE(all.is_array());
  CHECK(all.size() == 10);
}

TEST_CASE("manin") {
  const Run r = run({"manin", "Alt", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["operad"] == "Alt");
  CHECK(j["quotient"]["equals_operad"] == false);
  CHECK(j["quotient"]["dim_3"] == 9);
  CHECK(j["white_product"]["dim_relations"].get<int>() + j["white_product"]["dim_3"].get<int>() == 48);
  const Run text = run({"manin", "Zin"});
  CHECK(text.out.find("quotient equals Zin: true") != std::string::npos);
}

TEST_CASE("dims") {
  const Run r = run({"dims", "Flex", "--max-n", "6", "--oracle-max", "4", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("n,grammar_count,formula,oracle_dim\n"));
  CHECK(r.out.find("\n5,143,143,\n") != std::string::npos);
  CHECK(r.out.find("\n4,30,30,30\n") != std::string::npos);
  CHECK(count_lines(r.out) == 7);
}

TEST_CASE("normal forms and bijections") {
  const Run nf = run({"normal-forms", "Bicom", "4"});
  CHECK(nf.code == 0);
  CHECK(count_lines(nf.out) == 20);
  const Run b = run({"bijection", "Zin", "3"});
  CHECK(b.code == 0);
  CHECK(b.out.find("x(x(1,1),1)\t(((••)•)•)\n") != std::string::npos);
  CHECK(run({"bijection", "L", "3"}).code == 2);
}

TEST_CASE("confluence") {
  const Run r = run({"confluence", "Zin", "--max-arity", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Zin: 4 overlaps, 0 failures") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("oracle") {
  const Run r = run({"oracle", "NcZin", "--max-n", "4", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "system,n,free_dim,ideal_rank,operad_dim\nNcZin,1,1,0,1\nNcZin,2,2,0,2\nNcZin,3,8,3,5\nNcZin,4,40,26,14\n");
}

TEST_CASE("certify") {
  const Run r = run({"certify", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("certify: all checks passed\n"));
}

TEST_CASE("deterministic output") {
  CHECK(run({"criterion", "all"}).out == run({"criterion", "all"}).out);
  CHECK(run({"bijection", "Bicom", "5"}).out == run({"bijection", "Bicom", "5"}).out);
}
