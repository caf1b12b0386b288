#include "doctest.h"
#include "support.hpp"

#include "opforge/bijections.hpp"
#include "opforge/systems.hpp"

#include <map>
#include <set>

using namespace opforge;

namespace {

PlanarTree T(std::string_view s) { return parse_tree(s); }

std::map<std::string, std::string> as_map(const std::vector<std::pair<std::string, std::string>>& pairs) {
  return {pairs.begin(), pairs.end()};
}

}  // namespace

TEST_CASE("pbt text") {
  const Pbt b = parse_pbt("((••)•)");
  CHECK(b.internal_vertices() == 2);
  CHECK(to_string(b) == "((••)•)");
  CHECK(parse_pbt("((* *)*)") == b);
  CHECK(b.left() == parse_pbt("(••)"));
  CHECK(b.right().is_bullet());
  CHECK_THROWS(Pbt::bullet().left());
  CHECK_THROWS_AS(parse_pbt("(••"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pbt("(•)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pbt("••"), std::invalid_argument);
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int k = 0; k <= 5; ++k) CHECK(all_pbts(k).size() == catalan[k]);
}

TEST_CASE("Zin tables") {
  for (int n : {3, 4, 5}) {
    const auto golden = testing::read_tsv("zin_n" + std::to_string(n) + ".tsv");
    CAPTURE(n);
    CHECK(golden.size() == dim_formula("Zin", n));
    CHECK(as_map(correspondence("Zin", n)) == as_map(golden));
  }
  CHECK(to_string(zin_to_pbt(T("1"))) == "(••)");
  CHECK(to_string(zin_to_pbt(T("y(y(1,1),x(1,1))"))) == "((••)(•(••)))");
}

TEST_CASE("Zin bijection round trips") {
  for (int n = 1; n <= 8; ++n) {
    std::set<Pbt> images;
    for (const auto& t : normal_forms("Zin", n)) {
      const Pbt b = zin_to_pbt(t);
      CHECK(b.internal_vertices() == n);
      CHECK(pbt_to_zin(b) == t);
      images.insert(b);
    }
    CHECK(images.size() == all_pbts(n).size());
  }
  for (const auto& b : all_pbts(4)) CHECK(zin_to_pbt(pbt_to_zin(b)) == b);
  CHECK_THROWS_AS(zin_to_pbt(T("x(1,x(1,1))")), std::invalid_argument);
  CHECK_THROWS_AS(pbt_to_zin(Pbt::bullet()), std::invalid_argument);
}

TEST_CASE("words") {
  CHECK(is_dyck("EENN"));
  CHECK_FALSE(is_dyck("ENNE"));
  CHECK(is_reflected_dyck("NNEE"));
  CHECK(is_balanced("NEEN"));
  CHECK_FALSE(is_balanced("EEN"));
  CHECK_FALSE(is_balanced("EXNN"));
  CHECK(balanced_words(2) == std::vector<std::string>{"EENN", "ENEN", "ENNE", "NEEN", "NENE", "NNEE"});
  CHECK(balanced_words(0) == std::vector<std::string>{""});
}

TEST_CASE("delta maps") {
  CHECK(delta_x(T("x(x(1,1),1)")) == "EENN");
  CHECK(delta_x(T("x(1,x(1,1))")) == "ENEN");
  CHECK(delta_y(T("y(1,y(1,1))")) == "NENE");
  CHECK(delta_x(T("1")).empty());
  CHECK_THROWS_AS(delta_x(T("y(1,1)")), std::invalid_argument);
  CHECK_THROWS_AS(delta_x_inverse("NE"), std::invalid_argument);
  CHECK_THROWS_AS(delta_y_inverse("EN"), std::invalid_argument);
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : all_trees(n, "x")) {
      CHECK(is_dyck(delta_x(t)));
      CHECK(delta_x_inverse(delta_x(t)) == t);
    }
  for (const auto& t : all_trees(5, "y")) CHECK(delta_y_inverse(delta_y(t)) == t);
}

TEST_CASE("Bicom tables") {
  for (int n : {3, 4}) {
    const auto golden = testing::read_tsv("bicom_n" + std::to_string(n) + ".tsv");
    CAPTURE(n);
    CHECK(golden.size() == dim_formula("Bicom", n));
    CHECK(as_map(correspondence("Bicom", n)) == as_map(golden));
  }
}

TEST_CASE("Bicom bijection round trips") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> words;
    for (const auto& t : normal_forms("Bicom", n)) {
      const std::string w = bicom_to_word(t);
      CHECK(w.size() == static_cast<std::size_t>(2 * (n - 1)));
      CHECK(word_to_bicom(w) == t);
      words.insert(w);
    }
    const auto all = balanced_words(n - 1);
    CHECK(words == std::set<std::string>(all.begin(), all.end()));
    for (const auto& w : all) CHECK(bicom_to_word(word_to_bicom(w)) == w);
  }
  CHECK_THROWS_AS(word_to_bicom("EEN"), std::invalid_argument);
  CHECK_THROWS_AS(bicom_to_word(T("x(1,y(1,1))")), std::invalid_argument);
}

TEST_CASE("spine reading") {
  // one primitive factor per spine vertex, so this is a bijection as well
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> words;
    for (const auto& t : normal_forms("Bicom", n)) words.insert(bicom_spine_word(t));
    const auto all = balanced_words(n - 1);
    CHECK(words == std::set<std::string>(all.begin(), all.end()));
  }
  CHECK(bicom_spine_word(T("x(x(1,1),1)")) == "ENEN");
  CHECK(bicom_spine_word(T("x(1,x(1,1))")) == "EENN");
  CHECK(bicom_spine_word(T("y(x(1,1),1)")) == "ENNE");
  CHECK(bicom_spine_word(T("y(x(1,1),1)")) == bicom_to_word(T("y(x(1,1),1)")));
}

TEST_CASE("Flex and the L-operad") {
  for (int n = 1; n <= 8; ++n) {
    const auto l = normal_forms("L", n);
    const std::set<PlanarTree> lset(l.begin(), l.end());
    std::set<PlanarTree> images;
    for (const auto& t : normal_forms("Flex", n)) {
      const PlanarTree s = flex_to_L(t);
      CHECK(lset.contains(s));
      CHECK(L_to_flex(s) == t);
      images.insert(s);
    }
    CHECK(images == lset);
  }
  CHECK(flex_to_L(T("y(1,1)")) == T("t(1,1)"));
  CHECK(flex_to_L(T("x(1,1)")) == T("z(1,1)"));
  CHECK_THROWS_AS(flex_to_L(T("y(1,y(1,1))")), std::invalid_argument);
  CHECK_THROWS_AS(L_to_flex(T("t(1,z(1,1))")), std::invalid_argument);
  CHECK(as_map(correspondence("AntiFlex", 4)) == as_map(correspondence("Flex", 4)));
}

TEST_CASE("correspondence text") {
  const auto pairs = correspondence("Zin", 2);
  REQUIRE(pairs.size() == 2);
  CHECK(format_correspondence(pairs) == pairs[0].first + "\t" + pairs[0].second + "\n" + pairs[1].first + "\t" +
                                            pairs[1].second + "\n");
  CHECK_THROWS_AS(correspondence("L", 3), std::invalid_argument);
}
