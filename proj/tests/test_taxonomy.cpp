#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "selpref/errors.hpp"
#include "selpref/taxonomy.hpp"

using namespace selpref;

TEST_CASE("parse drink fixture") {
  auto t = fixtures::drink_taxonomy();
  CHECK(t.synset_count() == 2);
  CHECK(t.arc_count() == 0);
  CHECK(t.membership_count() == 3);
  CHECK(t.word_count() == 2);
  CHECK(t.senses_of("java") == std::vector<std::string>{"BEVERAGE", "ISLAND"});
  CHECK(t.senses_of("water") == std::vector<std::string>{"BEVERAGE"});
}

TEST_CASE("parse empty text") {
  auto t = parse_taxonomy("");
  CHECK(t.synset_count() == 0);
  CHECK(t.word_count() == 0);
  CHECK(t.empty());
}

TEST_CASE("parse is order independent") {
  auto t = parse_taxonomy("hyponym A B\nword x A\nsynset A\nsynset B\n");
  CHECK(t.synset_count() == 2);
  CHECK(t.parents_of("A") == std::vector<std::string>{"B"});
  CHECK(t.senses_of("x") == std::vector<std::string>{"A"});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_taxonomy("synset A\nsynset A\n"), parse_error);
  CHECK_THROWS_AS(parse_taxonomy("hyponym A B\n"), parse_error);
  CHECK_THROWS_AS(parse_taxonomy("synset A\nword A A\n"), parse_error);
  CHECK_THROWS_AS(parse_taxonomy("frobnicate A\n"), parse_error);
  CHECK_THROWS_AS(parse_taxonomy("synset A B\n"), parse_error);
  try {
    parse_taxonomy("synset A\nsynset B\nbogus\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("two-node cycle is rejected") {
  const char* text = "synset A\nsynset B\nhyponym A B\nhyponym B A\n";
  CHECK_THROWS_WITH_AS(parse_taxonomy(text),
                       doctest::Contains("cycle"), data_error);
}

TEST_CASE("self loop is a cycle") {
  CHECK_THROWS_AS(parse_taxonomy("synset A\nhyponym A A\n"), data_error);
}

TEST_CASE("ancestors on the eat fixture") {
  auto t = fixtures::eat_taxonomy();
  CHECK(t.ancestors("meat") ==
        std::set<std::string>{"MEAT_CLASS", "FOOD", "CONTENT", "COGNITION"});
  CHECK(t.ancestors("FOOD") == std::set<std::string>{"FOOD"});
  CHECK(t.ancestors("apple") == std::set<std::string>{"FRUIT", "FOOD"});
  CHECK_THROWS_AS(t.ancestors("nosuch"), data_error);
}

TEST_CASE("classes_count matches the frequency-splitting example") {
  auto t = fixtures::eat_taxonomy();
  CHECK(t.classes_count("meat") == 4);
  CHECK(t.classes_count("bagel") == 2);
  auto single = parse_taxonomy("synset ONLY\nword w ONLY\n");
  CHECK(single.classes_count("w") == 1);
}

TEST_CASE("ancestral subgraph of a single word") {
  auto t = fixtures::eat_taxonomy();
  auto sub = t.ancestral_subgraph({"apple"});
  CHECK(sub.synsets() == std::vector<std::string>{"FOOD", "FRUIT"});
  CHECK(sub.words() == std::vector<std::string>{"apple"});
  CHECK(sub.arc_count() == 1);
  CHECK(sub.is_ancestral());
}

TEST_CASE("ancestral subgraph over all words is the whole taxonomy") {
  auto t = fixtures::eat_taxonomy();
  auto sub = t.ancestral_subgraph(t.words());
  CHECK(sub.synsets() == t.synsets());
  CHECK(sub.words() == t.words());
  CHECK(sub.arc_count() == t.arc_count());
  CHECK(sub.membership_count() == t.membership_count());
}

TEST_CASE("drink taxonomy is already ancestral") {
  auto t = fixtures::drink_taxonomy();
  auto sub = t.ancestral_subgraph({"java", "water"});
  CHECK(sub.synsets() == t.synsets());
  CHECK(sub.membership_count() == t.membership_count());
}

TEST_CASE("ancestral subgraph is idempotent") {
  auto t = fixtures::eat_taxonomy();
  auto once = t.ancestral_subgraph({"meat", "apple"});
  auto twice = once.ancestral_subgraph({"meat", "apple"});
  CHECK(once.synsets() == twice.synsets());
  CHECK(once.words() == twice.words());
  CHECK(once.arc_count() == twice.arc_count());
  CHECK(once.membership_count() == twice.membership_count());
  CHECK_THROWS_AS(t.ancestral_subgraph({"nosuch"}), data_error);
}

TEST_CASE("subgraph extraction never adds nodes and ancestors are monotone") {
  auto t = fixtures::eat_taxonomy();
  auto a = t.ancestors("apple");
  auto both = t.ancestors("apple");
  for (const auto& s : t.ancestors("meat")) both.insert(s);
  for (const auto& s : a) CHECK(both.count(s) == 1);
  auto sub = t.ancestral_subgraph({"apple", "meat"});
  CHECK(sub.synset_count() <= t.synset_count());
  for (const auto& s : sub.synsets()) CHECK(t.has_synset(s));
}

TEST_CASE("topological order puts parents first") {
  auto t = fixtures::eat_taxonomy();
  auto order = t.topological_synsets();
  CHECK(order.size() == t.synset_count());
  auto pos = [&order](const std::string& id) {
    return std::find(order.begin(), order.end(), id) - order.begin();
  };
  CHECK(pos("FOOD") < pos("FRUIT"));
  CHECK(pos("COGNITION") < pos("CONTENT"));
}

TEST_CASE("classes_count is at least the number of direct senses") {
  auto t = fixtures::eat_taxonomy();
  for (const auto& w : t.words())
    CHECK(t.classes_count(w) >= t.senses_of(w).size());
}
