#ifndef SELPREF_TESTS_FIXTURES_HPP
#define SELPREF_TESTS_FIXTURES_HPP

#include <string>

#include "selpref/corpus.hpp"
#include "selpref/network.hpp"
#include "selpref/taxonomy.hpp"

namespace fixtures {

// Two sibling concepts, one ambiguous word: the classic explaining-away net.
inline const char* kDrinkTaxonomy = R"(# drink fixture
synset BEVERAGE
synset ISLAND
word java BEVERAGE
word java ISLAND
word water BEVERAGE
)";

inline const char* kDrinkObservations =
    "drink\tobject\tjava\t1\n"
    "drink\tobject\twater\t1\n";

// Small food/cognition hierarchy with one ambiguous word (meat).
inline const char* kEatTaxonomy = R"(# eat fixture
synset FOOD
synset COGNITION
synset FRUIT
synset BREAD
synset DAIRY
synset MEAT_CLASS
synset CONTENT
hyponym FRUIT FOOD
hyponym BREAD FOOD
hyponym DAIRY FOOD
hyponym MEAT_CLASS FOOD
hyponym CONTENT COGNITION
word apple FRUIT
word bagel BREAD
word cheese DAIRY
word meat MEAT_CLASS
word meat CONTENT
)";

inline const char* kEatObservations =
    "eat\tobject\tmeat\t1\n"
    "eat\tobject\tapple\t1\n"
    "eat\tobject\tbagel\t1\n"
    "eat\tobject\tcheese\t1\n";

inline selpref::Taxonomy drink_taxonomy() { return selpref::parse_taxonomy(kDrinkTaxonomy); }
inline selpref::Taxonomy eat_taxonomy() { return selpref::parse_taxonomy(kEatTaxonomy); }
inline selpref::ObservationStore drink_observations() {
  return selpref::parse_observations(kDrinkObservations);
}
inline selpref::ObservationStore eat_observations() {
  return selpref::parse_observations(kEatObservations);
}

// ROOT -> c1 -> c2 -> ... chain network of the given length.
inline selpref::Network chain_network(int length, selpref::CptParams params) {
  std::vector<selpref::NetworkNode> nodes;
  for (int i = 0; i < length; ++i) {
    selpref::NetworkNode node;
    node.id = i == 0 ? "ROOT" : "c" + std::to_string(i);
    node.kind = selpref::NodeKind::synset;
    if (i > 0) node.parents = {i - 1};
    nodes.push_back(std::move(node));
  }
  return selpref::Network(std::move(nodes), params);
}

}  // namespace fixtures

#endif
