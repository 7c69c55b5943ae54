#ifndef SELPREF_TESTS_GENERATORS_HPP
#define SELPREF_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "selpref/inference.hpp"
#include "selpref/network.hpp"
#include "selpref/taxonomy.hpp"

namespace gen {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::string node_name(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n%03d", i);
  return buf;
}

// Random DAG network: node i draws up to max_fan_in parents among 0..i-1.
// All CPT entries stay strictly inside (0, 1), so every evidence assignment
// has positive probability.
inline selpref::Network random_network(std::mt19937_64& rng, int max_nodes = 18,
                                       int max_fan_in = 4) {
  int n = uniform_int(rng, 3, max_nodes);
  selpref::CptParams params{0.7 + 0.25 * uniform01(rng), 0.02 + 0.3 * uniform01(rng)};
  std::vector<selpref::NetworkNode> nodes;
  for (int i = 0; i < n; ++i) {
    selpref::NetworkNode node{node_name(i), selpref::NodeKind::synset, {}};
    int fan = uniform_int(rng, 0, std::min(i, max_fan_in));
    std::set<int> parents;
    while (static_cast<int>(parents.size()) < fan) parents.insert(uniform_int(rng, 0, i - 1));
    node.parents.assign(parents.begin(), parents.end());
    nodes.push_back(std::move(node));
  }
  selpref::Network net(std::move(nodes), params);
  for (int i = 0; i < n; ++i)
    if (uniform01(rng) < 0.3) net.set_leak(i, 0.01 + 0.4 * uniform01(rng));
  return net;
}

// Random true/false evidence on a subset of the network's childless nodes.
inline selpref::Evidence random_leaf_evidence(std::mt19937_64& rng,
                                              const selpref::Network& net) {
  std::vector<int> child_count(net.size(), 0);
  for (std::size_t i = 0; i < net.size(); ++i)
    for (int p : net.node(static_cast<int>(i)).parents) ++child_count[p];
  selpref::Evidence e;
  for (std::size_t i = 0; i < net.size(); ++i)
    if (child_count[i] == 0 && uniform01(rng) < 0.5)
      e.observed[net.node(static_cast<int>(i)).id] = uniform01(rng) < 0.5;
  return e;
}

// Forest-shaped network (every node has at most one child) containing one
// node with fan-in in [min_fan_in, max_fan_in].  Because all ancestries are
// disjoint, evidence-free marginals have the closed form used by
// forest_marginals below, which is what lets fan-ins beyond enumeration or
// dense-elimination reach be checked exactly.
inline selpref::Network random_forest_network(std::mt19937_64& rng, int min_fan_in = 10,
                                              int max_fan_in = 25) {
  int fan = uniform_int(rng, min_fan_in, max_fan_in);
  selpref::CptParams params{0.8 + 0.15 * uniform01(rng), 0.05 + 0.2 * uniform01(rng)};
  std::vector<selpref::NetworkNode> nodes;
  std::vector<int> hub_parents;
  for (int k = 0; k < fan; ++k) {
    std::vector<int> grandparents;
    if (uniform01(rng) < 0.4) {
      int count = uniform_int(rng, 1, 2);
      for (int g = 0; g < count; ++g) {
        grandparents.push_back(static_cast<int>(nodes.size()));
        nodes.push_back({node_name(static_cast<int>(nodes.size())),
                         selpref::NodeKind::synset,
                         {}});
      }
    }
    hub_parents.push_back(static_cast<int>(nodes.size()));
    nodes.push_back({node_name(static_cast<int>(nodes.size())), selpref::NodeKind::synset,
                     grandparents});
  }
  nodes.push_back({"hub", selpref::NodeKind::synset, hub_parents});
  int extras = uniform_int(rng, 0, 2);  // disconnected singletons
  for (int k = 0; k < extras; ++k)
    nodes.push_back({node_name(static_cast<int>(nodes.size())),
                     selpref::NodeKind::synset,
                     {}});
  return selpref::Network(std::move(nodes), params);
}

// Exact evidence-free marginals for forests: with disjoint parent ancestries
// the parents are independent, so P(some parent true) factorizes.
inline std::map<std::string, double> forest_marginals(const selpref::Network& net) {
  std::vector<double> m(net.size());
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    double all_false = 1.0;
    for (int p : net.node(static_cast<int>(i)).parents) all_false *= 1.0 - m[p];
    double q = 1.0 - all_false;
    double likely = net.node(static_cast<int>(i)).kind == selpref::NodeKind::aux_or
                        ? 1.0
                        : net.params().likely;
    m[i] = likely * q + net.leak(static_cast<int>(i)) * (1.0 - q);
    out[net.node(static_cast<int>(i)).id] = m[i];
  }
  return out;
}

// Random layered taxonomy.  Level sizes shrink upward; a small fraction of
// bottom-level synsets get a second parent; every childless synset gets one
// member word so the result is ancestral.
inline selpref::Taxonomy random_taxonomy(std::mt19937_64& rng,
                                         const std::vector<int>& level_sizes,
                                         double extra_parent_prob = 0.03) {
  selpref::TaxonomyBuilder b;
  std::vector<std::vector<std::string>> levels;
  int serial = 0;
  for (std::size_t depth = 0; depth < level_sizes.size(); ++depth) {
    std::vector<std::string> level;
    for (int k = 0; k < level_sizes[depth]; ++k) {
      std::string id = "S" + std::to_string(depth) + "_" + std::to_string(serial++);
      b.add_synset(id);
      if (depth > 0) {
        const auto& above = levels[depth - 1];
        std::string parent = above[uniform_int(rng, 0, static_cast<int>(above.size()) - 1)];
        b.add_arc(id, parent);
        bool bottom = depth + 1 == level_sizes.size();
        if (bottom && uniform01(rng) < extra_parent_prob) {
          std::string second = above[uniform_int(rng, 0, static_cast<int>(above.size()) - 1)];
          if (second != parent) b.add_arc(id, second);
        }
      }
      level.push_back(id);
    }
    levels.push_back(std::move(level));
  }
  selpref::Taxonomy skeleton = b.build();
  int word_serial = 0;
  for (const auto& id : skeleton.synsets())
    if (skeleton.children_of(id).empty())
      b.add_membership("w" + std::to_string(word_serial++), id);
  return b.build();
}

}  // namespace gen

#endif
