#ifndef SELPREF_NETWORK_HPP
#define SELPREF_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selpref/taxonomy.hpp"

namespace selpref {

// The two-value compact CPT scheme: a node is `likely` true when at least one
// parent is true and `unlikely` (its leak) true otherwise.
struct CptParams {
  double likely = 0.9;
  double unlikely = 0.1;
};

enum class NodeKind { synset, word, aux_or };

const char* to_string(NodeKind kind);

struct NetworkNode {
  std::string id;
  NodeKind kind = NodeKind::synset;
  std::vector<int> parents;  // indices of earlier nodes
};

// Boolean belief network over a taxonomy: one node per synset and word, arcs
// from hypernym to hyponym and from sense to word.  CPT storage is O(1) per
// node regardless of fan-in.  Aux-or nodes are deterministic ORs introduced
// by or_cascade.  Nodes are stored in topological order (parents first).
class Network {
 public:
  Network(std::vector<NetworkNode> nodes, CptParams params);

  // Maps a validated ancestral sub-taxonomy into a network.  Synset nodes come
  // first (topological order), then word nodes sorted by lemma.
  static Network build(const Taxonomy& t, CptParams params,
                       bool allow_non_ancestral = false);

  std::size_t size() const { return nodes_.size(); }
  const NetworkNode& node(int i) const { return nodes_[i]; }
  const std::vector<NetworkNode>& nodes() const { return nodes_; }
  const CptParams& params() const { return params_; }

  bool has_node(const std::string& id) const;
  int index_of(const std::string& id) const;  // throws data_error when unknown

  // Probability the node is true when all parents are false (or the root
  // prior).  Balancing overrides this per node.
  double leak(int i) const { return leak_[i]; }
  void set_leak(int i, double value);

  // P(node = true | parents); aux-or nodes are exact ORs.
  double prob_true(int i, bool any_parent_true) const;

  // The same, keyed by an explicit parent assignment which must cover exactly
  // the node's parents (any order).
  double cpt_entry(const std::string& id,
                   const std::map<std::string, bool>& parent_assignment) const;

  std::vector<int> children_of(int i) const;

  // Diagnostic dump, one line per node:
  //   node <id> <kind> leak=<val> parents=<id,...>
  std::string dump() const;

 private:
  std::vector<NetworkNode> nodes_;
  CptParams params_;
  std::vector<double> leak_;
  std::map<std::string, int> index_;
};

// Rewires every node with more than max_fan_in parents through a balanced
// tree of deterministic aux-or nodes; the joint over original nodes is
// unchanged.  max_fan_in >= 2.
Network or_cascade(const Network& n, int max_fan_in);

struct BalanceOutcome {
  Network network;
  std::vector<std::string> clamped;  // synset nodes whose leak hit a bound
  int sweeps = 0;
  double max_deviation = 0.0;  // |marginal - target| over synset nodes, last sweep
};

// Re-calibrates per-node leaks so every synset node's evidence-free marginal
// is ~target; see balance.cpp for the per-node solve.
BalanceOutcome balance(const Network& n, double target, double tol = 1e-3,
                       int max_sweeps = 10);

}  // namespace selpref

#endif
