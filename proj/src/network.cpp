#include "selpref/network.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>

#include "selpref/errors.hpp"

namespace selpref {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::synset: return "synset";
    case NodeKind::word: return "word";
    case NodeKind::aux_or: return "aux-or";
  }
  return "?";
}

Network::Network(std::vector<NetworkNode> nodes, CptParams params)
    : nodes_(std::move(nodes)), params_(params) {
  if (!(params_.unlikely > 0.0 && params_.unlikely < params_.likely &&
        params_.likely < 1.0))
    throw data_error("invalid CPT parameters: need 0 < unlikely < likely < 1");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& node = nodes_[i];
    if (node.id.empty()) throw data_error("empty node id");
    if (!index_.emplace(node.id, static_cast<int>(i)).second)
      throw data_error("duplicate node id: " + node.id);
    for (int p : node.parents)
      if (p < 0 || p >= static_cast<int>(i))
        throw data_error("node " + node.id + " has a parent out of topological order");
    leak_.push_back(node.kind == NodeKind::aux_or ? 0.0 : params_.unlikely);
  }
}

Network Network::build(const Taxonomy& t, CptParams params, bool allow_non_ancestral) {
  if (t.empty()) throw data_error("cannot build a network from an empty taxonomy");
  if (!allow_non_ancestral && !t.is_ancestral())
    throw data_error("taxonomy is not an ancestral subgraph of its words");

  std::vector<NetworkNode> nodes;
  std::map<std::string, int> pos;
  for (const auto& id : t.topological_synsets()) {
    NetworkNode node{id, NodeKind::synset, {}};
    for (const auto& parent : t.parents_of(id)) node.parents.push_back(pos.at(parent));
    std::sort(node.parents.begin(), node.parents.end());
    pos[id] = static_cast<int>(nodes.size());
    nodes.push_back(std::move(node));
  }
  for (const auto& lemma : t.words()) {
    NetworkNode node{lemma, NodeKind::word, {}};
    for (const auto& sense : t.senses_of(lemma)) node.parents.push_back(pos.at(sense));
    std::sort(node.parents.begin(), node.parents.end());
    nodes.push_back(std::move(node));
  }
  return Network(std::move(nodes), params);
}

bool Network::has_node(const std::string& id) const { return index_.count(id) != 0; }

int Network::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw data_error("unknown node: " + id);
  return it->second;
}

void Network::set_leak(int i, double value) {
  if (nodes_[i].kind == NodeKind::aux_or)
    throw data_error("aux-or nodes have no adjustable leak");
  if (!(value > 0.0 && value < 1.0)) throw data_error("leak must lie in (0, 1)");
  leak_[i] = value;
}

double Network::prob_true(int i, bool any_parent_true) const {
  if (nodes_[i].kind == NodeKind::aux_or) return any_parent_true ? 1.0 : 0.0;
  return any_parent_true ? params_.likely : leak_[i];
}

double Network::cpt_entry(const std::string& id,
                          const std::map<std::string, bool>& parent_assignment) const {
  int i = index_of(id);
  const auto& parents = nodes_[i].parents;
  if (parent_assignment.size() != parents.size())
    throw data_error("parent assignment for " + id + " has the wrong size");
  bool any_true = false;
  for (int p : parents) {
    auto it = parent_assignment.find(nodes_[p].id);
    if (it == parent_assignment.end())
      throw data_error("parent assignment for " + id + " is missing " + nodes_[p].id);
    any_true = any_true || it->second;
  }
  return prob_true(i, any_true);
}

std::vector<int> Network::children_of(int i) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    for (int p : nodes_[j].parents)
      if (p == i) {
        out.push_back(static_cast<int>(j));
        break;
      }
  return out;
}

std::string Network::dump() const {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& node = nodes_[i];
    std::snprintf(buf, sizeof buf, "%.9g", leak_[i]);
    out += "node " + node.id + " " + to_string(node.kind) + " leak=" + buf + " parents=";
    for (std::size_t k = 0; k < node.parents.size(); ++k) {
      if (k) out += ",";
      out += nodes_[node.parents[k]].id;
    }
    out += "\n";
  }
  return out;
}

Network or_cascade(const Network& n, int max_fan_in) {
  if (max_fan_in < 2) throw data_error("max_fan_in must be >= 2");

  std::vector<NetworkNode> nodes;
  std::vector<double> leaks;
  std::vector<int> remap(n.size());  // old index -> new index
  for (std::size_t i = 0; i < n.size(); ++i) {
    NetworkNode node = n.node(static_cast<int>(i));
    for (int& p : node.parents) p = remap[p];
    if (static_cast<int>(node.parents.size()) > max_fan_in) {
      // Reduce the parent layer to a single OR root, chunk by chunk.
      std::vector<int> layer = node.parents;
      int aux_seq = 0;
      while (layer.size() > 1) {
        std::vector<int> next;
        for (std::size_t at = 0; at < layer.size();) {
          std::size_t take = std::min<std::size_t>(max_fan_in, layer.size() - at);
          if (take == 1) {  // stragglers ride along to the next level
            next.push_back(layer[at]);
            ++at;
            continue;
          }
          NetworkNode aux;
          aux.id = node.id + "__or" + std::to_string(aux_seq++);
          aux.kind = NodeKind::aux_or;
          aux.parents.assign(layer.begin() + at, layer.begin() + at + take);
          next.push_back(static_cast<int>(nodes.size()));
          nodes.push_back(std::move(aux));
          leaks.push_back(0.0);
          at += take;
        }
        layer = std::move(next);
      }
      node.parents = layer;
    }
    remap[i] = static_cast<int>(nodes.size());
    nodes.push_back(std::move(node));
    leaks.push_back(n.leak(static_cast<int>(i)));
  }

  Network out(std::move(nodes), n.params());
  for (std::size_t i = 0; i < leaks.size(); ++i)
    if (out.node(static_cast<int>(i)).kind != NodeKind::aux_or)
      out.set_leak(static_cast<int>(i), leaks[i]);
  return out;
}

}  // namespace selpref
