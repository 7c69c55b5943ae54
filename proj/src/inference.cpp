#include "selpref/inference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "selpref/errors.hpp"
#include "selpref/factor.hpp"

namespace selpref {

namespace {

std::map<int, bool> evidence_indices(const Network& n, const Evidence& e) {
  std::map<int, bool> out;
  for (const auto& [id, value] : e.observed) out[n.index_of(id)] = value;
  return out;
}

bool any_parent_true(const NetworkNode& node, const std::vector<char>& values) {
  for (int p : node.parents)
    if (values[p]) return true;
  return false;
}

// Undirected interaction graph of the evidence-reduced factors: for every
// node, the free variables of its CPT form a clique.
std::vector<std::set<int>> moral_graph(const Network& n, const std::map<int, bool>& ev) {
  std::vector<std::set<int>> adj(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::vector<int> scope;
    if (!ev.count(static_cast<int>(i))) scope.push_back(static_cast<int>(i));
    for (int p : n.node(static_cast<int>(i)).parents)
      if (!ev.count(p)) scope.push_back(p);
    for (std::size_t a = 0; a < scope.size(); ++a)
      for (std::size_t b = a + 1; b < scope.size(); ++b) {
        adj[scope[a]].insert(scope[b]);
        adj[scope[b]].insert(scope[a]);
      }
  }
  return adj;
}

struct IndexPlan {
  std::vector<int> order;
  int width = 0;
};

IndexPlan min_fill_order(const Network& n, const std::map<int, bool>& ev,
                         const std::set<int>& query) {
  auto adj = moral_graph(n, ev);
  std::set<int> pending;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (!ev.count(static_cast<int>(i)) && !query.count(static_cast<int>(i)))
      pending.insert(static_cast<int>(i));

  IndexPlan plan;
  while (!pending.empty()) {
    int best = -1;
    long best_fill = -1;
    for (int v : pending) {
      long fill = 0;
      const auto& nb = adj[v];
      for (auto a = nb.begin(); a != nb.end(); ++a)
        for (auto b = std::next(a); b != nb.end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    plan.width = std::max(plan.width, static_cast<int>(adj[best].size()) + 1);
    for (auto a = adj[best].begin(); a != adj[best].end(); ++a)
      for (auto b = std::next(a); b != adj[best].end(); ++b) {
        adj[*a].insert(*b);
        adj[*b].insert(*a);
      }
    for (int u : adj[best]) adj[u].erase(best);
    adj[best].clear();
    pending.erase(best);
    plan.order.push_back(best);
  }
  return plan;
}

struct VeResult {
  Factor factor;     // joint over `keep` (empty scope when keep is empty)
  double log_scale;  // log of the normalization pulled out along the way
  int width;
};

VeResult run_ve(const Network& n, const std::map<int, bool>& ev, const std::set<int>& keep,
                int width_limit) {
  IndexPlan plan = min_fill_order(n, ev, keep);
  if (plan.width > width_limit)
    throw capacity_error(
        "variable elimination needs induced width " + std::to_string(plan.width) +
        " > limit " + std::to_string(width_limit) +
        "; raise the width limit or use the sampling fallback");

  std::vector<Factor> factors;
  for (std::size_t i = 0; i < n.size(); ++i)
    factors.push_back(Factor::cpt(n, static_cast<int>(i), ev));

  double log_scale = 0.0;
  auto rescale = [&log_scale](Factor& f) {
    double m = f.max_entry();
    if (m <= 0.0) throw data_error("evidence has probability zero");
    if (m < 1e-100 || m > 1e100) {
      f.scale(1.0 / m);
      log_scale += std::log(m);
    }
  };

  for (int var : plan.order) {
    std::vector<Factor> rest;
    Factor combined({}, {1.0});
    bool found = false;
    for (auto& f : factors) {
      if (f.contains(var)) {
        combined = found ? combined.product(f) : std::move(f);
        found = true;
      } else {
        rest.push_back(std::move(f));
      }
    }
    Factor summed = combined.sum_out(var);
    rescale(summed);
    rest.push_back(std::move(summed));
    factors = std::move(rest);
  }

  Factor result({}, {1.0});
  for (auto& f : factors) result = result.product(f);
  return {std::move(result), log_scale, plan.width};
}

double uniform01(std::mt19937_64& rng) {
  // Fixed mapping keeps sampled runs reproducible across library versions.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

const char* to_string(InferenceMethod method) {
  switch (method) {
    case InferenceMethod::exact_ve: return "exact-VE";
    case InferenceMethod::enumeration: return "enumeration";
    case InferenceMethod::sampled: return "sampled";
  }
  return "?";
}

double joint_probability(const Network& n, const std::map<std::string, bool>& assignment) {
  if (assignment.size() != n.size())
    throw data_error("assignment must cover every node exactly once");
  std::vector<char> values(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto it = assignment.find(n.node(static_cast<int>(i)).id);
    if (it == assignment.end())
      throw data_error("assignment missing node: " + n.node(static_cast<int>(i)).id);
    values[i] = it->second;
  }
  double p = 1.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    double p_true = n.prob_true(static_cast<int>(i),
                                any_parent_true(n.node(static_cast<int>(i)), values));
    p *= values[i] ? p_true : 1.0 - p_true;
  }
  return p;
}

MarginalReport posterior_marginals_enum(const Network& n, const Evidence& e, int max_nodes) {
  if (static_cast<int>(n.size()) > max_nodes)
    throw capacity_error("network too large for enumeration: " + std::to_string(n.size()) +
                         " nodes > bound " + std::to_string(max_nodes));
  auto ev = evidence_indices(n, e);

  std::vector<int> free_nodes;
  std::vector<char> values(n.size(), 0);
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto it = ev.find(static_cast<int>(i));
    if (it == ev.end())
      free_nodes.push_back(static_cast<int>(i));
    else
      values[i] = it->second;
  }

  double z = 0.0;
  std::vector<double> true_mass(n.size(), 0.0);
  const std::size_t completions = std::size_t{1} << free_nodes.size();
  for (std::size_t bits = 0; bits < completions; ++bits) {
    for (std::size_t k = 0; k < free_nodes.size(); ++k)
      values[free_nodes[k]] = (bits >> k) & 1;
    double p = 1.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      double p_true = n.prob_true(static_cast<int>(i),
                                  any_parent_true(n.node(static_cast<int>(i)), values));
      p *= values[i] ? p_true : 1.0 - p_true;
    }
    z += p;
    for (std::size_t i = 0; i < n.size(); ++i)
      if (values[i]) true_mass[i] += p;
  }
  if (z <= 0.0) throw data_error("evidence has probability zero");

  MarginalReport report;
  report.method = InferenceMethod::enumeration;
  report.log_evidence = std::log(z);
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto it = ev.find(static_cast<int>(i));
    report.marginals[n.node(static_cast<int>(i)).id] =
        it != ev.end() ? (it->second ? 1.0 : 0.0) : true_mass[i] / z;
  }
  return report;
}

EliminationPlan elimination_order(const Network& n, const Evidence& e,
                                  const std::set<std::string>& query) {
  auto ev = evidence_indices(n, e);
  std::set<int> keep;
  for (const auto& id : query) keep.insert(n.index_of(id));
  IndexPlan plan = min_fill_order(n, ev, keep);
  EliminationPlan out;
  out.width = plan.width;
  for (int i : plan.order) out.order.push_back(n.node(i).id);
  return out;
}

MarginalReport posterior_marginals_exact(const Network& n, const Evidence& e,
                                         int width_limit) {
  auto ev = evidence_indices(n, e);
  MarginalReport report;
  report.method = InferenceMethod::exact_ve;

  bool have_log_evidence = false;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto& id = n.node(static_cast<int>(i)).id;
    auto it = ev.find(static_cast<int>(i));
    if (it != ev.end()) {
      report.marginals[id] = it->second ? 1.0 : 0.0;
      continue;
    }
    VeResult ve = run_ve(n, ev, {static_cast<int>(i)}, width_limit);
    const auto& t = ve.factor.table();
    double z = t[0] + t[1];
    if (z <= 0.0) throw data_error("evidence has probability zero");
    report.marginals[id] = t[1] / z;
    report.induced_width = std::max(report.induced_width, ve.width);
    if (!have_log_evidence) {
      report.log_evidence = std::log(z) + ve.log_scale;
      have_log_evidence = true;
    }
  }
  if (!have_log_evidence) {
    // Everything observed: evidence probability is the full joint.
    VeResult ve = run_ve(n, ev, {}, width_limit);
    double z = ve.factor.table()[0];
    if (z <= 0.0) throw data_error("evidence has probability zero");
    report.log_evidence = std::log(z) + ve.log_scale;
  }
  return report;
}

MarginalReport posterior_marginals_sampled(const Network& n, const Evidence& e,
                                           std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw data_error("samples must be >= 1");
  auto ev = evidence_indices(n, e);

  std::mt19937_64 rng(seed);
  std::vector<char> values(n.size());
  std::vector<double> true_mass(n.size(), 0.0);
  double weight_total = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    double weight = 1.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      bool parent_true = any_parent_true(n.node(static_cast<int>(i)), values);
      double p_true = n.prob_true(static_cast<int>(i), parent_true);
      auto it = ev.find(static_cast<int>(i));
      if (it != ev.end()) {
        values[i] = it->second;
        weight *= it->second ? p_true : 1.0 - p_true;
      } else {
        values[i] = uniform01(rng) < p_true;
      }
    }
    weight_total += weight;
    if (weight > 0.0)
      for (std::size_t i = 0; i < n.size(); ++i)
        if (values[i]) true_mass[i] += weight;
  }
  if (weight_total <= 0.0)
    throw data_error("effective sample size zero: every sample weight vanished");

  MarginalReport report;
  report.method = InferenceMethod::sampled;
  report.samples = samples;
  report.seed = seed;
  report.log_evidence = std::log(weight_total / static_cast<double>(samples));
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto it = ev.find(static_cast<int>(i));
    report.marginals[n.node(static_cast<int>(i)).id] =
        it != ev.end() ? (it->second ? 1.0 : 0.0) : true_mass[i] / weight_total;
  }
  return report;
}

double evidence_log_probability(const Network& n, const Evidence& e, int width_limit) {
  auto ev = evidence_indices(n, e);
  VeResult ve = run_ve(n, ev, {}, width_limit);
  double z = ve.factor.table()[0];
  if (z <= 0.0) throw data_error("evidence has probability zero");
  return std::log(z) + ve.log_scale;
}

Network prune_childless(const Network& n, const Evidence& e,
                        const std::set<std::string>& keep) {
  auto ev = evidence_indices(n, e);
  std::vector<bool> removed(n.size(), false);
  std::vector<int> child_count(n.size(), 0);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (int p : n.node(static_cast<int>(i)).parents) ++child_count[p];

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (removed[i] || child_count[i] > 0) continue;
      if (ev.count(static_cast<int>(i)) || keep.count(n.node(static_cast<int>(i)).id))
        continue;
      removed[i] = true;
      changed = true;
      for (int p : n.node(static_cast<int>(i)).parents) --child_count[p];
    }
  }

  std::vector<NetworkNode> nodes;
  std::vector<double> leaks;
  std::vector<int> remap(n.size(), -1);
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (removed[i]) continue;
    NetworkNode node = n.node(static_cast<int>(i));
    for (int& p : node.parents) p = remap[p];
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

std::string to_tsv(const MarginalReport& report) {
  std::vector<std::pair<std::string, double>> rows(report.marginals.begin(),
                                                   report.marginals.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out;
  char buf[32];
  for (const auto& [id, p] : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", p);
    out += id + "\t" + buf + "\n";
  }
  return out;
}

}  // namespace selpref
