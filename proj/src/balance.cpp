#include <algorithm>
#include <cmath>

#include "selpref/errors.hpp"
#include "selpref/inference.hpp"
#include "selpref/network.hpp"

namespace selpref {

namespace {

constexpr double kLeakFloor = 1e-6;
constexpr double kLeakCeil = 1.0 - 1e-6;

// P(at least one parent of `node` is true) in the evidence-free model,
// through the complement: P(all parents false) is the probability of the
// evidence that observes every parent false.
double parent_activation(const Network& n, int node, int width_limit) {
  const auto& parents = n.node(node).parents;
  if (parents.empty()) return 0.0;
  Evidence all_false;
  for (int p : parents) all_false.observed[n.node(p).id] = false;
  return 1.0 - std::exp(evidence_log_probability(n, all_false, width_limit));
}

}  // namespace

BalanceOutcome balance(const Network& n, double target, double tol, int max_sweeps) {
  if (!(target > 0.0 && target < 1.0))
    throw data_error("balance target must lie in (0, 1)");
  if (max_sweeps < 1) throw data_error("max_sweeps must be >= 1");

  BalanceOutcome out{n, {}, 0, 0.0};
  const double likely = n.params().likely;
  const int width_limit = 64;  // evidence-free taxonomy queries stay narrow

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    out.sweeps = sweep;
    std::vector<std::string> clamped;
    bool any_change = false;

    // Topological node order: a node's marginal depends only on already
    // processed ancestors, so one sweep normally lands every free node.
    for (std::size_t i = 0; i < out.network.size(); ++i) {
      const auto& node = out.network.node(static_cast<int>(i));
      if (node.kind != NodeKind::synset) continue;
      double q = parent_activation(out.network, static_cast<int>(i), width_limit);
      double leak;
      if (q >= 1.0 - 1e-15) {
        leak = kLeakFloor;
      } else {
        leak = (target - likely * q) / (1.0 - q);
      }
      bool clamp = leak < kLeakFloor || leak > kLeakCeil;
      leak = std::clamp(leak, kLeakFloor, kLeakCeil);
      if (clamp) clamped.push_back(node.id);
      if (std::abs(leak - out.network.leak(static_cast<int>(i))) > 1e-15) {
        out.network.set_leak(static_cast<int>(i), leak);
        any_change = true;
      }
    }
    out.clamped = std::move(clamped);

    auto report = posterior_marginals_exact(out.network, Evidence{}, width_limit);
    out.max_deviation = 0.0;
    for (std::size_t i = 0; i < out.network.size(); ++i) {
      const auto& node = out.network.node(static_cast<int>(i));
      if (node.kind != NodeKind::synset) continue;
      out.max_deviation =
          std::max(out.max_deviation, std::abs(report.marginals.at(node.id) - target));
    }
    if (out.max_deviation <= tol) break;
    if (!any_change) break;  // stable: the remaining deviation is all clamped nodes
  }
  std::sort(out.clamped.begin(), out.clamped.end());
  return out;
}

}  // namespace selpref
