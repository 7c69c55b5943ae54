#ifndef SELPREF_INFERENCE_HPP
#define SELPREF_INFERENCE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "selpref/network.hpp"

namespace selpref {

// Observed node values.  In pipeline use only word nodes carry evidence (the
// W+ protocol: observed words true, everything else unset).
struct Evidence {
  std::map<std::string, bool> observed;
};

enum class InferenceMethod { exact_ve, enumeration, sampled };

const char* to_string(InferenceMethod method);

struct MarginalReport {
  std::map<std::string, double> marginals;  // P(node = true | evidence)
  double log_evidence = 0.0;
  InferenceMethod method = InferenceMethod::exact_ve;
  int induced_width = 0;       // exact-VE only
  std::int64_t samples = 0;    // sampled only
  std::uint64_t seed = 0;      // sampled only
};

// Product of every node's conditional probability under a full assignment.
double joint_probability(const Network& n, const std::map<std::string, bool>& assignment);

// Brute-force posterior marginals by summing the joint over all completions
// of the evidence.  The testing oracle for every other inference path.
// Throws capacity_error when the network exceeds max_nodes.
MarginalReport posterior_marginals_enum(const Network& n, const Evidence& e,
                                        int max_nodes = 22);

struct EliminationPlan {
  std::vector<std::string> order;  // non-query, non-evidence nodes
  int width = 0;                   // max factor scope size in a simulated run
};

// Greedy min-fill ordering over the evidence-reduced moral graph; ties broken
// by fill count then smallest node id.
EliminationPlan elimination_order(const Network& n, const Evidence& e,
                                  const std::set<std::string>& query);

// Exact posterior marginals by variable elimination, one pass per query node.
// Throws capacity_error when any pass would exceed width_limit; callers can
// raise the limit or fall back to sampling.
MarginalReport posterior_marginals_exact(const Network& n, const Evidence& e,
                                         int width_limit = 22);

// Likelihood weighting: unobserved nodes sampled topologically, each sample
// weighted by the probability of the evidence given its sampled parents.
MarginalReport posterior_marginals_sampled(const Network& n, const Evidence& e,
                                           std::int64_t samples, std::uint64_t seed);

// log P(evidence) via a single elimination pass.
double evidence_log_probability(const Network& n, const Evidence& e, int width_limit = 22);

// Removes (iteratively) every unobserved childless node outside `keep`;
// marginals of the remaining nodes are unchanged.
Network prune_childless(const Network& n, const Evidence& e,
                        const std::set<std::string>& keep);

// `node<TAB>p_true`, descending by probability, ties by id.
std::string to_tsv(const MarginalReport& report);

}  // namespace selpref

#endif
