#ifndef SELPREF_PIPELINE_HPP
#define SELPREF_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "selpref/corpus.hpp"
#include "selpref/network.hpp"
#include "selpref/taxonomy.hpp"

namespace selpref {

enum class Method { bbn, resnik, hmm, random_baseline, first_sense };

const char* to_string(Method method);
Method method_from_string(const std::string& name);  // throws data_error

// Everything a run needs beyond the input files.
struct RunConfig {
  double likely = 0.9;
  double unlikely = 0.1;
  bool balance = false;
  double balance_target = 0.1;
  double balance_tol = 1e-3;
  int balance_max_sweeps = 10;
  Method method = Method::bbn;
  int width_limit = 22;
  int max_fan_in = 0;          // 0 = no or-cascade
  std::int64_t samples = 200000;  // 0 disables the sampling fallback
  std::uint64_t seed = 42;
  double alpha = 0.01;         // add-alpha smoothing for the resnik path
  int em_iters = 300;
  bool skip_unknown_nouns = false;

  CptParams cpt() const { return {likely, unlikely}; }
};

struct PreferenceReport {
  std::string method;  // includes variants such as "bbn-balanced", "bbn-sampled"
  std::string predicate;
  std::string relation;
  std::vector<std::pair<std::string, double>> ranking;  // (synset, score) desc
  std::vector<std::string> config_echo;                 // key=value lines
  std::vector<std::string> skipped_nouns;               // with skip_unknown_nouns
};

// Ranked selectional-preference report for one (predicate, relation) by the
// configured method.  The bbn path builds the W+ ancestral subnetwork, sets
// every observed word node true and ranks synsets by posterior marginal;
// resnik and hmm delegate to their modules.
PreferenceReport learn_preferences(const Taxonomy& t, const ObservationStore& s,
                                   const std::string& predicate,
                                   const std::string& relation, const RunConfig& config);

// Table-shaped TSV: config echo comments, then `rank<TAB>synset<TAB>score`.
std::string to_tsv(const PreferenceReport& report);

}  // namespace selpref

#endif
