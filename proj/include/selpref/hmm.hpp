#ifndef SELPREF_HMM_HPP
#define SELPREF_HMM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "selpref/taxonomy.hpp"

namespace selpref {

struct TrainingTrace;

// Path-structured generative model over an ancestral sub-taxonomy: a walk
// starts at a virtual start state, follows hyponymy arcs downward emitting
// nothing, and ends by jumping to a final state emitting one word.  Every
// state's outgoing transition+emission probabilities sum to 1.
class PathModel {
 public:
  enum class Init { uniform, random };

  PathModel() = default;  // empty model; fill via build()

  static PathModel build(const Taxonomy& t, Init init = Init::uniform,
                         std::uint64_t seed = 0);

  // Number of states including the virtual start (index 0).
  std::size_t state_count() const { return states_.size(); }
  const std::string& state_id(int s) const { return states_[s]; }
  int state_index(const std::string& id) const;  // throws data_error

  const std::vector<std::pair<int, double>>& transitions(int s) const {
    return trans_[s];
  }
  const std::vector<std::pair<std::string, double>>& emissions(int s) const {
    return emit_[s];
  }

  // Total probability of emitting `w`, summed over all start-to-final paths
  // by dynamic programming over the DAG.  Unreachable words score 0.
  double word_likelihood(const std::string& w) const;

  // All transition and emission probabilities in a fixed canonical order;
  // comparable across models built from the same taxonomy.
  std::vector<double> parameter_vector() const;

  std::string dump() const;  // parameter TSV for inspection

 private:
  friend TrainingTrace em_train(const PathModel&, const std::map<std::string, std::int64_t>&,
                                int, std::uint64_t);
  void normalize_state(int s, std::vector<double>& weights);

  std::vector<std::string> states_;                            // [0] = start
  std::vector<std::vector<std::pair<int, double>>> trans_;     // state -> (succ, p)
  std::vector<std::vector<std::pair<std::string, double>>> emit_;  // state -> (word, p)
};

struct TrainingTrace {
  std::vector<double> loglik_per_iter;
  PathModel model;
  std::uint64_t seed = 0;
  int iterations = 0;
  bool converged = false;
};

// Standard EM on the path model: E-step by forward/backward over the DAG,
// M-step by normalizing expected transition counts.  Stops when the log
// likelihood gain drops below 1e-10 or after `iters` iterations.
TrainingTrace em_train(const PathModel& m, const std::map<std::string, std::int64_t>& obs,
                       int iters, std::uint64_t seed = 0);

// Expected fraction of emitted-word path mass passing through each synset
// state, averaged over the observations.
std::map<std::string, double> hmm_class_posterior(
    const PathModel& m, const std::map<std::string, std::int64_t>& obs);

}  // namespace selpref

#endif
