#include "selpref/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "selpref/errors.hpp"

namespace selpref {

namespace {

constexpr const char* kStartState = "<start>";
constexpr double kConvergenceGain = 1e-10;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int PathModel::state_index(const std::string& id) const {
  for (std::size_t s = 0; s < states_.size(); ++s)
    if (states_[s] == id) return static_cast<int>(s);
  throw data_error("unknown state: " + id);
}

void PathModel::normalize_state(int s, std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (total <= 0.0) throw data_error("state " + states_[s] + " has no outgoing mass");
  std::size_t k = 0;
  for (auto& [succ, p] : trans_[s]) p = weights[k++] / total;
  for (auto& [word, p] : emit_[s]) p = weights[k++] / total;
}

PathModel PathModel::build(const Taxonomy& t, Init init, std::uint64_t seed) {
  if (t.synset_count() == 0) throw data_error("cannot build a path model without synsets");
  if (t.word_count() == 0) throw data_error("cannot build a path model without words");

  PathModel m;
  m.states_.push_back(kStartState);
  std::map<std::string, int> index;
  for (const auto& id : t.topological_synsets()) {
    index[id] = static_cast<int>(m.states_.size());
    m.states_.push_back(id);
  }
  m.trans_.resize(m.states_.size());
  m.emit_.resize(m.states_.size());

  for (const auto& id : t.synsets()) {
    if (t.parents_of(id).empty()) m.trans_[0].emplace_back(index[id], 0.0);
  }
  std::sort(m.trans_[0].begin(), m.trans_[0].end());

  for (const auto& id : t.synsets()) {
    int s = index[id];
    for (const auto& child : t.children_of(id)) m.trans_[s].emplace_back(index[child], 0.0);
    std::sort(m.trans_[s].begin(), m.trans_[s].end());
    for (const auto& word : t.members_of(id)) m.emit_[s].emplace_back(word, 0.0);
    std::sort(m.emit_[s].begin(), m.emit_[s].end());
    if (m.trans_[s].empty() && m.emit_[s].empty())
      throw data_error("synset " + id +
                       " has neither hyponyms nor member words; every path must reach a word");
  }

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < m.states_.size(); ++s) {
    std::size_t fan_out = m.trans_[s].size() + m.emit_[s].size();
    std::vector<double> weights(fan_out, 1.0);
    if (init == Init::random)
      for (double& w : weights) w = 0.1 + 0.9 * uniform01(rng);
    m.normalize_state(static_cast<int>(s), weights);
  }
  return m;
}

namespace {

// Prefix mass: probability of reaching each state from the start.
std::vector<double> forward_reach(const PathModel& m) {
  std::vector<double> reach(m.state_count(), 0.0);
  reach[0] = 1.0;
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if (reach[s] == 0.0) continue;
    for (const auto& [succ, p] : m.transitions(static_cast<int>(s)))
      reach[succ] += reach[s] * p;
  }
  return reach;
}

// Suffix mass for one word: probability of emitting `w` starting from each
// state.
std::vector<double> backward_emit(const PathModel& m, const std::string& w) {
  std::vector<double> beta(m.state_count(), 0.0);
  for (std::size_t i = m.state_count(); i-- > 0;) {
    int s = static_cast<int>(i);
    double b = 0.0;
    for (const auto& [word, p] : m.emissions(s))
      if (word == w) b += p;
    for (const auto& [succ, p] : m.transitions(s)) b += p * beta[succ];
    beta[s] = b;
  }
  return beta;
}

}  // namespace

double PathModel::word_likelihood(const std::string& w) const {
  auto reach = forward_reach(*this);
  double total = 0.0;
  for (std::size_t s = 0; s < state_count(); ++s)
    for (const auto& [word, p] : emissions(static_cast<int>(s)))
      if (word == w) total += reach[s] * p;
  return total;
}

std::vector<double> PathModel::parameter_vector() const {
  std::vector<double> out;
  for (std::size_t s = 0; s < states_.size(); ++s) {
    for (const auto& [succ, p] : trans_[s]) out.push_back(p);
    for (const auto& [word, p] : emit_[s]) out.push_back(p);
  }
  return out;
}

std::string PathModel::dump() const {
  std::string out;
  char buf[32];
  for (std::size_t s = 0; s < states_.size(); ++s) {
    for (const auto& [succ, p] : trans_[s]) {
      std::snprintf(buf, sizeof buf, "%.9g", p);
      out += "trans\t" + states_[s] + "\t" + states_[succ] + "\t" + buf + "\n";
    }
    for (const auto& [word, p] : emit_[s]) {
      std::snprintf(buf, sizeof buf, "%.9g", p);
      out += "emit\t" + states_[s] + "\t" + word + "\t" + buf + "\n";
    }
  }
  return out;
}

TrainingTrace em_train(const PathModel& m, const std::map<std::string, std::int64_t>& obs,
                       int iters, std::uint64_t seed) {
  if (iters < 1) throw data_error("iters must be >= 1");
  if (obs.empty()) throw data_error("empty observation set");

  TrainingTrace trace;
  trace.model = m;
  trace.seed = seed;

  double prev_loglik = -std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < iters; ++iter) {
    auto reach = forward_reach(trace.model);

    double loglik = 0.0;
    std::vector<std::vector<double>> exp_trans(trace.model.state_count());
    std::vector<std::vector<double>> exp_emit(trace.model.state_count());
    for (std::size_t s = 0; s < trace.model.state_count(); ++s) {
      exp_trans[s].assign(trace.model.transitions(static_cast<int>(s)).size(), 0.0);
      exp_emit[s].assign(trace.model.emissions(static_cast<int>(s)).size(), 0.0);
    }

    for (const auto& [word, count] : obs) {
      auto beta = backward_emit(trace.model, word);
      double pw = beta[0];
      if (pw <= 0.0) throw data_error("zero-likelihood observation: " + word);
      loglik += static_cast<double>(count) * std::log(pw);
      double c = static_cast<double>(count) / pw;
      for (std::size_t s = 0; s < trace.model.state_count(); ++s) {
        if (reach[s] == 0.0) continue;
        const auto& trans = trace.model.transitions(static_cast<int>(s));
        for (std::size_t k = 0; k < trans.size(); ++k)
          exp_trans[s][k] += c * reach[s] * trans[k].second * beta[trans[k].first];
        const auto& emits = trace.model.emissions(static_cast<int>(s));
        for (std::size_t k = 0; k < emits.size(); ++k)
          if (emits[k].first == word) exp_emit[s][k] += c * reach[s] * emits[k].second;
      }
    }

    trace.loglik_per_iter.push_back(loglik);
    if (loglik - prev_loglik < kConvergenceGain && iter > 0) {
      trace.converged = true;
      break;
    }
    prev_loglik = loglik;

    for (std::size_t s = 0; s < trace.model.state_count(); ++s) {
      double total = 0.0;
      for (double v : exp_trans[s]) total += v;
      for (double v : exp_emit[s]) total += v;
      if (total <= 0.0) continue;  // state unused by the data; keep its params
      std::vector<double> weights;
      weights.insert(weights.end(), exp_trans[s].begin(), exp_trans[s].end());
      weights.insert(weights.end(), exp_emit[s].begin(), exp_emit[s].end());
      trace.model.normalize_state(static_cast<int>(s), weights);
    }
    ++trace.iterations;
  }
  return trace;
}

std::map<std::string, double> hmm_class_posterior(
    const PathModel& m, const std::map<std::string, std::int64_t>& obs) {
  auto reach = forward_reach(m);
  std::map<std::string, double> occupancy;
  for (std::size_t s = 1; s < m.state_count(); ++s)
    occupancy[m.state_id(static_cast<int>(s))] = 0.0;

  double total_weight = 0.0;
  for (const auto& [word, count] : obs) {
    auto beta = backward_emit(m, word);
    double pw = beta[0];
    if (pw <= 0.0) continue;
    total_weight += static_cast<double>(count);
    for (std::size_t s = 1; s < m.state_count(); ++s) {
      double through = reach[s] * beta[s] / pw;  // P(path visits s | word)
      occupancy[m.state_id(static_cast<int>(s))] += static_cast<double>(count) * through;
    }
  }
  if (total_weight > 0.0)
    for (auto& [id, v] : occupancy) v /= total_weight;
  return occupancy;
}

}  // namespace selpref
