#include "selpref/resnik.hpp"

#include <cmath>

#include "selpref/errors.hpp"

namespace selpref {

namespace {

double lookup(const ClassDistribution& d, const std::string& synset) {
  auto it = d.probs.find(synset);
  return it == d.probs.end() ? 0.0 : it->second;
}

ClassDistribution smooth(const std::map<std::string, double>& freq, double total,
                         const Taxonomy& t, double alpha) {
  if (alpha < 0.0) throw data_error("smoothing alpha must be nonnegative");
  ClassDistribution out;
  double denom = total + alpha * static_cast<double>(t.synset_count());
  if (denom <= 0.0) throw data_error("zero total frequency");
  out.total_freq = total;
  for (const auto& id : t.synsets()) {
    auto it = freq.find(id);
    double f = (it == freq.end() ? 0.0 : it->second) + alpha;
    if (f > 0.0) out.probs[id] = f / denom;
  }
  return out;
}

}  // namespace

double preference_strength(const ClassDistribution& post, const ClassDistribution& prior) {
  double s = 0.0;
  for (const auto& [c, p] : post.probs) {
    if (p <= 0.0) continue;
    double q = lookup(prior, c);
    if (q <= 0.0)
      throw data_error("prior is zero on class " + c + " with positive posterior mass");
    s += p * std::log(p / q);
  }
  return s;
}

double selectional_association(const ClassDistribution& post, const ClassDistribution& prior,
                               const std::string& synset, double strength) {
  if (strength <= 0.0)
    throw data_error("selectional association undefined at zero preference strength");
  double p = lookup(post, synset);
  if (p <= 0.0) return 0.0;
  double q = lookup(prior, synset);
  if (q <= 0.0)
    throw data_error("prior is zero on class " + synset + " with positive posterior mass");
  return p * std::log(p / q) / strength;
}

AssociationReport rank_classes_resnik(const ObservationStore& s, const Taxonomy& t,
                                      const std::string& predicate,
                                      const std::string& relation, double alpha) {
  double pair_total = static_cast<double>(s.pair_count(predicate, relation));
  if (pair_total <= 0.0)
    throw data_error("no observations for (" + predicate + ", " + relation + ")");

  auto post_freq = class_frequency(s, t, predicate, relation);
  std::map<std::string, double> prior_freq;
  double prior_total = 0.0;
  for (const auto& [p, r] : s.pairs()) {
    for (const auto& [c, f] : class_frequency(s, t, p, r)) prior_freq[c] += f;
    prior_total += static_cast<double>(s.pair_count(p, r));
  }

  ClassDistribution post = smooth(post_freq, pair_total, t, alpha);
  ClassDistribution prior = smooth(prior_freq, prior_total, t, alpha);

  AssociationReport report;
  report.strength = preference_strength(post, prior);
  for (const auto& id : t.synsets()) {
    report.associations[id] =
        report.strength > 0.0
            ? selectional_association(post, prior, id, report.strength)
            : 0.0;
  }
  return report;
}

}  // namespace selpref
