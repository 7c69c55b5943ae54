#ifndef SELPREF_CORPUS_HPP
#define SELPREF_CORPUS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "selpref/taxonomy.hpp"

namespace selpref {

// Aggregated (predicate, relation, noun) -> count observations.
class ObservationStore {
 public:
  using Key = std::tuple<std::string, std::string, std::string>;

  void add(const std::string& predicate, const std::string& relation,
           const std::string& noun, std::int64_t count);

  const std::map<Key, std::int64_t>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::int64_t total_count() const;

  // Total token count for (predicate, relation).
  std::int64_t pair_count(const std::string& predicate, const std::string& relation) const;

  // Noun types observed at least once with (predicate, relation); counts are
  // discarded on purpose.
  std::set<std::string> positive_words(const std::string& predicate,
                                       const std::string& relation) const;

  // Per-noun counts for (predicate, relation).
  std::map<std::string, std::int64_t> word_counts(const std::string& predicate,
                                                  const std::string& relation) const;

  // Distinct (predicate, relation) pairs, sorted.
  std::vector<std::pair<std::string, std::string>> pairs() const;

  // Copy without nouns missing from the taxonomy; dropped nouns (sorted,
  // unique) are appended to `dropped`.
  ObservationStore filter_known(const Taxonomy& t, std::vector<std::string>& dropped) const;

 private:
  std::map<Key, std::int64_t> records_;
};

// A probability distribution over synsets plus the frequency mass it was
// normalized from.
struct ClassDistribution {
  std::map<std::string, double> probs;
  double total_freq = 0.0;
};

// Parses `predicate<TAB>relation<TAB>noun<TAB>count` lines; duplicate keys
// accumulate.  '#' comment lines and blank lines are skipped.
ObservationStore parse_observations(std::string_view text);

// Splits each observed token of (p, r) evenly over all ancestor classes of
// its noun: freq(p,r,c) = sum_{w in c} count(p,r,w) / classes(w).
// Throws data_error naming any observed noun absent from the taxonomy.
std::map<std::string, double> class_frequency(const ObservationStore& s, const Taxonomy& t,
                                              const std::string& predicate,
                                              const std::string& relation);

// class_frequency normalized by the (p, r) token total.
ClassDistribution class_distribution(const ObservationStore& s, const Taxonomy& t,
                                     const std::string& predicate,
                                     const std::string& relation);

// Class distribution pooled over every (p, r) pair in the store,
// token-weighted.
ClassDistribution prior_class_distribution(const ObservationStore& s, const Taxonomy& t);

}  // namespace selpref

#endif
