#ifndef SELPREF_WSD_HPP
#define SELPREF_WSD_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "selpref/corpus.hpp"
#include "selpref/pipeline.hpp"
#include "selpref/taxonomy.hpp"

namespace selpref {

struct WsdInstance {
  std::string predicate;
  std::string relation;
  std::string noun;
  std::set<std::string> gold_senses;  // nonempty, subset of the noun's senses
};

struct PredicateStats {
  int total = 0;
  int correct = 0;
  bool attempted = false;  // had training data
};

struct WsdReport {
  std::string method;
  int total = 0;
  int attempted = 0;           // instances whose predicate had training data
  int correct = 0;             // over all instances
  int correct_attempted = 0;   // over attempted instances only
  double accuracy = 0.0;
  double accuracy_attempted = 0.0;
  double expected_accuracy = -1.0;  // analytic, random baseline only
  std::uint64_t seed = 0;
  std::map<std::pair<std::string, std::string>, PredicateStats> per_predicate;
  std::vector<std::string> notes;  // per-instance errors, fallbacks
};

// Parses `predicate<TAB>relation<TAB>noun<TAB>gold[,gold...]` lines.
std::vector<WsdInstance> parse_test_instances(std::string_view text);

// Throws data_error when a noun is unknown or a gold sense is not one of the
// noun's direct senses.
void validate_instances(const std::vector<WsdInstance>& test, const Taxonomy& t);

// Sense-tagged frequency table for the first-sense baseline:
// `noun<TAB>synset<TAB>count` lines.
using SenseFrequencies = std::map<std::pair<std::string, std::string>, std::int64_t>;
SenseFrequencies parse_sense_frequencies(std::string_view text);

// Argmax of `scores` over the noun's direct senses; senses missing from the
// map score `missing_score`; ties go to the smallest synset id.
std::string disambiguate(const std::map<std::string, double>& scores, const Taxonomy& t,
                         const std::string& noun,
                         double missing_score = 0.0);

// Fits the configured method per test predicate on the training store only,
// then disambiguates every instance.  Predicates without training data fall
// back to the seeded random baseline and are flagged in the report.
WsdReport evaluate(const ObservationStore& train, const std::vector<WsdInstance>& test,
                   const Taxonomy& t, const RunConfig& config);

// Uniform choice among direct senses; also fills expected_accuracy with the
// analytic mean of |gold ∩ senses| / |senses|.
WsdReport random_baseline(const std::vector<WsdInstance>& test, const Taxonomy& t,
                          std::uint64_t seed);

// Most frequent sense according to an external sense-tagged table.
WsdReport first_sense_baseline(const std::vector<WsdInstance>& test, const Taxonomy& t,
                               const SenseFrequencies& freqs);

// Aggregate TSV lines followed by an aligned method/result table.
std::string to_tsv(const WsdReport& report);
std::string to_table(const std::vector<WsdReport>& reports);

}  // namespace selpref

#endif
