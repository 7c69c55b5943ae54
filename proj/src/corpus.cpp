#include "selpref/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "selpref/errors.hpp"

namespace selpref {

void ObservationStore::add(const std::string& predicate, const std::string& relation,
                           const std::string& noun, std::int64_t count) {
  if (count <= 0) throw data_error("non-positive count for noun: " + noun);
  records_[{predicate, relation, noun}] += count;
}

std::int64_t ObservationStore::total_count() const {
  std::int64_t total = 0;
  for (const auto& [key, count] : records_) total += count;
  return total;
}

std::int64_t ObservationStore::pair_count(const std::string& predicate,
                                          const std::string& relation) const {
  std::int64_t total = 0;
  for (const auto& [key, count] : records_)
    if (std::get<0>(key) == predicate && std::get<1>(key) == relation) total += count;
  return total;
}

std::set<std::string> ObservationStore::positive_words(const std::string& predicate,
                                                       const std::string& relation) const {
  std::set<std::string> words;
  for (const auto& [key, count] : records_)
    if (std::get<0>(key) == predicate && std::get<1>(key) == relation)
      words.insert(std::get<2>(key));
  return words;
}

std::map<std::string, std::int64_t> ObservationStore::word_counts(
    const std::string& predicate, const std::string& relation) const {
  std::map<std::string, std::int64_t> counts;
  for (const auto& [key, count] : records_)
    if (std::get<0>(key) == predicate && std::get<1>(key) == relation)
      counts[std::get<2>(key)] += count;
  return counts;
}

std::vector<std::pair<std::string, std::string>> ObservationStore::pairs() const {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [key, count] : records_)
    seen.emplace(std::get<0>(key), std::get<1>(key));
  return {seen.begin(), seen.end()};
}

ObservationStore ObservationStore::filter_known(const Taxonomy& t,
                                                std::vector<std::string>& dropped) const {
  ObservationStore out;
  std::set<std::string> missing;
  for (const auto& [key, count] : records_) {
    const auto& noun = std::get<2>(key);
    if (t.has_word(noun))
      out.add(std::get<0>(key), std::get<1>(key), noun, count);
    else
      missing.insert(noun);
  }
  dropped.insert(dropped.end(), missing.begin(), missing.end());
  return out;
}

ObservationStore parse_observations(std::string_view text) {
  ObservationStore store;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4)
      throw parse_error(line_no, "expected 4 tab-separated fields, got " +
                                     std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty() || fields[2].empty())
      throw parse_error(line_no, "empty field");
    std::int64_t count = 0;
    try {
      std::size_t pos = 0;
      count = std::stoll(fields[3], &pos);
      if (pos != fields[3].size()) throw std::invalid_argument(fields[3]);
    } catch (const std::exception&) {
      throw parse_error(line_no, "bad count: " + fields[3]);
    }
    if (count <= 0) throw parse_error(line_no, "non-positive count: " + fields[3]);
    store.add(fields[0], fields[1], fields[2], count);
  }
  return store;
}

std::map<std::string, double> class_frequency(const ObservationStore& s, const Taxonomy& t,
                                              const std::string& predicate,
                                              const std::string& relation) {
  std::map<std::string, double> freq;
  for (const auto& [noun, count] : s.word_counts(predicate, relation)) {
    if (!t.has_word(noun))
      throw data_error("observed noun absent from taxonomy: " + noun);
    auto classes = t.ancestors(noun);
    double share = static_cast<double>(count) / static_cast<double>(classes.size());
    for (const auto& c : classes) freq[c] += share;
  }
  return freq;
}

ClassDistribution class_distribution(const ObservationStore& s, const Taxonomy& t,
                                     const std::string& predicate,
                                     const std::string& relation) {
  ClassDistribution dist;
  auto freq = class_frequency(s, t, predicate, relation);
  double total = static_cast<double>(s.pair_count(predicate, relation));
  if (total <= 0.0)
    throw data_error("zero total frequency for (" + predicate + ", " + relation + ")");
  dist.total_freq = total;
  for (const auto& [c, f] : freq) dist.probs[c] = f / total;
  return dist;
}

ClassDistribution prior_class_distribution(const ObservationStore& s, const Taxonomy& t) {
  ClassDistribution dist;
  std::map<std::string, double> freq;
  double total = 0.0;
  for (const auto& [p, r] : s.pairs()) {
    for (const auto& [c, f] : class_frequency(s, t, p, r)) freq[c] += f;
    total += static_cast<double>(s.pair_count(p, r));
  }
  if (total <= 0.0) throw data_error("zero total frequency: empty corpus");
  dist.total_freq = total;
  for (const auto& [c, f] : freq) dist.probs[c] = f / total;
  return dist;
}

}  // namespace selpref
