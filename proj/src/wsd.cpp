#include "selpref/wsd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "selpref/errors.hpp"

namespace selpref {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Order-independent per-instance randomness: the choice depends only on the
// seed and the instance key, so shuffling the test set changes nothing.
std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::size_t seeded_choice(std::uint64_t seed, const WsdInstance& inst, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
  h = fnv1a(h, inst.predicate);
  h = fnv1a(h, inst.relation);
  h = fnv1a(h, inst.noun);
  // A couple of xorshift rounds to decorrelate the low bits.
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  return static_cast<std::size_t>(h % n);
}

void finish(WsdReport& r) {
  r.accuracy = r.total > 0 ? static_cast<double>(r.correct) / r.total : 0.0;
  r.accuracy_attempted =
      r.attempted > 0 ? static_cast<double>(r.correct_attempted) / r.attempted : 0.0;
}

void tally(WsdReport& r, const WsdInstance& inst, bool correct, bool attempted) {
  ++r.total;
  if (correct) ++r.correct;
  if (attempted) {
    ++r.attempted;
    if (correct) ++r.correct_attempted;
  }
  auto& stats = r.per_predicate[{inst.predicate, inst.relation}];
  ++stats.total;
  if (correct) ++stats.correct;
  stats.attempted = stats.attempted || attempted;
}

}  // namespace

std::vector<WsdInstance> parse_test_instances(std::string_view text) {
  std::vector<WsdInstance> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw parse_error(line_no, "expected 4 tab-separated fields, got " +
                                     std::to_string(fields.size()));
    WsdInstance inst;
    inst.predicate = fields[0];
    inst.relation = fields[1];
    inst.noun = fields[2];
    std::istringstream golds(fields[3]);
    std::string sense;
    while (std::getline(golds, sense, ','))
      if (!sense.empty()) inst.gold_senses.insert(sense);
    if (inst.predicate.empty() || inst.noun.empty() || inst.gold_senses.empty())
      throw parse_error(line_no, "missing predicate, noun, or gold senses");
    out.push_back(std::move(inst));
  }
  return out;
}

void validate_instances(const std::vector<WsdInstance>& test, const Taxonomy& t) {
  for (const auto& inst : test) {
    if (!t.has_word(inst.noun))
      throw data_error("test noun absent from taxonomy: " + inst.noun);
    auto senses = t.senses_of(inst.noun);
    for (const auto& gold : inst.gold_senses)
      if (std::find(senses.begin(), senses.end(), gold) == senses.end())
        throw data_error("gold sense " + gold + " is not a direct sense of " + inst.noun);
  }
}

SenseFrequencies parse_sense_frequencies(std::string_view text) {
  SenseFrequencies out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3)
      throw parse_error(line_no, "expected noun<TAB>synset<TAB>count");
    std::int64_t count = 0;
    try {
      count = std::stoll(fields[2]);
    } catch (const std::exception&) {
      throw parse_error(line_no, "bad count: " + fields[2]);
    }
    if (count < 0) throw parse_error(line_no, "negative count");
    out[{fields[0], fields[1]}] += count;
  }
  return out;
}

std::string disambiguate(const std::map<std::string, double>& scores, const Taxonomy& t,
                         const std::string& noun, double missing_score) {
  auto senses = t.senses_of(noun);  // sorted ascending
  if (senses.empty()) throw data_error("noun has no senses: " + noun);
  std::string best = senses[0];
  double best_score = -std::numeric_limits<double>::infinity();
  for (const auto& sense : senses) {
    auto it = scores.find(sense);
    double score = it == scores.end() ? missing_score : it->second;
    if (score > best_score) {
      best = sense;
      best_score = score;
    }
  }
  return best;
}

WsdReport evaluate(const ObservationStore& train, const std::vector<WsdInstance>& test,
                   const Taxonomy& t, const RunConfig& config) {
  if (test.empty()) throw data_error("empty test set");
  if (config.method == Method::random_baseline)
    return random_baseline(test, t, config.seed);
  if (config.method == Method::first_sense)
    throw data_error("first-sense needs a sense-tagged frequency table; "
                     "call first_sense_baseline");
  validate_instances(test, t);

  double missing_score = config.method == Method::resnik
                             ? -std::numeric_limits<double>::infinity()
                             : 0.0;

  WsdReport report;
  report.seed = config.seed;

  // One model fit per distinct (predicate, relation).
  std::map<std::pair<std::string, std::string>, std::map<std::string, double>> fitted;
  std::set<std::pair<std::string, std::string>> unattempted;
  std::set<std::pair<std::string, std::string>> failed;
  for (const auto& inst : test) {
    std::pair<std::string, std::string> key{inst.predicate, inst.relation};
    if (fitted.count(key) || unattempted.count(key) || failed.count(key)) continue;
    try {
      auto pref = learn_preferences(t, train, inst.predicate, inst.relation, config);
      report.method = pref.method;
      fitted[key] = {pref.ranking.begin(), pref.ranking.end()};
    } catch (const no_observations_error&) {
      unattempted.insert(key);
      report.notes.push_back("predicate " + inst.predicate + "/" + inst.relation +
                             " has no training data; random fallback");
    } catch (const error& err) {
      failed.insert(key);
      report.notes.push_back("predicate " + inst.predicate + "/" + inst.relation +
                             " failed to fit: " + err.what());
    }
  }
  if (report.method.empty()) report.method = to_string(config.method);

  for (const auto& inst : test) {
    std::pair<std::string, std::string> key{inst.predicate, inst.relation};
    if (unattempted.count(key)) {
      auto senses = t.senses_of(inst.noun);
      const auto& chosen = senses[seeded_choice(config.seed, inst, senses.size())];
      tally(report, inst, inst.gold_senses.count(chosen) != 0, false);
      continue;
    }
    bool correct = false;
    if (auto it = fitted.find(key); it != fitted.end()) {
      try {
        auto chosen = disambiguate(it->second, t, inst.noun, missing_score);
        correct = inst.gold_senses.count(chosen) != 0;
      } catch (const error& err) {
        report.notes.push_back("instance (" + inst.predicate + ", " + inst.noun +
                               ") failed: " + err.what());
      }
    }
    tally(report, inst, correct, true);
  }
  finish(report);
  return report;
}

WsdReport random_baseline(const std::vector<WsdInstance>& test, const Taxonomy& t,
                          std::uint64_t seed) {
  if (test.empty()) throw data_error("empty test set");
  validate_instances(test, t);
  WsdReport report;
  report.method = "random";
  report.seed = seed;
  double expected = 0.0;
  for (const auto& inst : test) {
    auto senses = t.senses_of(inst.noun);
    const auto& chosen = senses[seeded_choice(seed, inst, senses.size())];
    tally(report, inst, inst.gold_senses.count(chosen) != 0, true);
    expected += static_cast<double>(inst.gold_senses.size()) /
                static_cast<double>(senses.size());
  }
  report.expected_accuracy = expected / static_cast<double>(test.size());
  finish(report);
  return report;
}

WsdReport first_sense_baseline(const std::vector<WsdInstance>& test, const Taxonomy& t,
                               const SenseFrequencies& freqs) {
  if (test.empty()) throw data_error("empty test set");
  if (freqs.empty()) throw data_error("first-sense baseline requires a nonempty "
                                      "sense-tagged frequency table");
  validate_instances(test, t);
  WsdReport report;
  report.method = "first-sense";
  for (const auto& inst : test) {
    auto senses = t.senses_of(inst.noun);  // sorted: ties go to smallest id
    std::string best = senses[0];
    std::int64_t best_count = -1;
    for (const auto& sense : senses) {
      auto it = freqs.find({inst.noun, sense});
      std::int64_t count = it == freqs.end() ? 0 : it->second;
      if (count > best_count) {
        best = sense;
        best_count = count;
      }
    }
    tally(report, inst, inst.gold_senses.count(best) != 0, true);
  }
  finish(report);
  return report;
}

std::string to_tsv(const WsdReport& report) {
  char buf[64];
  std::string out = "method\ttotal\tattempted\tcorrect\tcorrect_attempted\taccuracy"
                    "\taccuracy_attempted\n";
  std::snprintf(buf, sizeof buf, "%d\t%d\t%d\t%d\t%.6f\t%.6f", report.total,
                report.attempted, report.correct, report.correct_attempted,
                report.accuracy, report.accuracy_attempted);
  out += report.method + "\t" + buf + "\n";
  for (const auto& [key, stats] : report.per_predicate) {
    std::snprintf(buf, sizeof buf, "%d\t%d\t%s", stats.total, stats.correct,
                  stats.attempted ? "attempted" : "fallback");
    out += "predicate\t" + key.first + "\t" + key.second + "\t" + buf + "\n";
  }
  if (report.expected_accuracy >= 0.0) {
    std::snprintf(buf, sizeof buf, "%.6f", report.expected_accuracy);
    out += "expected_accuracy\t" + std::string(buf) + "\n";
  }
  return out;
}

std::string to_table(const std::vector<WsdReport>& reports) {
  std::size_t width = std::string("Method").size();
  for (const auto& r : reports) width = std::max(width, r.method.size());
  std::string out = "Method";
  out.append(width - 6 + 2, ' ');
  out += "Result\n";
  char buf[32];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * r.accuracy);
    out += r.method;
    out.append(width - r.method.size() + 2, ' ');
    out += buf;
    out += "\n";
  }
  return out;
}

}  // namespace selpref
