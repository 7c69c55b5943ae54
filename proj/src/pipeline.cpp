#include "selpref/pipeline.hpp"

#include <algorithm>
#include <cstdio>

#include "selpref/errors.hpp"
#include "selpref/hmm.hpp"
#include "selpref/inference.hpp"
#include "selpref/resnik.hpp"

namespace selpref {

const char* to_string(Method method) {
  switch (method) {
    case Method::bbn: return "bbn";
    case Method::resnik: return "resnik";
    case Method::hmm: return "hmm";
    case Method::random_baseline: return "random";
    case Method::first_sense: return "first-sense";
  }
  return "?";
}

Method method_from_string(const std::string& name) {
  if (name == "bbn") return Method::bbn;
  if (name == "resnik") return Method::resnik;
  if (name == "hmm") return Method::hmm;
  if (name == "random") return Method::random_baseline;
  if (name == "first-sense") return Method::first_sense;
  throw data_error("unknown method: " + name);
}

namespace {

std::vector<std::pair<std::string, double>> ranked(std::map<std::string, double> scores) {
  std::vector<std::pair<std::string, double>> rows(scores.begin(), scores.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return rows;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

PreferenceReport learn_preferences(const Taxonomy& t, const ObservationStore& store,
                                   const std::string& predicate,
                                   const std::string& relation, const RunConfig& config) {
  PreferenceReport report;
  report.predicate = predicate;
  report.relation = relation;

  const ObservationStore* s = &store;
  ObservationStore filtered;
  if (config.skip_unknown_nouns) {
    filtered = store.filter_known(t, report.skipped_nouns);
    s = &filtered;
  }

  auto positive = s->positive_words(predicate, relation);
  if (positive.empty())
    throw no_observations_error("no observations for (" + predicate + ", " + relation + ")");
  std::vector<std::string> lemmas(positive.begin(), positive.end());

  switch (config.method) {
    case Method::bbn: {
      report.method = config.balance ? "bbn-balanced" : "bbn";
      Taxonomy sub = t.ancestral_subgraph(lemmas);
      Network net = Network::build(sub, config.cpt());
      if (config.max_fan_in >= 2) net = or_cascade(net, config.max_fan_in);
      if (config.balance)
        net = balance(net, config.balance_target, config.balance_tol,
                      config.balance_max_sweeps)
                  .network;
      Evidence evidence;
      for (const auto& lemma : lemmas) evidence.observed[lemma] = true;

      MarginalReport marginals;
      try {
        marginals = posterior_marginals_exact(net, evidence, config.width_limit);
      } catch (const capacity_error&) {
        if (config.samples < 1) throw;
        marginals = posterior_marginals_sampled(net, evidence, config.samples, config.seed);
        report.method += "-sampled";
      }
      std::map<std::string, double> scores;
      for (const auto& id : sub.synsets()) scores[id] = marginals.marginals.at(id);
      report.ranking = ranked(std::move(scores));
      break;
    }
    case Method::resnik: {
      report.method = "resnik";
      auto assoc = rank_classes_resnik(*s, t, predicate, relation, config.alpha);
      report.ranking = ranked(assoc.associations);
      report.config_echo.push_back("strength=" + fmt(assoc.strength));
      break;
    }
    case Method::hmm: {
      report.method = "hmm";
      Taxonomy sub = t.ancestral_subgraph(lemmas);
      PathModel model = PathModel::build(sub, PathModel::Init::uniform);
      auto trace = em_train(model, s->word_counts(predicate, relation), config.em_iters);
      report.ranking = ranked(hmm_class_posterior(trace.model,
                                                  s->word_counts(predicate, relation)));
      break;
    }
    case Method::random_baseline:
    case Method::first_sense:
      throw data_error(std::string(to_string(config.method)) +
                       " is a disambiguation baseline, not a ranking method");
  }

  report.config_echo.push_back("likely=" + fmt(config.likely));
  report.config_echo.push_back("unlikely=" + fmt(config.unlikely));
  report.config_echo.push_back(std::string("balance=") + (config.balance ? "on" : "off"));
  if (config.balance) {
    report.config_echo.push_back("balance_target=" + fmt(config.balance_target));
    report.config_echo.push_back("balance_tol=" + fmt(config.balance_tol));
  }
  if (config.max_fan_in >= 2)
    report.config_echo.push_back("max_fan_in=" + std::to_string(config.max_fan_in));
  report.config_echo.push_back("seed=" + std::to_string(config.seed));
  return report;
}

std::string to_tsv(const PreferenceReport& report) {
  std::string out;
  out += "# method=" + report.method + " predicate=" + report.predicate +
         " relation=" + report.relation + "\n";
  for (const auto& line : report.config_echo) out += "# " + line + "\n";
  for (const auto& noun : report.skipped_nouns) out += "# skipped unknown noun: " + noun + "\n";
  out += "rank\tsynset\tscore\n";
  char buf[32];
  int rank = 1;
  for (const auto& [synset, score] : report.ranking) {
    std::snprintf(buf, sizeof buf, "%.6f", score);
    out += std::to_string(rank++) + "\t" + synset + "\t" + buf + "\n";
  }
  return out;
}

}  // namespace selpref
