// Command-line surface for the selectional-preference library: validate data
// files, rank synsets for a predicate, run WSD evaluations, dump networks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "selpref/errors.hpp"
#include "selpref/inference.hpp"
#include "selpref/pipeline.hpp"
#include "selpref/wsd.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Paths {
  std::string taxonomy;
  std::string observations;
  std::string test;
  std::string sense_freqs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void add_model_flags(CLI::App* sub, selpref::RunConfig& config, std::string& method) {
  sub->add_option("--method", method, "bbn | resnik | hmm | random | first-sense")
      ->capture_default_str();
  sub->add_option("--likely", config.likely, "CPT 'likely' value")->capture_default_str();
  sub->add_option("--unlikely", config.unlikely, "CPT 'unlikely' value / leak")
      ->capture_default_str();
  sub->add_flag("--balance", config.balance, "re-calibrate synset leaks to the target");
  sub->add_option("--balance-target", config.balance_target,
                  "evidence-free marginal target")
      ->capture_default_str();
  sub->add_option("--balance-tol", config.balance_tol, "balance tolerance")
      ->capture_default_str();
  sub->add_option("--width-limit", config.width_limit,
                  "max induced width for exact inference")
      ->capture_default_str();
  sub->add_option("--max-fan-in", config.max_fan_in,
                  "cascade nodes with more parents through aux OR nodes (0 = off)")
      ->capture_default_str();
  sub->add_option("--samples", config.samples,
                  "likelihood-weighting samples when exact inference overflows "
                  "(0 disables the fallback)")
      ->capture_default_str();
  sub->add_option("--seed", config.seed, "seed for every stochastic path")
      ->capture_default_str();
  sub->add_flag("--skip-unknown-nouns", config.skip_unknown_nouns,
                "drop observations whose noun is missing from the taxonomy");
  sub->set_config("--config", "", "key=value config file; flags override");
}

int cmd_validate(const Paths& paths) {
  int exit_code = kExitOk;
  auto taxonomy = selpref::parse_taxonomy(read_file(paths.taxonomy));
  auto store = selpref::parse_observations(read_file(paths.observations));

  std::vector<std::string> unknown;
  store.filter_known(taxonomy, unknown);
  std::printf("%zu synsets, %zu words, %zu unknown nouns\n", taxonomy.synset_count(),
              taxonomy.word_count(), unknown.size());
  std::printf("arcs: %zu, memberships: %zu\n", taxonomy.arc_count(),
              taxonomy.membership_count());
  std::printf("observations: %zu records, %lld tokens, %zu predicate-relation pairs\n",
              store.records().size(), static_cast<long long>(store.total_count()),
              store.pairs().size());
  for (const auto& noun : unknown) {
    std::printf("warning: observed noun missing from taxonomy: %s\n", noun.c_str());
    exit_code = kExitData;
  }
  return exit_code;
}

int cmd_rank(const Paths& paths, const selpref::RunConfig& config,
             const std::string& predicate, const std::string& relation) {
  auto taxonomy = selpref::parse_taxonomy(read_file(paths.taxonomy));
  auto store = selpref::parse_observations(read_file(paths.observations));
  auto report = selpref::learn_preferences(taxonomy, store, predicate, relation, config);
  std::fputs(selpref::to_tsv(report).c_str(), stdout);
  return kExitOk;
}

int cmd_wsd(const Paths& paths, selpref::RunConfig config, bool all_methods) {
  auto taxonomy = selpref::parse_taxonomy(read_file(paths.taxonomy));
  auto store = selpref::parse_observations(read_file(paths.observations));
  auto test = selpref::parse_test_instances(read_file(paths.test));

  selpref::SenseFrequencies freqs;
  if (!paths.sense_freqs.empty())
    freqs = selpref::parse_sense_frequencies(read_file(paths.sense_freqs));

  auto run_one = [&](selpref::Method method, bool balance) {
    selpref::RunConfig c = config;
    c.method = method;
    c.balance = balance;
    if (method == selpref::Method::first_sense)
      return selpref::first_sense_baseline(test, taxonomy, freqs);
    return selpref::evaluate(store, test, taxonomy, c);
  };

  std::vector<selpref::WsdReport> reports;
  if (all_methods) {
    reports.push_back(run_one(selpref::Method::random_baseline, false));
    reports.push_back(run_one(selpref::Method::hmm, false));
    reports.push_back(run_one(selpref::Method::resnik, false));
    reports.push_back(run_one(selpref::Method::bbn, false));
    reports.push_back(run_one(selpref::Method::bbn, true));
    if (!freqs.empty()) reports.push_back(run_one(selpref::Method::first_sense, false));
  } else {
    reports.push_back(run_one(config.method, config.balance));
  }

  for (const auto& r : reports) std::fputs(selpref::to_tsv(r).c_str(), stdout);
  std::fputs("\n", stdout);
  std::fputs(selpref::to_table(reports).c_str(), stdout);
  return kExitOk;
}

int cmd_dump_network(const Paths& paths, const selpref::RunConfig& config,
                     const std::string& predicate, const std::string& relation) {
  auto taxonomy = selpref::parse_taxonomy(read_file(paths.taxonomy));
  auto store = selpref::parse_observations(read_file(paths.observations));

  const selpref::ObservationStore* s = &store;
  selpref::ObservationStore filtered;
  std::vector<std::string> dropped;
  if (config.skip_unknown_nouns) {
    filtered = store.filter_known(taxonomy, dropped);
    s = &filtered;
  }
  auto positive = s->positive_words(predicate, relation);
  if (positive.empty())
    throw selpref::no_observations_error("no observations for (" + predicate + ", " +
                                         relation + ")");
  auto sub = taxonomy.ancestral_subgraph({positive.begin(), positive.end()});
  auto net = selpref::Network::build(sub, config.cpt());
  if (config.max_fan_in >= 2) net = selpref::or_cascade(net, config.max_fan_in);
  if (config.balance)
    net = selpref::balance(net, config.balance_target, config.balance_tol,
                           config.balance_max_sweeps)
              .network;
  std::fputs(net.dump().c_str(), stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"selectional-preference learning over a noun taxonomy"};
  app.require_subcommand(1);

  Paths paths;
  selpref::RunConfig config;
  std::string method_name = "bbn";
  std::string predicate, relation = "object";
  bool all_methods = false;

  auto* validate = app.add_subcommand("validate", "check taxonomy and observation files");
  validate->add_option("--taxonomy", paths.taxonomy, "taxonomy file")->required();
  validate->add_option("--observations", paths.observations, "observation TSV")->required();

  auto* rank = app.add_subcommand("rank", "ranked synset preferences for a predicate");
  rank->add_option("--taxonomy", paths.taxonomy, "taxonomy file")->required();
  rank->add_option("--observations", paths.observations, "observation TSV")->required();
  rank->add_option("predicate", predicate, "predicate lemma")->required();
  rank->add_option("relation", relation, "relation tag")->capture_default_str();
  add_model_flags(rank, config, method_name);

  auto* wsd = app.add_subcommand("wsd", "word sense disambiguation evaluation");
  wsd->add_option("--taxonomy", paths.taxonomy, "taxonomy file")->required();
  wsd->add_option("--observations", paths.observations, "training observation TSV")
      ->required();
  wsd->add_option("--test", paths.test, "sense-tagged test TSV")->required();
  wsd->add_option("--sense-freqs", paths.sense_freqs,
                  "sense-tagged frequency TSV for the first-sense baseline");
  wsd->add_flag("--all-methods", all_methods, "compare every method on the same data");
  add_model_flags(wsd, config, method_name);

  auto* dump = app.add_subcommand("dump-network", "print the per-predicate network");
  dump->add_option("--taxonomy", paths.taxonomy, "taxonomy file")->required();
  dump->add_option("--observations", paths.observations, "observation TSV")->required();
  dump->add_option("predicate", predicate, "predicate lemma")->required();
  dump->add_option("relation", relation, "relation tag")->capture_default_str();
  add_model_flags(dump, config, method_name);

  try {
    app.parse(argc, argv);
    config.method = selpref::method_from_string(method_name);
    if (validate->parsed()) return cmd_validate(paths);
    if (rank->parsed()) return cmd_rank(paths, config, predicate, relation);
    if (wsd->parsed()) return cmd_wsd(paths, config, all_methods);
    if (dump->parsed()) return cmd_dump_network(paths, config, predicate, relation);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const selpref::capacity_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCapacity;
  } catch (const selpref::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
}
