#ifndef SELPREF_RESNIK_HPP
#define SELPREF_RESNIK_HPP

#include <map>
#include <string>

#include "selpref/corpus.hpp"
#include "selpref/taxonomy.hpp"

namespace selpref {

struct AssociationReport {
  double strength = 0.0;                      // S(p, r)
  std::map<std::string, double> associations; // A(p, r, c), may be negative
};

// Selectional preference strength: KL divergence (natural log) between the
// predicate-conditioned class distribution and the prior.
double preference_strength(const ClassDistribution& post, const ClassDistribution& prior);

// Class share of the preference strength; requires strength > 0.
double selectional_association(const ClassDistribution& post, const ClassDistribution& prior,
                               const std::string& synset, double strength);

// Full pipeline around the two measures: class distributions with add-alpha
// smoothing over the taxonomy's synsets, then strength plus the per-class
// association map.
AssociationReport rank_classes_resnik(const ObservationStore& s, const Taxonomy& t,
                                      const std::string& predicate,
                                      const std::string& relation, double alpha = 0.01);

}  // namespace selpref

#endif
