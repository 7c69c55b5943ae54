#ifndef SELPREF_TAXONOMY_HPP
#define SELPREF_TAXONOMY_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace selpref {

class TaxonomyBuilder;

// Immutable noun hierarchy: synsets, hyponymy arcs (child -> parent means the
// child is the narrower concept), and word->synset memberships.  Words and
// synsets live in disjoint namespaces.  Acyclicity is enforced at build time,
// so a topological order always exists.
class Taxonomy {
 public:
  Taxonomy() = default;

  std::size_t synset_count() const { return synset_ids_.size(); }
  std::size_t word_count() const { return word_ids_.size(); }
  std::size_t arc_count() const;
  std::size_t membership_count() const;
  bool empty() const { return synset_ids_.empty() && word_ids_.empty(); }

  // Sorted id lists; iteration over these is deterministic.
  const std::vector<std::string>& synsets() const { return synset_ids_; }
  const std::vector<std::string>& words() const { return word_ids_; }

  bool has_synset(const std::string& id) const;
  bool has_word(const std::string& lemma) const;

  // Hypernyms (broader concepts) of a synset.
  std::vector<std::string> parents_of(const std::string& synset) const;
  // Hyponyms (narrower concepts) of a synset.
  std::vector<std::string> children_of(const std::string& synset) const;
  // Direct senses of a word.
  std::vector<std::string> senses_of(const std::string& lemma) const;
  // Words whose direct senses include the synset.
  std::vector<std::string> members_of(const std::string& synset) const;

  // All ancestor synsets of a word (via its senses) or of a synset (including
  // itself).  Throws data_error for an unknown node.
  std::set<std::string> ancestors(const std::string& node) const;

  // Number of classes a word belongs to: |ancestors(word)|.
  std::size_t classes_count(const std::string& lemma) const;

  // Induced sub-taxonomy over the given words, their ancestor synsets, and
  // every arc/membership among retained nodes.
  Taxonomy ancestral_subgraph(const std::vector<std::string>& lemmas) const;

  // Synset ids, parents before children, ties by id.
  std::vector<std::string> topological_synsets() const;

  // True when every synset is an ancestor of at least one word.
  bool is_ancestral() const;

 private:
  friend class TaxonomyBuilder;

  int synset_index(const std::string& id) const;
  int word_index(const std::string& lemma) const;
  void ancestor_closure(int synset, std::vector<bool>& seen) const;

  std::vector<std::string> synset_ids_;           // sorted
  std::vector<std::vector<int>> parents_;         // per synset, sorted
  std::vector<std::vector<int>> children_;        // per synset, sorted
  std::vector<std::string> word_ids_;             // sorted
  std::vector<std::vector<int>> senses_;          // per word, sorted synset idxs
  std::vector<std::vector<int>> members_;         // per synset, sorted word idxs
  std::map<std::string, int> synset_index_;
  std::map<std::string, int> word_index_;
};

// Accumulates declarations in any order; build() validates everything.
class TaxonomyBuilder {
 public:
  TaxonomyBuilder& add_synset(const std::string& id);
  TaxonomyBuilder& add_arc(const std::string& child, const std::string& parent);
  TaxonomyBuilder& add_membership(const std::string& lemma, const std::string& synset);

  // Throws data_error on duplicate synsets, undeclared references, word/synset
  // id collisions, or a hyponymy cycle (one offending cycle is reported).
  Taxonomy build() const;

 private:
  std::vector<std::string> synsets_;
  std::vector<std::pair<std::string, std::string>> arcs_;  // (child, parent)
  std::vector<std::pair<std::string, std::string>> memberships_;
};

// Parses the line-oriented taxonomy format:
//   synset <id>
//   hyponym <child-id> <parent-id>
//   word <lemma> <synset-id>
// '#' starts a comment line, blank lines are ignored, records may appear in
// any order.  Throws parse_error / data_error.
Taxonomy parse_taxonomy(std::string_view text);

}  // namespace selpref

#endif
