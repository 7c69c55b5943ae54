#include "selpref/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "selpref/errors.hpp"

namespace selpref {

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::size_t Taxonomy::arc_count() const {
  std::size_t n = 0;
  for (const auto& p : parents_) n += p.size();
  return n;
}

std::size_t Taxonomy::membership_count() const {
  std::size_t n = 0;
  for (const auto& s : senses_) n += s.size();
  return n;
}

bool Taxonomy::has_synset(const std::string& id) const {
  return synset_index_.count(id) != 0;
}

bool Taxonomy::has_word(const std::string& lemma) const {
  return word_index_.count(lemma) != 0;
}

int Taxonomy::synset_index(const std::string& id) const {
  auto it = synset_index_.find(id);
  if (it == synset_index_.end()) throw data_error("unknown synset: " + id);
  return it->second;
}

int Taxonomy::word_index(const std::string& lemma) const {
  auto it = word_index_.find(lemma);
  if (it == word_index_.end()) throw data_error("unknown word: " + lemma);
  return it->second;
}

std::vector<std::string> Taxonomy::parents_of(const std::string& synset) const {
  std::vector<std::string> out;
  for (int p : parents_[synset_index(synset)]) out.push_back(synset_ids_[p]);
  return out;
}

std::vector<std::string> Taxonomy::children_of(const std::string& synset) const {
  std::vector<std::string> out;
  for (int c : children_[synset_index(synset)]) out.push_back(synset_ids_[c]);
  return out;
}

std::vector<std::string> Taxonomy::senses_of(const std::string& lemma) const {
  std::vector<std::string> out;
  for (int s : senses_[word_index(lemma)]) out.push_back(synset_ids_[s]);
  return out;
}

std::vector<std::string> Taxonomy::members_of(const std::string& synset) const {
  std::vector<std::string> out;
  for (int w : members_[synset_index(synset)]) out.push_back(word_ids_[w]);
  return out;
}

void Taxonomy::ancestor_closure(int synset, std::vector<bool>& seen) const {
  if (seen[synset]) return;
  seen[synset] = true;
  for (int p : parents_[synset]) ancestor_closure(p, seen);
}

std::set<std::string> Taxonomy::ancestors(const std::string& node) const {
  std::vector<bool> seen(synset_ids_.size(), false);
  if (auto it = word_index_.find(node); it != word_index_.end()) {
    for (int s : senses_[it->second]) ancestor_closure(s, seen);
  } else if (auto jt = synset_index_.find(node); jt != synset_index_.end()) {
    ancestor_closure(jt->second, seen);
  } else {
    throw data_error("unknown node: " + node);
  }
  std::set<std::string> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.insert(synset_ids_[i]);
  return out;
}

std::size_t Taxonomy::classes_count(const std::string& lemma) const {
  word_index(lemma);  // unknown-word check
  return ancestors(lemma).size();
}

Taxonomy Taxonomy::ancestral_subgraph(const std::vector<std::string>& lemmas) const {
  std::vector<bool> keep(synset_ids_.size(), false);
  std::set<std::string> kept_words;
  for (const auto& lemma : lemmas) {
    for (int s : senses_[word_index(lemma)]) ancestor_closure(s, keep);
    kept_words.insert(lemma);
  }
  TaxonomyBuilder b;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!keep[i]) continue;
    b.add_synset(synset_ids_[i]);
    for (int p : parents_[i])
      if (keep[p]) b.add_arc(synset_ids_[i], synset_ids_[p]);
  }
  for (const auto& lemma : kept_words)
    for (const auto& sense : senses_of(lemma)) b.add_membership(lemma, sense);
  return b.build();
}

std::vector<std::string> Taxonomy::topological_synsets() const {
  const std::size_t n = synset_ids_.size();
  std::vector<int> missing(n);
  for (std::size_t i = 0; i < n; ++i) missing[i] = static_cast<int>(parents_[i].size());
  // min-id heap keeps the order canonical
  std::set<int> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (missing[i] == 0) ready.insert(static_cast<int>(i));
  std::vector<std::string> order;
  order.reserve(n);
  while (!ready.empty()) {
    int s = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(synset_ids_[s]);
    for (int c : children_[s])
      if (--missing[c] == 0) ready.insert(c);
  }
  return order;
}

bool Taxonomy::is_ancestral() const {
  std::vector<bool> covered(synset_ids_.size(), false);
  for (const auto& senses : senses_)
    for (int s : senses) ancestor_closure(s, covered);
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

TaxonomyBuilder& TaxonomyBuilder::add_synset(const std::string& id) {
  synsets_.push_back(id);
  return *this;
}

TaxonomyBuilder& TaxonomyBuilder::add_arc(const std::string& child,
                                          const std::string& parent) {
  arcs_.emplace_back(child, parent);
  return *this;
}

TaxonomyBuilder& TaxonomyBuilder::add_membership(const std::string& lemma,
                                                 const std::string& synset) {
  memberships_.emplace_back(lemma, synset);
  return *this;
}

Taxonomy TaxonomyBuilder::build() const {
  Taxonomy t;
  t.synset_ids_ = synsets_;
  std::sort(t.synset_ids_.begin(), t.synset_ids_.end());
  for (std::size_t i = 1; i < t.synset_ids_.size(); ++i)
    if (t.synset_ids_[i] == t.synset_ids_[i - 1])
      throw data_error("duplicate synset declaration: " + t.synset_ids_[i]);
  for (std::size_t i = 0; i < t.synset_ids_.size(); ++i)
    t.synset_index_[t.synset_ids_[i]] = static_cast<int>(i);

  const std::size_t n = t.synset_ids_.size();
  t.parents_.assign(n, {});
  t.children_.assign(n, {});
  for (const auto& [child, parent] : arcs_) {
    auto c = t.synset_index_.find(child);
    auto p = t.synset_index_.find(parent);
    if (c == t.synset_index_.end())
      throw data_error("arc references undeclared synset: " + child);
    if (p == t.synset_index_.end())
      throw data_error("arc references undeclared synset: " + parent);
    t.parents_[c->second].push_back(p->second);
    t.children_[p->second].push_back(c->second);
  }
  for (auto& v : t.parents_) sort_unique(v);
  for (auto& v : t.children_) sort_unique(v);

  std::vector<std::string> lemmas;
  for (const auto& [lemma, synset] : memberships_) {
    if (t.synset_index_.count(lemma))
      throw data_error("word collides with a synset id: " + lemma);
    if (!t.synset_index_.count(synset))
      throw data_error("membership references undeclared synset: " + synset);
    lemmas.push_back(lemma);
  }
  std::sort(lemmas.begin(), lemmas.end());
  lemmas.erase(std::unique(lemmas.begin(), lemmas.end()), lemmas.end());
  t.word_ids_ = lemmas;
  for (std::size_t i = 0; i < lemmas.size(); ++i)
    t.word_index_[lemmas[i]] = static_cast<int>(i);
  t.senses_.assign(lemmas.size(), {});
  t.members_.assign(n, {});
  for (const auto& [lemma, synset] : memberships_) {
    int w = t.word_index_[lemma];
    int s = t.synset_index_[synset];
    t.senses_[w].push_back(s);
    t.members_[s].push_back(w);
  }
  for (auto& v : t.senses_) sort_unique(v);
  for (auto& v : t.members_) sort_unique(v);

  // Constructive acyclicity check; on failure walk parent links to exhibit
  // one cycle.
  if (t.topological_synsets().size() != n) {
    std::vector<int> missing(n, 0);
    for (std::size_t i = 0; i < n; ++i) missing[i] = static_cast<int>(t.parents_[i].size());
    std::deque<int> queue;
    for (std::size_t i = 0; i < n; ++i)
      if (missing[i] == 0) queue.push_back(static_cast<int>(i));
    std::vector<bool> resolved(n, false);
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      resolved[s] = true;
      for (int c : t.children_[s])
        if (--missing[c] == 0) queue.push_back(c);
    }
    int start = 0;
    while (resolved[start]) ++start;
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    int cur = start;
    while (!on_path[cur]) {
      on_path[cur] = true;
      path.push_back(cur);
      for (int p : t.parents_[cur]) {
        if (!resolved[p]) {
          cur = p;
          break;
        }
      }
    }
    std::string msg = "hyponymy cycle detected: ";
    auto it = std::find(path.begin(), path.end(), cur);
    for (; it != path.end(); ++it) msg += t.synset_ids_[*it] + " -> ";
    msg += t.synset_ids_[cur];
    throw data_error(msg);
  }
  return t;
}

Taxonomy parse_taxonomy(std::string_view text) {
  TaxonomyBuilder builder;
  std::set<std::string> declared;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  // First pass: declarations only, so record order does not matter.
  std::vector<std::pair<int, std::vector<std::string>>> deferred;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) {
      if (t[0] == '#') break;
      tok.push_back(t);
    }
    if (tok.empty()) continue;
    if (tok[0] == "synset") {
      if (tok.size() != 2) throw parse_error(line_no, "expected: synset <id>");
      if (!declared.insert(tok[1]).second)
        throw parse_error(line_no, "duplicate synset declaration: " + tok[1]);
      builder.add_synset(tok[1]);
    } else if (tok[0] == "hyponym" || tok[0] == "word") {
      deferred.emplace_back(line_no, tok);
    } else {
      throw parse_error(line_no, "unknown record type: " + tok[0]);
    }
  }
  for (const auto& [no, tok] : deferred) {
    if (tok[0] == "hyponym") {
      if (tok.size() != 3) throw parse_error(no, "expected: hyponym <child> <parent>");
      if (!declared.count(tok[1]))
        throw parse_error(no, "reference to undeclared synset: " + tok[1]);
      if (!declared.count(tok[2]))
        throw parse_error(no, "reference to undeclared synset: " + tok[2]);
      builder.add_arc(tok[1], tok[2]);
    } else {
      if (tok.size() != 3) throw parse_error(no, "expected: word <lemma> <synset>");
      if (declared.count(tok[1]))
        throw parse_error(no, "word collides with a synset id: " + tok[1]);
      if (!declared.count(tok[2]))
        throw parse_error(no, "reference to undeclared synset: " + tok[2]);
      builder.add_membership(tok[1], tok[2]);
    }
  }
  return builder.build();
}

}  // namespace selpref
