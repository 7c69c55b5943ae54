#ifndef SELPREF_FACTOR_HPP
#define SELPREF_FACTOR_HPP

#include <map>
#include <vector>

#include "selpref/network.hpp"

namespace selpref {

// A nonnegative table over the joint Boolean states of a sorted variable
// scope.  Bit k of a table index holds the value of scope()[k].
class Factor {
 public:
  Factor(std::vector<int> scope, std::vector<double> table);

  // CPT of `node` as a factor, with observed variables already sliced out.
  static Factor cpt(const Network& n, int node, const std::map<int, bool>& evidence);

  const std::vector<int>& scope() const { return scope_; }
  const std::vector<double>& table() const { return table_; }
  bool contains(int var) const;

  Factor product(const Factor& other) const;
  Factor sum_out(int var) const;

  double max_entry() const;
  void scale(double factor);

 private:
  std::vector<int> scope_;
  std::vector<double> table_;
};

}  // namespace selpref

#endif
