#include "selpref/factor.hpp"

#include <algorithm>
#include <cmath>

#include "selpref/errors.hpp"

namespace selpref {

Factor::Factor(std::vector<int> scope, std::vector<double> table)
    : scope_(std::move(scope)), table_(std::move(table)) {
  if (!std::is_sorted(scope_.begin(), scope_.end()) ||
      std::adjacent_find(scope_.begin(), scope_.end()) != scope_.end())
    throw data_error("factor scope must be sorted and duplicate-free");
  if (scope_.size() >= 8 * sizeof(std::size_t) - 1)
    throw capacity_error("factor scope too large");
  if (table_.size() != (std::size_t{1} << scope_.size()))
    throw data_error("factor table size does not match scope");
  for (double v : table_)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw data_error("factor entries must be finite and nonnegative");
}

Factor Factor::cpt(const Network& n, int node, const std::map<int, bool>& evidence) {
  const auto& parents = n.node(node).parents;
  std::vector<int> free_parents;
  bool fixed_any_true = false;
  for (int p : parents) {
    auto it = evidence.find(p);
    if (it == evidence.end())
      free_parents.push_back(p);
    else
      fixed_any_true = fixed_any_true || it->second;
  }

  auto node_ev = evidence.find(node);
  std::vector<int> scope = free_parents;
  if (node_ev == evidence.end()) scope.push_back(node);
  std::sort(scope.begin(), scope.end());

  std::size_t node_bit = 0, parent_mask = 0;
  for (std::size_t k = 0; k < scope.size(); ++k) {
    if (scope[k] == node && node_ev == evidence.end())
      node_bit = std::size_t{1} << k;
    else
      parent_mask |= std::size_t{1} << k;
  }

  std::vector<double> table(std::size_t{1} << scope.size());
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    bool any_true = fixed_any_true || (idx & parent_mask) != 0;
    double p_true = n.prob_true(node, any_true);
    bool value = node_ev != evidence.end() ? node_ev->second : (idx & node_bit) != 0;
    table[idx] = value ? p_true : 1.0 - p_true;
  }
  return Factor(std::move(scope), std::move(table));
}

bool Factor::contains(int var) const {
  return std::binary_search(scope_.begin(), scope_.end(), var);
}

Factor Factor::product(const Factor& other) const {
  std::vector<int> scope;
  std::set_union(scope_.begin(), scope_.end(), other.scope_.begin(), other.scope_.end(),
                 std::back_inserter(scope));
  if (scope.size() >= 8 * sizeof(std::size_t) - 1)
    throw capacity_error("factor product scope too large");

  // Per output variable, the bit it feeds in each input factor.
  auto strides = [&scope](const std::vector<int>& sub) {
    std::vector<std::size_t> out(scope.size(), 0);
    std::size_t k = 0;
    for (std::size_t j = 0; j < scope.size(); ++j) {
      if (k < sub.size() && sub[k] == scope[j]) {
        out[j] = std::size_t{1} << k;
        ++k;
      }
    }
    return out;
  };
  const auto a_stride = strides(scope_);
  const auto b_stride = strides(other.scope_);

  std::vector<double> table(std::size_t{1} << scope.size());
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::size_t a = 0, b = 0;
    for (std::size_t j = 0; j < scope.size(); ++j) {
      if (idx & (std::size_t{1} << j)) {
        a |= a_stride[j];
        b |= b_stride[j];
      }
    }
    table[idx] = table_[a] * other.table_[b];
  }
  return Factor(std::move(scope), std::move(table));
}

Factor Factor::sum_out(int var) const {
  auto it = std::lower_bound(scope_.begin(), scope_.end(), var);
  if (it == scope_.end() || *it != var)
    throw data_error("variable not in factor scope");
  std::size_t k = static_cast<std::size_t>(it - scope_.begin());
  std::size_t low_mask = (std::size_t{1} << k) - 1;

  std::vector<int> scope;
  scope.reserve(scope_.size() - 1);
  for (int v : scope_)
    if (v != var) scope.push_back(v);

  std::vector<double> table(std::size_t{1} << scope.size());
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::size_t base = (idx & low_mask) | ((idx & ~low_mask) << 1);
    table[idx] = table_[base] + table_[base | (std::size_t{1} << k)];
  }
  return Factor(std::move(scope), std::move(table));
}

double Factor::max_entry() const {
  double m = 0.0;
  for (double v : table_) m = std::max(m, v);
  return m;
}

void Factor::scale(double factor) {
  for (double& v : table_) v *= factor;
}

}  // namespace selpref
