#ifndef STABLERING_GROUP_HPP
#define STABLERING_GROUP_HPP

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "stablering/errors.hpp"
#include "stablering/partition.hpp"

namespace stablering {

/// Multiplication-table finite group with conjugacy-class data.
/// Element 0 is the identity; class 0 is the class of the identity.
class FiniteGroup {
public:
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "group")
      : name_(std::move(name)), mul_(std::move(table)) {
    validate_table();
    build_inverses();
    build_classes();
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int g, int h) const { return mul_[g][h]; }
  int inv(int g) const { return inv_[g]; }
  int class_of(int g) const { return class_of_[g]; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  int class_rep(int c) const { return classes_[c].front(); }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  const std::string& name() const { return name_; }

  /// Class of the inverse, as a map on class indices (an involution).
  int inverse_class(int c) const { return class_of_[inv_[class_rep(c)]]; }

  /// Class labels as an all-even index set for partition-valued functions.
  IndexSet class_index_set() const { return IndexSet::all_even(class_count()); }

private:
  void validate_table() {
    int m = order();
    if (m == 0) throw validation_error("group order must be positive");
    for (int g = 0; g < m; ++g) {
      if (static_cast<int>(mul_[g].size()) != m)
        throw validation_error("multiplication table row " + std::to_string(g) +
                               " has wrong length");
      for (int h = 0; h < m; ++h)
        if (mul_[g][h] < 0 || mul_[g][h] >= m)
          throw validation_error("table entry (" + std::to_string(g) + "," +
                                 std::to_string(h) + ") out of range");
    }
    for (int g = 0; g < m; ++g)
      if (mul_[0][g] != g || mul_[g][0] != g)
        throw validation_error("element 0 is not a two-sided identity at g=" +
                               std::to_string(g));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw validation_error("table not associative at (" + std::to_string(a) +
                                   "," + std::to_string(b) + "," + std::to_string(c) +
                                   ")");
  }

  void build_inverses() {
    int m = order();
    inv_.assign(m, -1);
    for (int g = 0; g < m; ++g) {
      for (int h = 0; h < m; ++h)
        if (mul_[g][h] == 0 && mul_[h][g] == 0) {
          inv_[g] = h;
          break;
        }
      if (inv_[g] < 0)
        throw validation_error("element " + std::to_string(g) +
                               " has no two-sided inverse");
    }
  }

  // Classes ordered: identity class first, then by smallest member id.
  void build_classes() {
    int m = order();
    class_of_.assign(m, -1);
    for (int g = 0; g < m; ++g) {
      if (class_of_[g] >= 0) continue;
      std::vector<int> orbit;
      std::vector<bool> seen(m, false);
      for (int h = 0; h < m; ++h) {
        int x = mul_[mul_[h][g]][inv_[h]];
        if (!seen[x]) {
          seen[x] = true;
          orbit.push_back(x);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      int idx = static_cast<int>(classes_.size());
      for (int x : orbit) class_of_[x] = idx;
      classes_.push_back(std::move(orbit));
    }
  }

  std::string name_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

namespace detail {

inline FiniteGroup cyclic_group(int k) {
  if (k < 1) throw validation_error("cyclic:k needs k >= 1");
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return FiniteGroup(std::move(t), "cyclic:" + std::to_string(k));
}

inline FiniteGroup symmetric_group(int k) {
  if (k < 1 || k > 5)
    throw validation_error("symmetric:k supports 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(c);
    }
  return FiniteGroup(std::move(t), "symmetric:" + std::to_string(k));
}

inline FiniteGroup table_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open group table file '" + path + "'");
  int m;
  if (!(in >> m) || m < 1)
    throw validation_error("group table file must start with a positive order");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      if (!(in >> t[g][h]))
        throw validation_error("group table file truncated at row " +
                               std::to_string(g));
  std::string extra;
  if (in >> extra)
    throw validation_error("trailing data in group table file");
  return FiniteGroup(std::move(t), "table:" + path);
}

}  // namespace detail

/// "trivial" | "cyclic:k" | "symmetric:k" (k <= 5) | "table:<path>".
inline FiniteGroup build_group(const std::string& spec) {
  if (spec == "trivial") return FiniteGroup({{0}}, "trivial");
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cyclic" || kind == "symmetric") {
    int k;
    try {
      std::size_t pos = 0;
      k = std::stoi(arg, &pos);
      if (pos != arg.size()) throw validation_error("bad integer");
    } catch (const std::exception&) {
      throw validation_error("bad group spec '" + spec + "'");
    }
    return kind == "cyclic" ? detail::cyclic_group(k) : detail::symmetric_group(k);
  }
  if (kind == "table" && !arg.empty()) return detail::table_group(arg);
  throw validation_error("unknown group spec '" + spec + "'");
}

}  // namespace stablering

#endif
