#ifndef STABLERING_PARTITION_HPP
#define STABLERING_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "stablering/errors.hpp"

namespace stablering {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition (weight 0) is allowed.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw validation_error("partition part must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw validation_error("partition parts must be weakly decreasing");
    }
  }

  /// Sorts the given parts descending; zero parts are dropped.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Multiplicity of the part r.
  int multiplicity(int r) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
  }

  /// All multiplicities are 0 or 1.
  bool is_strict() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
      if (parts_[i] == parts_[i + 1]) return false;
    return true;
  }

  /// Conjugate (transpose) partition.
  Partition conjugate() const {
    std::vector<int> t;
    for (int i = 0; !parts_.empty() && i < parts_[0]; ++i) {
      int c = 0;
      for (int p : parts_)
        if (p > i) ++c;
      t.push_back(c);
    }
    return Partition(std::move(t));
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  // Canonical order: by weight, then reverse-lexicographic within a weight
  // ((4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)).
  bool operator<(const Partition& o) const {
    int w = weight(), wo = o.weight();
    if (w != wo) return w < wo;
    return parts_ > o.parts_;
  }

private:
  std::vector<int> parts_;
};

/// "3,1,1" with "-" for the empty partition.
inline std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::ostringstream os;
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os.str();
}

inline Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "-") return Partition();
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw validation_error("bad partition part '" + tok + "'");
    }
    if (pos != tok.size()) throw validation_error("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  try {
    return Partition(std::move(parts));
  } catch (const validation_error&) {
    throw validation_error("'" + s + "' is not a partition (descending positive parts)");
  }
}

/// A Z2-graded finite index set. Labels are 0..size-1; label 0 is the
/// identity/base label and must be even.
struct IndexSet {
  std::vector<bool> odd;  // odd[i] = label i is odd

  IndexSet() : odd{false} {}
  explicit IndexSet(std::vector<bool> parity) : odd(std::move(parity)) {
    if (odd.empty()) throw validation_error("index set must be nonempty");
    if (odd[0]) throw validation_error("label 0 must be even");
  }
  static IndexSet all_even(int k) { return IndexSet(std::vector<bool>(k, false)); }

  int size() const { return static_cast<int>(odd.size()); }
};

/// Partition-valued function on an IndexSet: one partition per label,
/// strict on odd labels. Absent labels hold the empty partition.
class PartitionFunction {
public:
  PartitionFunction() : assignment_(1) {}

  explicit PartitionFunction(std::vector<Partition> assignment)
      : assignment_(std::move(assignment)) {
    if (assignment_.empty()) assignment_.emplace_back();
  }

  PartitionFunction(std::vector<Partition> assignment, const IndexSet& S)
      : PartitionFunction(std::move(assignment)) {
    if (static_cast<int>(assignment_.size()) > S.size())
      throw validation_error("partition function has more labels than the index set");
    assignment_.resize(S.size());
    for (int c = 0; c < S.size(); ++c)
      if (S.odd[c] && !assignment_[c].is_strict())
        throw validation_error("partition at odd label " + std::to_string(c) +
                               " must be strict");
  }

  const Partition& at(int label) const {
    static const Partition kEmpty;
    if (label < 0) throw validation_error("negative label");
    if (label >= static_cast<int>(assignment_.size())) return kEmpty;
    return assignment_[label];
  }

  int label_count() const { return static_cast<int>(assignment_.size()); }

  int weight() const {
    int w = 0;
    for (const auto& p : assignment_) w += p.weight();
    return w;
  }

  int length() const {
    int l = 0;
    for (const auto& p : assignment_) l += p.length();
    return l;
  }

  /// All parts over all labels, merged descending.
  Partition merged() const {
    std::vector<int> all;
    for (const auto& p : assignment_)
      all.insert(all.end(), p.parts().begin(), p.parts().end());
    return Partition::from_unsorted(std::move(all));
  }

  // Trailing empty partitions are not significant for equality/order.
  bool operator==(const PartitionFunction& o) const {
    int m = std::max(label_count(), o.label_count());
    for (int c = 0; c < m; ++c)
      if (!(at(c) == o.at(c))) return false;
    return true;
  }

  bool operator<(const PartitionFunction& o) const {
    int w = weight(), wo = o.weight();
    if (w != wo) return w < wo;
    int m = std::max(label_count(), o.label_count());
    for (int c = 0; c < m; ++c) {
      if (at(c) == o.at(c)) continue;
      return at(c) < o.at(c);
    }
    return false;
  }

private:
  std::vector<Partition> assignment_;
};

/// "0:2,1;1:3"; "-" for the everywhere-empty function.
inline std::string format_pvf(const PartitionFunction& rho) {
  std::ostringstream os;
  bool first = true;
  for (int c = 0; c < rho.label_count(); ++c) {
    if (rho.at(c).empty()) continue;
    if (!first) os << ';';
    os << c << ':' << format_partition(rho.at(c));
    first = false;
  }
  return first ? "-" : os.str();
}

inline PartitionFunction parse_pvf(const std::string& s) {
  if (s.empty() || s == "-") return PartitionFunction();
  std::vector<Partition> assignment;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ';')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      // Bare partition shorthand: interpreted at label 0.
      if (!assignment.empty())
        throw validation_error("pvf item '" + item + "' lacks a label");
      assignment.push_back(parse_partition(item));
      continue;
    }
    int label;
    try {
      std::size_t pos = 0;
      label = std::stoi(item.substr(0, colon), &pos);
      if (pos != colon) throw validation_error("bad label");
    } catch (const std::exception&) {
      throw validation_error("bad pvf label in '" + item + "'");
    }
    if (label < 0) throw validation_error("negative pvf label");
    if (label >= static_cast<int>(assignment.size()))
      assignment.resize(label + 1);
    if (!assignment[label].empty())
      throw validation_error("duplicate pvf label " + std::to_string(label));
    assignment[label] = parse_partition(item.substr(colon + 1));
  }
  return PartitionFunction(std::move(assignment));
}

/// All partitions of n in reverse-lexicographic order ((n) first, (1^n) last).
inline std::vector<Partition> enumerate_partitions(int n, const Caps& caps = default_caps()) {
  if (n < 0) throw validation_error("cannot enumerate partitions of a negative integer");
  if (n > caps.partition_weight)
    throw size_limit_error("partition weight " + std::to_string(n) + " exceeds cap " +
                           std::to_string(caps.partition_weight));
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Strict partitions of n, reverse-lexicographic.
inline std::vector<Partition> enumerate_strict_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// All partition-valued functions of weight n on S, strict on odd labels.
/// Order: weight distributed label-by-label, partitions reverse-lex.
inline std::vector<PartitionFunction> enumerate_pvf(int n, const IndexSet& S,
                                                    const Caps& caps = default_caps()) {
  if (n < 0) throw validation_error("pvf weight must be nonnegative");
  if (n > caps.pvf_weight)
    throw size_limit_error("pvf weight " + std::to_string(n) + " exceeds cap " +
                           std::to_string(caps.pvf_weight));
  std::vector<PartitionFunction> out;
  std::vector<Partition> cur(S.size());
  auto rec = [&](auto&& self, int label, int rest) -> void {
    if (label == S.size()) {
      if (rest == 0) out.emplace_back(cur, S);
      return;
    }
    if (label == S.size() - 1) {
      // Last label takes the remainder.
      for (const auto& p : S.odd[label] ? enumerate_strict_partitions(rest)
                                        : enumerate_partitions(rest, caps)) {
        cur[label] = p;
        self(self, label + 1, 0);
      }
      cur[label] = Partition();
      return;
    }
    for (int w = 0; w <= rest; ++w) {
      for (const auto& p : S.odd[label] ? enumerate_strict_partitions(w)
                                        : enumerate_partitions(w, caps)) {
        cur[label] = p;
        self(self, label + 1, rest - w);
      }
    }
    cur[label] = Partition();
  };
  rec(rec, 0, n);
  return out;
}

/// Modified type: subtract 1 from every part at label 0, drop zeros.
inline PartitionFunction modify_type(const PartitionFunction& rho) {
  std::vector<Partition> a;
  a.reserve(rho.label_count());
  std::vector<int> parts0;
  for (int p : rho.at(0).parts())
    if (p > 1) parts0.push_back(p - 1);
  a.emplace_back(parts0);
  for (int c = 1; c < rho.label_count(); ++c) a.push_back(rho.at(c));
  return PartitionFunction(std::move(a));
}

/// Minimal n at which the class of modified type mu is nonempty.
inline int min_ambient_n(const PartitionFunction& mu) {
  return mu.weight() + mu.at(0).length();
}

/// Full type of weight n whose modified type is mu: add 1 to each part at
/// label 0 and pad with 1-parts there.
inline PartitionFunction unmodify_type(const PartitionFunction& mu, int n) {
  int need = min_ambient_n(mu);
  if (n < need)
    throw class_empty_error("K_" + format_pvf(mu) + "(" + std::to_string(n) +
                            ") = 0: needs n >= " + std::to_string(need));
  std::vector<int> parts0;
  for (int p : mu.at(0).parts()) parts0.push_back(p + 1);
  int pad = n - mu.weight() - mu.at(0).length();
  parts0.insert(parts0.end(), pad, 1);
  std::vector<Partition> a;
  a.emplace_back(parts0);
  for (int c = 1; c < mu.label_count(); ++c) a.push_back(mu.at(c));
  return PartitionFunction(std::move(a));
}

}  // namespace stablering

#endif
