#ifndef STABLERING_PARTIALPERM_HPP
#define STABLERING_PARTIALPERM_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stablering/errors.hpp"
#include "stablering/jm.hpp"
#include "stablering/partition.hpp"

namespace stablering {

/// Partial permutation (sigma, U): a subset U of {1..n} (0-based internally)
/// and a permutation of U. Points outside U are not referenced.
struct PartialPerm {
  int n = 0;
  std::vector<int> support;  // sorted points
  std::vector<int> images;   // images[k] = image of support[k]

  bool operator==(const PartialPerm& o) const {
    return n == o.n && support == o.support && images == o.images;
  }
  bool operator<(const PartialPerm& o) const {
    if (n != o.n) return n < o.n;
    if (support != o.support) return support < o.support;
    return images < o.images;
  }

  int image_of(int x) const {
    auto it = std::lower_bound(support.begin(), support.end(), x);
    if (it == support.end() || *it != x) return x;  // outside U: fixed
    return images[it - support.begin()];
  }

  void validate() const {
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != support)
      throw validation_error("partial permutation does not map its support onto itself");
    for (int x : support)
      if (x < 0 || x >= n) throw validation_error("support point out of ambient range");
  }

  /// Cycle type of sigma on U; fixed points inside U count as 1-parts.
  Partition cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(support.size(), false);
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (seen[k]) continue;
      int len = 0, x = support[k];
      do {
        auto it = std::lower_bound(support.begin(), support.end(), x);
        std::size_t idx = it - support.begin();
        seen[idx] = true;
        x = images[idx];
        ++len;
      } while (x != support[k]);
      lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
  }
};

inline PartialPerm pp_identity(int n) { return PartialPerm{n, {}, {}}; }

/// (sigma, U)(tau, V) = (sigma tau, U u V): both factors extended by fixed
/// points on the other's support, then composed.
inline PartialPerm pp_mul(const PartialPerm& a, const PartialPerm& b) {
  if (a.n != b.n)
    throw validation_error("pp_mul: ambient sizes differ");
  PartialPerm c;
  c.n = a.n;
  std::set_union(a.support.begin(), a.support.end(), b.support.begin(),
                 b.support.end(), std::back_inserter(c.support));
  c.images.reserve(c.support.size());
  for (int x : c.support) c.images.push_back(a.image_of(b.image_of(x)));
  return c;
}

/// ad g: (sigma, U) -> (g sigma g^-1, gU) for g in S_n.
inline PartialPerm pp_conjugate(const Perm& g, const PartialPerm& x) {
  PartialPerm y;
  y.n = x.n;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < x.support.size(); ++k)
    pairs.emplace_back(g[x.support[k]], g[x.images[k]]);
  std::sort(pairs.begin(), pairs.end());
  for (auto& [s, im] : pairs) {
    y.support.push_back(s);
    y.images.push_back(im);
  }
  return y;
}

/// The full S_n-orbit indexed by rho: all (sigma, U) with |U| = ||rho|| and
/// sigma of cycle type rho on U. Empty when ||rho|| > n.
inline std::vector<PartialPerm> orbit_expand(const Partition& rho, int n) {
  int k = rho.weight();
  if (k > n) return {};
  std::vector<PartialPerm> out;
  std::vector<int> support;
  auto for_each_subset = [&](auto&& self, int from) -> void {
    if (static_cast<int>(support.size()) == k) {
      // All permutations of this support with the right cycle type.
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      std::vector<int> perm = idx;
      do {
        PartialPerm x;
        x.n = n;
        x.support = support;
        x.images.resize(k);
        for (int i = 0; i < k; ++i) x.images[i] = support[perm[i]];
        if (x.cycle_type() == rho) out.push_back(std::move(x));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int v = from; v < n; ++v) {
      support.push_back(v);
      self(self, v + 1);
      support.pop_back();
    }
  };
  for_each_subset(for_each_subset, 0);
  return out;
}

/// S_n-invariant element of Z[PS_n] in the orbit basis c_rho(n).
struct OrbitElement {
  int n = 0;
  std::map<Partition, long long> coeffs;

  void add(const Partition& rho, long long c) {
    if (c == 0) return;
    auto it = coeffs.find(rho);
    if (it == coeffs.end()) {
      coeffs.emplace(rho, c);
    } else if ((it->second += c) == 0) {
      coeffs.erase(it);
    }
  }

  bool operator==(const OrbitElement& o) const { return n == o.n && coeffs == o.coeffs; }
};

/// The basis symbol c_rho(n); zero element when ||rho|| > n.
inline OrbitElement orbit_sum(const Partition& rho, int n) {
  OrbitElement e;
  e.n = n;
  if (rho.weight() <= n) e.add(rho, 1);
  return e;
}

inline long long orbit_size(const Partition& rho, int n) {
  int k = rho.weight();
  long long subsets = 1;
  for (int i = 0; i < k; ++i) subsets = subsets * (n - i) / (i + 1);
  return subsets * symmetric_class_size(rho);
}

/// Re-express a raw multiset of partial permutations in the orbit basis;
/// requires the coefficient function to be constant on S_n-orbits and each
/// orbit fully covered.
inline OrbitElement collect_orbits(const std::map<PartialPerm, long long>& terms, int n) {
  OrbitElement out;
  out.n = n;
  std::map<Partition, std::pair<long long, long long>> by_orbit;  // coeff, count
  for (const auto& [x, c] : terms) {
    Partition lbl = x.cycle_type();
    auto it = by_orbit.find(lbl);
    if (it == by_orbit.end()) {
      by_orbit.emplace(lbl, std::make_pair(c, 1LL));
    } else {
      if (it->second.first != c)
        throw math_error("collect_orbits: coefficient not constant on the orbit of " +
                         format_partition(lbl));
      ++it->second.second;
    }
  }
  for (const auto& [lbl, cc] : by_orbit) {
    if (cc.second != orbit_size(lbl, n))
      throw math_error("collect_orbits: orbit of " + format_partition(lbl) +
                       " only partially covered");
    out.add(lbl, cc.first);
  }
  return out;
}

/// Expand an orbit element into raw partial permutations.
inline std::map<PartialPerm, long long> expand(const OrbitElement& e) {
  std::map<PartialPerm, long long> out;
  for (const auto& [rho, c] : e.coeffs)
    for (auto& x : orbit_expand(rho, e.n)) out[std::move(x)] += c;
  return out;
}

/// c_rho(n) . c_sigma(n) = sum_nu C_{rho sigma}^nu(n) c_nu(n), by full
/// expansion of the product of the two orbit sums.
inline OrbitElement pp_convolve(const Partition& rho, const Partition& sigma, int n,
                                const Caps& caps = default_caps()) {
  if (rho.weight() > n || sigma.weight() > n) {
    OrbitElement zero;
    zero.n = n;
    return zero;
  }
  long long work = orbit_size(rho, n) * orbit_size(sigma, n);
  if (work > caps.group_enum)
    throw size_limit_error("pp_convolve: " + std::to_string(work) +
                           " products exceed cap " + std::to_string(caps.group_enum));
  auto ra = orbit_expand(rho, n);
  auto rb = orbit_expand(sigma, n);
  std::map<PartialPerm, long long> prod;
  for (const auto& a : ra)
    for (const auto& b : rb) ++prod[pp_mul(a, b)];
  return collect_orbits(prod, n);
}

/// theta_{n,m}: identity on components with U inside {1..m}, zero otherwise.
inline std::map<PartialPerm, long long> theta(
    int n, int m, const std::map<PartialPerm, long long>& x) {
  if (m > n) throw validation_error("theta: m must be <= n");
  std::map<PartialPerm, long long> out;
  for (const auto& [pp, c] : x) {
    if (pp.n != n) throw validation_error("theta: element has wrong ambient size");
    if (!pp.support.empty() && pp.support.back() >= m) continue;
    PartialPerm y = pp;
    y.n = m;
    out[y] += c;
  }
  return out;
}

/// theta on the orbit basis: c_rho(n) -> c_rho(m).
inline OrbitElement theta(int n, int m, const OrbitElement& e) {
  if (m > n) throw validation_error("theta: m must be <= n");
  if (e.n != n) throw validation_error("theta: element has wrong ambient size");
  OrbitElement out;
  out.n = m;
  for (const auto& [rho, c] : e.coeffs)
    if (rho.weight() <= m) out.add(rho, c);
  return out;
}

/// Forgetful homomorphism f_n: each (sigma, U) maps to sigma in S_n, fixing
/// the complement of U pointwise; the result is expressed in the modified-
/// type K basis of R_Z(S_n).
inline ClassVector forget(const OrbitElement& e) {
  PermAlg alg;
  for (const auto& [x, c] : expand(e)) {
    Perm p = perm_identity(e.n);
    for (std::size_t k = 0; k < x.support.size(); ++k) p[x.support[k]] = x.images[k];
    if ((alg[p] += c) == 0) alg.erase(p);
  }
  return perm_alg_to_classes(alg, e.n);
}

/// Age (degree shift number) of a permutation of cycle type lambda acting on
/// the diagonal of X^n with dim X = d: (d/2) * sum_i (lambda_i - 1).
inline boost::multiprecision::cpp_rational age(const Partition& cycle_type, int d) {
  if (d < 0) throw validation_error("age: dimension must be nonnegative");
  int s = cycle_type.weight() - cycle_type.length();
  return boost::multiprecision::cpp_rational(d * s, 2);
}

}  // namespace stablering

#endif
