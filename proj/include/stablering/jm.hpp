#ifndef STABLERING_JM_HPP
#define STABLERING_JM_HPP

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "stablering/errors.hpp"
#include "stablering/fhring.hpp"
#include "stablering/partition.hpp"
#include "stablering/wreath.hpp"

namespace stablering {

/// Permutations as 0-based image arrays; elements of Z[S_n].
using Perm = std::vector<int>;
using PermAlg = std::map<Perm, long long>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline int perm_cycle_count(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

/// Filtration degree ||sigma|| = n - #cycles.
inline int perm_degree(const Perm& p) {
  return static_cast<int>(p.size()) - perm_cycle_count(p);
}

inline Partition perm_cycle_type(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  std::vector<int> lens;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition::from_unsorted(std::move(lens));
}

/// Homogeneous element of the filtered group algebra Z[S_n]: every
/// permutation in `terms` has filtration degree equal to `degree`.
struct GradedElement {
  int n = 0;
  int degree = 0;
  PermAlg terms;

  void add(const Perm& p, long long c) {
    if (c == 0) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms.emplace(p, c);
    } else if ((it->second += c) == 0) {
      terms.erase(it);
    }
  }

  bool zero() const { return terms.empty(); }
  bool operator==(const GradedElement& o) const {
    return n == o.n && degree == o.degree && terms == o.terms;
  }
};

inline GradedElement graded_unit(int n) {
  GradedElement e;
  e.n = n;
  e.degree = 0;
  e.add(perm_identity(n), 1);
  return e;
}

/// xi_j = sum_{i<j} (i, j); j is 1-based. xi_1 = 0.
inline GradedElement jm_element(int j, int n) {
  if (j < 1 || j > n)
    throw validation_error("jm_element: j=" + std::to_string(j) +
                           " out of range 1.." + std::to_string(n));
  GradedElement e;
  e.n = n;
  e.degree = j == 1 ? 0 : 1;
  for (int i = 0; i < j - 1; ++i) {
    Perm p = perm_identity(n);
    std::swap(p[i], p[j - 1]);
    e.add(p, 1);
  }
  return e;
}

/// Graded (star) product: keeps only the degree-additive part of the
/// ordinary product. On basis elements sigma * tau survives iff
/// ||sigma tau|| = ||sigma|| + ||tau||.
inline GradedElement star_mul(const GradedElement& a, const GradedElement& b) {
  if (a.n != b.n)
    throw validation_error("star_mul: ambient sizes differ");
  GradedElement c;
  c.n = a.n;
  c.degree = a.degree + b.degree;
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms) {
      Perm p = perm_compose(pa, pb);
      if (perm_degree(p) == c.degree) c.add(p, ca * cb);
    }
  return c;
}

inline GradedElement star_power(const GradedElement& a, int k) {
  GradedElement acc = graded_unit(a.n);
  for (int i = 0; i < k; ++i) acc = star_mul(acc, a);
  return acc;
}

/// (-Xi)^{*k}(n) = sum_j (-1)^k xi_j * ... * xi_j (k star factors).
inline GradedElement neg_xi_star_power(int k, int n) {
  if (k < 1 || n < 1) throw validation_error("neg_xi_star_power: k, n >= 1 required");
  GradedElement acc;
  acc.n = n;
  acc.degree = k;
  long long sign = k % 2 ? -1 : 1;
  for (int j = 2; j <= n; ++j) {
    GradedElement p = star_power(jm_element(j, n), k);
    for (const auto& [perm, c] : p.terms) acc.add(perm, sign * c);
  }
  return acc;
}

namespace detail {

/// e_k evaluated on {s*xi_1, ..., s*xi_n} with the star product
/// (s = -1 when negate). Sum of star products over k-subsets.
inline GradedElement e_star(int k, int n, bool negate) {
  if (k < 0) {
    GradedElement z;
    z.n = n;
    z.degree = 0;
    return z;
  }
  if (k == 0) return graded_unit(n);
  GradedElement acc;
  acc.n = n;
  acc.degree = k;
  long long sign = (negate && k % 2) ? -1 : 1;
  std::vector<int> subset;
  // xi_1 = 0, so subsets start at j = 2.
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == k) {
      GradedElement prod = graded_unit(n);
      for (int j : subset) prod = star_mul(prod, jm_element(j, n));
      for (const auto& [p, c] : prod.terms) acc.add(p, sign * c);
      return;
    }
    for (int j = from; j <= n; ++j) {
      subset.push_back(j);
      self(self, j + 1);
      subset.pop_back();
    }
  };
  rec(rec, 2);
  return acc;
}

/// det of a matrix of pairwise star-commuting graded elements, row-major
/// permutation expansion.
inline GradedElement star_det(const std::vector<std::vector<GradedElement>>& M, int n) {
  int m = static_cast<int>(M.size());
  GradedElement acc;
  acc.n = n;
  acc.degree = -1;  // fixed on first term
  Perm pi = perm_identity(m);
  bool first = true;
  do {
    int sgn = perm_degree(pi) % 2 ? -1 : 1;
    GradedElement prod = graded_unit(n);
    for (int i = 0; i < m; ++i) prod = star_mul(prod, M[i][pi[i]]);
    if (prod.zero()) continue;
    if (first) {
      acc.degree = prod.degree;
      first = false;
    } else if (prod.degree != acc.degree) {
      throw math_error("star_det: non-homogeneous determinant");
    }
    for (const auto& [p, c] : prod.terms) acc.add(p, sgn * c);
  } while (std::next_permutation(pi.begin(), pi.end()));
  if (first) acc.degree = 0;
  return acc;
}

}  // namespace detail

enum class SymKind { e, h, s };

/// The named symmetric polynomial evaluated on {+-xi_1, ..., +-xi_n} with
/// every multiplication the star product. e by subset sums, h and s by
/// Jacobi-Trudi determinants in the e's (legal because the star images of
/// the xi's commute; that invariant is verified in the test suite).
inline GradedElement sym_star(SymKind kind, const Partition& lambda, int n,
                              bool negate) {
  switch (kind) {
    case SymKind::e: {
      if (lambda.length() != 1)
        throw validation_error("sym_star e expects a single index");
      return detail::e_star(lambda.parts()[0], n, negate);
    }
    case SymKind::h: {
      if (lambda.length() != 1)
        throw validation_error("sym_star h expects a single index");
      int k = lambda.parts()[0];
      // h_k = s_(k): dual Jacobi-Trudi, k x k matrix of e_{1-i+j}.
      std::vector<std::vector<GradedElement>> M(k, std::vector<GradedElement>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M[i][j] = detail::e_star(1 - i + j, n, negate);
      return detail::star_det(M, n);
    }
    case SymKind::s: {
      Partition conj = lambda.conjugate();
      int m = conj.length();
      if (m == 0) return graded_unit(n);
      std::vector<std::vector<GradedElement>> M(m, std::vector<GradedElement>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          M[i][j] = detail::e_star(conj.parts()[i] - i + j, n, negate);
      return detail::star_det(M, n);
    }
  }
  throw validation_error("unknown sym_star kind");
}

inline GradedElement sym_star(SymKind kind, int k, int n, bool negate) {
  return sym_star(kind, Partition({k}), n, negate);
}

/// e_k of the JM elements under the ORDINARY group-algebra product.
inline PermAlg elementary_ordinary(int k, int n) {
  if (k < 0 || k > n - 1)
    throw validation_error("elementary_ordinary: 0 <= k <= n-1 required");
  PermAlg acc;
  if (k == 0) {
    acc.emplace(perm_identity(n), 1);
    return acc;
  }
  std::vector<int> subset;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == k) {
      PermAlg prod{{perm_identity(n), 1}};
      for (int j : subset) {
        GradedElement xi = jm_element(j, n);
        PermAlg next;
        for (const auto& [pa, ca] : prod)
          for (const auto& [pb, cb] : xi.terms) next[perm_compose(pa, pb)] += ca * cb;
        prod = std::move(next);
      }
      for (const auto& [p, c] : prod) {
        if ((acc[p] += c) == 0) acc.erase(p);
      }
      return;
    }
    for (int j = from; j <= n; ++j) {
      subset.push_back(j);
      self(self, j + 1);
      subset.pop_back();
    }
  };
  rec(rec, 2);
  return acc;
}

inline long long z_factor(const Partition& rho) {
  long long z = 1;
  int prev = -1, run = 0;
  for (int p : rho.parts()) {
    if (p == prev) {
      ++run;
    } else {
      prev = p;
      run = 1;
    }
    z *= p * run;
  }
  return z;
}

inline long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long symmetric_class_size(const Partition& cycle_type) {
  return factorial_ll(cycle_type.weight()) / z_factor(cycle_type);
}

/// Expansion of a conjugation-invariant element of Z[S_n] in the K_mu(n)
/// basis (Gamma trivial: keys are modified types at label 0). Throws if the
/// element is not central.
inline ClassVector perm_alg_to_classes(const PermAlg& terms, int n) {
  ClassVector out;
  out.n = n;
  std::map<Partition, std::pair<long long, long long>> by_type;  // coeff, count
  for (const auto& [p, c] : terms) {
    Partition t = perm_cycle_type(p);
    auto it = by_type.find(t);
    if (it == by_type.end()) {
      by_type.emplace(t, std::make_pair(c, 1LL));
    } else {
      if (it->second.first != c)
        throw math_error("to_class_vector: coefficients differ within the class of "
                         "cycle type " + format_partition(t));
      ++it->second.second;
    }
  }
  for (const auto& [t, cc] : by_type) {
    if (cc.second != symmetric_class_size(t))
      throw math_error("to_class_vector: class of cycle type " + format_partition(t) +
                       " only partially covered (not central)");
    std::vector<int> mod;
    for (int p : t.parts())
      if (p > 1) mod.push_back(p - 1);
    out.add(PartitionFunction(std::vector<Partition>{Partition(std::move(mod))}),
            cc.first);
  }
  return out;
}

inline ClassVector to_class_vector(const GradedElement& a) {
  return perm_alg_to_classes(a.terms, a.n);
}

/// Lift a degree-w star element into the FH-ring: evaluate at n = 2w and
/// 2w + 1, expand both in the K basis, and require identical coefficients.
struct StableLift {
  FHElement element;
  int witness_lo = 0;
  int witness_hi = 0;
};

template <typename BuildAtN>
StableLift stable_fh(BuildAtN&& build, int weight) {
  int n_lo = std::max(2 * weight, 1);
  StableLift out;
  out.witness_lo = n_lo;
  out.witness_hi = n_lo + 1;
  FHElement fh[2];
  for (int w = 0; w < 2; ++w) {
    GradedElement el = build(n_lo + w);
    ClassVector cv = to_class_vector(el);
    for (const auto& [mu, c] : cv.terms) fh[w].add(mu, c);
  }
  if (!(fh[0] == fh[1]))
    throw math_error("stable_fh: K-coefficients differ between n=" +
                     std::to_string(n_lo) + " and n=" + std::to_string(n_lo + 1));
  out.element = fh[0];
  return out;
}

}  // namespace stablering

#endif
