#ifndef STABLERING_WREATH_HPP
#define STABLERING_WREATH_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stablering/errors.hpp"
#include "stablering/group.hpp"
#include "stablering/partition.hpp"

namespace stablering {

/// Element (g, sigma) of the wreath product Gamma_n = Gamma^n x| S_n.
/// sigma is stored as a 0-based image array: sigma[i] = image of i.
struct WreathElement {
  int n = 0;
  std::vector<int> g;      // length n, Gamma element ids
  std::vector<int> sigma;  // length n, a bijection on 0..n-1

  bool operator==(const WreathElement& o) const {
    return n == o.n && g == o.g && sigma == o.sigma;
  }
  bool operator<(const WreathElement& o) const {
    if (n != o.n) return n < o.n;
    if (sigma != o.sigma) return sigma < o.sigma;
    return g < o.g;
  }
};

inline WreathElement wreath_identity(int n) {
  WreathElement e;
  e.n = n;
  e.g.assign(n, 0);
  e.sigma.resize(n);
  std::iota(e.sigma.begin(), e.sigma.end(), 0);
  return e;
}

/// (g, sigma)(h, tau) = (g * sigma(h), sigma tau), with
/// sigma(h)_i = h_{sigma^-1(i)} and (sigma tau)(i) = sigma(tau(i)).
inline WreathElement wreath_mul(const FiniteGroup& G, const WreathElement& x,
                                const WreathElement& y) {
  if (x.n != y.n)
    throw validation_error("wreath_mul: ambient sizes differ (" +
                           std::to_string(x.n) + " vs " + std::to_string(y.n) + ")");
  WreathElement z;
  z.n = x.n;
  z.g.resize(x.n);
  z.sigma.resize(x.n);
  std::vector<int> sigma_inv(x.n);
  for (int i = 0; i < x.n; ++i) sigma_inv[x.sigma[i]] = i;
  for (int i = 0; i < x.n; ++i) {
    z.g[i] = G.mul(x.g[i], y.g[sigma_inv[i]]);
    z.sigma[i] = x.sigma[y.sigma[i]];
  }
  return z;
}

/// (g, sigma)^-1 = (sigma^-1(g^-1), sigma^-1).
inline WreathElement wreath_inv(const FiniteGroup& G, const WreathElement& x) {
  WreathElement z;
  z.n = x.n;
  z.g.resize(x.n);
  z.sigma.resize(x.n);
  for (int i = 0; i < x.n; ++i) z.sigma[x.sigma[i]] = i;
  for (int i = 0; i < x.n; ++i) z.g[i] = G.inv(x.g[x.sigma[i]]);
  return z;
}

/// Type of x: one part |y| at the class of the cycle-product
/// p_y = g_{i_k} ... g_{i_1}, for every cycle y of sigma.
inline PartitionFunction type_of(const FiniteGroup& G, const WreathElement& x) {
  std::vector<std::vector<int>> parts(G.class_count());
  std::vector<bool> seen(x.n, false);
  for (int i = 0; i < x.n; ++i) {
    if (seen[i]) continue;
    int len = 0, prod = 0, j = i;
    do {
      seen[j] = true;
      prod = G.mul(x.g[j], prod);
      j = x.sigma[j];
      ++len;
    } while (j != i);
    parts[G.class_of(prod)].push_back(len);
  }
  std::vector<Partition> a;
  a.reserve(parts.size());
  for (auto& v : parts) a.push_back(Partition::from_unsorted(std::move(v)));
  return PartitionFunction(std::move(a));
}

inline std::pair<PartitionFunction, int> modified_type_and_degree(
    const FiniteGroup& G, const WreathElement& x) {
  PartitionFunction mu = modify_type(type_of(G, x));
  return {mu, mu.weight()};
}

inline int wreath_degree(const FiniteGroup& G, const WreathElement& x) {
  return modified_type_and_degree(G, x).second;
}

/// Canonical representative of the class of modified type mu in Gamma_n.
/// Cycles occupy consecutive index blocks; the class representative of the
/// cycle-product class sits at the last index of its cycle.
inline WreathElement class_representative(const FiniteGroup& G, int n,
                                          const PartitionFunction& mu) {
  PartitionFunction rho = unmodify_type(mu, n);  // throws class_empty_error
  WreathElement x = wreath_identity(n);
  int pos = 0;
  for (int c = 0; c < std::max(rho.label_count(), G.class_count()); ++c) {
    for (int len : rho.at(c).parts()) {
      for (int k = 0; k < len; ++k)
        x.sigma[pos + k] = pos + (k + 1) % len;
      x.g[pos + len - 1] = G.class_rep(c);
      pos += len;
    }
  }
  return x;
}

inline long long wreath_order_bound(const FiniteGroup& G, int n) {
  long long total = 1;
  const long long lim = 4'000'000'000'000'000'000LL;
  for (int i = 1; i <= n; ++i) {
    if (total > lim / i) return lim;
    total *= i;
    if (total > lim / G.order()) return lim;
    total *= G.order();
  }
  return total;
}

inline void check_wreath_cap(const FiniteGroup& G, int n, const Caps& caps) {
  long long sz = wreath_order_bound(G, n);
  if (sz > caps.group_enum)
    throw size_limit_error("|Gamma_n| = " + std::to_string(sz) + " exceeds cap " +
                           std::to_string(caps.group_enum) +
                           " (raise with --cap or STABLERING_CAP)");
}

/// Visit every element of Gamma_n (cap-checked).
template <typename F>
void for_each_wreath_element(const FiniteGroup& G, int n, F&& visit,
                             const Caps& caps = default_caps()) {
  check_wreath_cap(G, n, caps);
  WreathElement x = wreath_identity(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    x.sigma = perm;
    std::fill(x.g.begin(), x.g.end(), 0);
    for (;;) {
      visit(static_cast<const WreathElement&>(x));
      int i = 0;
      while (i < n && x.g[i] == G.order() - 1) x.g[i++] = 0;
      if (i == n) break;
      ++x.g[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// All elements of Gamma_n with modified type mu, as the conjugation orbit
/// of the canonical representative. Empty iff n < ||mu|| + l(mu(c0)).
inline std::vector<WreathElement> enumerate_class(const FiniteGroup& G, int n,
                                                  const PartitionFunction& mu,
                                                  const Caps& caps = default_caps()) {
  if (n < min_ambient_n(mu)) return {};
  check_wreath_cap(G, n, caps);

  // Conjugating generators: adjacent transpositions and Gamma at slot 0.
  std::vector<WreathElement> gens;
  for (int i = 0; i + 1 < n; ++i) {
    WreathElement t = wreath_identity(n);
    std::swap(t.sigma[i], t.sigma[i + 1]);
    gens.push_back(t);
  }
  for (int a = 1; a < G.order(); ++a) {
    WreathElement h = wreath_identity(n);
    h.g[0] = a;
    gens.push_back(h);
  }

  WreathElement rep = class_representative(G, n, mu);
  std::set<WreathElement> seen{rep};
  std::vector<WreathElement> queue{rep};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    WreathElement x = queue[head];
    for (const auto& y : gens) {
      WreathElement z = wreath_mul(G, wreath_mul(G, y, x), wreath_inv(G, y));
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return queue;
}

/// Integer combination of class sums K_mu(n) in R_Z(Gamma_n).
struct ClassVector {
  int n = 0;
  std::map<PartitionFunction, long long> terms;

  void add(const PartitionFunction& mu, long long c) {
    if (c == 0) return;
    auto it = terms.find(mu);
    if (it == terms.end()) {
      terms.emplace(mu, c);
    } else if ((it->second += c) == 0) {
      terms.erase(it);
    }
  }

  bool operator==(const ClassVector& o) const { return n == o.n && terms == o.terms; }
};

/// Candidate modified types nu with ||nu|| <= max_weight and nonempty class
/// in Gamma_n, in canonical order.
inline std::vector<PartitionFunction> candidate_types(const FiniteGroup& G, int n,
                                                      int max_weight,
                                                      const Caps& caps = default_caps()) {
  std::vector<PartitionFunction> out;
  IndexSet S = G.class_index_set();
  for (int w = 0; w <= max_weight; ++w)
    for (auto& nu : enumerate_pvf(w, S, caps))
      if (n >= min_ambient_n(nu)) out.push_back(std::move(nu));
  return out;
}

/// K_lambda(n) K_mu(n) = sum_nu D_{lambda mu}^nu(n) K_nu(n).
/// D is computed as #{a in C_lambda : a^-1 x_nu in C_mu} for a fixed
/// representative x_nu of each candidate class.
inline ClassVector convolve(const FiniteGroup& G, int n, const PartitionFunction& lambda,
                            const PartitionFunction& mu,
                            const Caps& caps = default_caps()) {
  if (n < min_ambient_n(lambda))
    throw class_empty_error("K_" + format_pvf(lambda) + "(" + std::to_string(n) +
                            ") = 0");
  if (n < min_ambient_n(mu))
    throw class_empty_error("K_" + format_pvf(mu) + "(" + std::to_string(n) + ") = 0");
  std::vector<WreathElement> class_lambda = enumerate_class(G, n, lambda, caps);
  std::vector<WreathElement> inv_lambda;
  inv_lambda.reserve(class_lambda.size());
  for (const auto& a : class_lambda) inv_lambda.push_back(wreath_inv(G, a));

  ClassVector out;
  out.n = n;
  for (const auto& nu : candidate_types(G, n, lambda.weight() + mu.weight(), caps)) {
    WreathElement x = class_representative(G, n, nu);
    long long count = 0;
    for (const auto& ai : inv_lambda)
      if (modify_type(type_of(G, wreath_mul(G, ai, x))) == mu) ++count;
    out.add(nu, count);
  }
  return out;
}

/// The product in the associated graded ring: convolve restricted to
/// ||nu|| = ||lambda|| + ||mu||.
inline ClassVector graded_product(const FiniteGroup& G, int n,
                                  const PartitionFunction& lambda,
                                  const PartitionFunction& mu,
                                  const Caps& caps = default_caps()) {
  if (n < min_ambient_n(lambda))
    throw class_empty_error("K_" + format_pvf(lambda) + "(" + std::to_string(n) +
                            ") = 0");
  if (n < min_ambient_n(mu))
    throw class_empty_error("K_" + format_pvf(mu) + "(" + std::to_string(n) + ") = 0");
  std::vector<WreathElement> class_lambda = enumerate_class(G, n, lambda, caps);
  std::vector<WreathElement> inv_lambda;
  inv_lambda.reserve(class_lambda.size());
  for (const auto& a : class_lambda) inv_lambda.push_back(wreath_inv(G, a));

  int top = lambda.weight() + mu.weight();
  ClassVector out;
  out.n = n;
  IndexSet S = G.class_index_set();
  for (auto& nu : enumerate_pvf(top, S, caps)) {
    if (n < min_ambient_n(nu)) continue;
    WreathElement x = class_representative(G, n, nu);
    long long count = 0;
    for (const auto& ai : inv_lambda)
      if (modify_type(type_of(G, wreath_mul(G, ai, x))) == mu) ++count;
    out.add(nu, count);
  }
  return out;
}

/// A reduced expression for x: ||x|| factors, each either a twisted
/// transposition (i ->g j) or a one-slot insertion h^(i), multiplying
/// left-to-right back to x. Built greedily: each transposition factor is
/// chosen to lower the filtration degree by exactly one.
inline std::vector<WreathElement> reduced_expression(const FiniteGroup& G,
                                                     const WreathElement& x) {
  std::vector<WreathElement> factors;
  WreathElement rest = x;  // invariant: x = factors product * rest
  int deg = wreath_degree(G, rest);
  auto is_id_perm = [](const WreathElement& e) {
    for (int i = 0; i < e.n; ++i)
      if (e.sigma[i] != i) return false;
    return true;
  };
  while (!is_id_perm(rest)) {
    bool progressed = false;
    for (int i = 0; i < rest.n && !progressed; ++i) {
      int j = rest.sigma[i];
      if (j == i) continue;
      for (int a = 0; a < G.order() && !progressed; ++a) {
        WreathElement t = wreath_identity(rest.n);
        std::swap(t.sigma[i], t.sigma[j]);
        t.g[j] = a;
        t.g[i] = G.inv(a);
        WreathElement next = wreath_mul(G, t, rest);  // t * next' ; t^2 = id
        if (wreath_degree(G, next) == deg - 1) {
          factors.push_back(t);
          rest = next;
          --deg;
          progressed = true;
        }
      }
    }
    if (!progressed)
      throw math_error("reduced_expression: no degree-lowering transposition found");
  }
  // rest is now diagonal; each non-identity slot is one insertion factor.
  for (int i = 0; i < rest.n; ++i) {
    if (rest.g[i] == 0) continue;
    WreathElement h = wreath_identity(rest.n);
    h.g[i] = rest.g[i];
    factors.push_back(h);
  }
  return factors;
}

}  // namespace stablering

#endif
