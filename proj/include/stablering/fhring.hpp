#ifndef STABLERING_FHRING_HPP
#define STABLERING_FHRING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stablering/errors.hpp"
#include "stablering/group.hpp"
#include "stablering/partition.hpp"
#include "stablering/wreath.hpp"

namespace stablering {

using boost::multiprecision::cpp_int;

/// Element of the FH-ring G_Gamma: integer combination of the stable basis
/// symbols K_lambda, keyed by modified type.
struct FHElement {
  std::map<PartitionFunction, long long> coeffs;

  void add(const PartitionFunction& mu, long long c) {
    if (c == 0) return;
    auto it = coeffs.find(mu);
    if (it == coeffs.end()) {
      coeffs.emplace(mu, c);
    } else if ((it->second += c) == 0) {
      coeffs.erase(it);
    }
  }

  bool operator==(const FHElement& o) const { return coeffs == o.coeffs; }
};

/// Binomial C(n, k), exact, valid for negative n as well.
inline cpp_int binomial(const cpp_int& n, int k) {
  if (k < 0) return 0;
  cpp_int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// Polynomial in the binomial basis: p(n) = sum_k c_k C(n, k), c_k integers.
/// Integer-valued at every integer without having integer monomial
/// coefficients.
class IntegerValuedPolynomial {
public:
  IntegerValuedPolynomial() = default;
  explicit IntegerValuedPolynomial(std::vector<cpp_int> binom_coeffs)
      : c_(std::move(binom_coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const std::vector<cpp_int>& binomial_coeffs() const { return c_; }
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }

  cpp_int eval(long long n) const {
    cpp_int v = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
      v += c_[k] * binomial(cpp_int(n), static_cast<int>(k));
    return v;
  }

private:
  std::vector<cpp_int> c_;
};

struct FHProductResult {
  FHElement element;
  int witness_lo = 0;  // graded_product evaluated here ...
  int witness_hi = 0;  // ... and here, with identical coefficients
};

/// Stable product K_lambda K_mu in G_Gamma. Computed at two consecutive n
/// large enough that every candidate class is nonempty; a disagreement
/// between the two witnesses is an error, never a silent answer.
inline FHProductResult fh_product(const FiniteGroup& G, const PartitionFunction& lambda,
                                  const PartitionFunction& mu,
                                  const Caps& caps = default_caps()) {
  int top = lambda.weight() + mu.weight();
  int pad = 2;
  IndexSet S = G.class_index_set();
  for (const auto& nu : enumerate_pvf(top, S, caps))
    pad = std::max(pad, nu.at(0).length());
  int n_lo = top + pad;
  ClassVector a = graded_product(G, n_lo, lambda, mu, caps);
  ClassVector b = graded_product(G, n_lo + 1, lambda, mu, caps);
  if (a.terms != b.terms)
    throw math_error("fh_product: stability violation between n=" +
                     std::to_string(n_lo) + " and n=" + std::to_string(n_lo + 1) +
                     " for lambda=" + format_pvf(lambda) + ", mu=" + format_pvf(mu));
  FHProductResult res;
  res.witness_lo = n_lo;
  res.witness_hi = n_lo + 1;
  for (const auto& [nu, c] : a.terms) res.element.add(nu, c);
  return res;
}

struct PolyfitResult {
  PartitionFunction lambda, mu, nu;
  std::vector<std::pair<int, long long>> samples;  // (n, D(n)) including holdout
  IntegerValuedPolynomial poly;
  int holdout_n = 0;
  bool holdout_ok = false;
};

/// Single structure constant D_{lambda mu}^nu(n); all three classes must be
/// nonempty in Gamma_n.
inline long long structure_constant(const FiniteGroup& G, int n,
                                    const PartitionFunction& lambda,
                                    const PartitionFunction& mu,
                                    const PartitionFunction& nu,
                                    const Caps& caps = default_caps()) {
  if (n < min_ambient_n(nu))
    throw class_empty_error("K_" + format_pvf(nu) + "(" + std::to_string(n) + ") = 0");
  std::vector<WreathElement> class_lambda = enumerate_class(G, n, lambda, caps);
  if (class_lambda.empty())
    throw class_empty_error("K_" + format_pvf(lambda) + "(" + std::to_string(n) +
                            ") = 0");
  if (n < min_ambient_n(mu))
    throw class_empty_error("K_" + format_pvf(mu) + "(" + std::to_string(n) + ") = 0");
  WreathElement x = class_representative(G, n, nu);
  long long count = 0;
  for (const auto& a : class_lambda)
    if (modify_type(type_of(G, wreath_mul(G, wreath_inv(G, a), x))) == mu) ++count;
  return count;
}

/// Fit the unique minimal-degree integer-valued polynomial through
/// D_{lambda mu}^nu(n) on n_lo..n_hi-1 and require it to predict the
/// held-out sample at n_hi exactly.
inline PolyfitResult polyfit_structure(const FiniteGroup& G,
                                       const PartitionFunction& lambda,
                                       const PartitionFunction& mu,
                                       const PartitionFunction& nu, int n_lo, int n_hi,
                                       const Caps& caps = default_caps()) {
  if (n_hi - n_lo + 1 < 2)
    throw validation_error("polyfit needs at least two samples (one held out)");
  PolyfitResult res;
  res.lambda = lambda;
  res.mu = mu;
  res.nu = nu;
  res.holdout_n = n_hi;
  for (int n = n_lo; n <= n_hi; ++n)
    res.samples.emplace_back(n, structure_constant(G, n, lambda, mu, nu, caps));

  // Newton forward differences on the consecutive fit samples.
  std::vector<cpp_int> diff;
  for (int i = 0; i + 1 < static_cast<int>(res.samples.size()); ++i)
    diff.emplace_back(res.samples[i].second);
  std::vector<cpp_int> newton;
  for (std::size_t level = 0; level < diff.size(); ++level) {
    newton.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size() - level; ++i)
      diff[i] = diff[i + 1] - diff[i];
  }
  while (!newton.empty() && newton.back() == 0) newton.pop_back();

  int bound = lambda.weight() + mu.weight();
  if (static_cast<int>(newton.size()) > bound + 1) {
    std::ostringstream os;
    os << "polyfit: degree " << newton.size() - 1 << " exceeds bound " << bound
       << " — range too short or not polynomial; samples:";
    for (auto& [n, d] : res.samples) os << " D(" << n << ")=" << d;
    throw math_error(os.str());
  }

  // Held-out check in Newton form: p(n) = sum_k d_k C(n - n_lo, k).
  cpp_int predicted = 0;
  for (std::size_t k = 0; k < newton.size(); ++k)
    predicted += newton[k] * binomial(cpp_int(n_hi - n_lo), static_cast<int>(k));
  if (predicted != res.samples.back().second) {
    std::ostringstream os;
    os << "polyfit: held-out n=" << n_hi << " predicted " << predicted << " but D="
       << res.samples.back().second << "; samples:";
    for (auto& [n, d] : res.samples) os << " D(" << n << ")=" << d;
    throw math_error(os.str());
  }
  res.holdout_ok = true;

  // Re-express in the C(n, k) basis via C(n - a, k) = sum_j C(-a, k-j) C(n, j).
  std::vector<cpp_int> c(newton.size(), 0);
  for (std::size_t k = 0; k < newton.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j)
      c[j] += newton[k] * binomial(cpp_int(-n_lo), static_cast<int>(k - j));
  res.poly = IntegerValuedPolynomial(std::move(c));
  return res;
}

struct RestrictionCheck {
  PartitionFunction lambda, mu;
  ClassVector at_n, at_n_minus_1;
  bool pass = false;
};

struct RestrictionReport {
  int n = 0;
  std::vector<RestrictionCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// res_n sends K_lambda(n) to K_lambda(n-1): the graded product at n,
/// with classes empty at n-1 dropped, must match the graded product at n-1.
inline RestrictionReport restriction_check(
    const FiniteGroup& G, int n,
    const std::vector<std::pair<PartitionFunction, PartitionFunction>>& sample_pairs,
    const Caps& caps = default_caps()) {
  if (n < 2) throw validation_error("restriction_check needs n >= 2");
  RestrictionReport rep;
  rep.n = n;
  for (const auto& [lambda, mu] : sample_pairs) {
    RestrictionCheck chk;
    chk.lambda = lambda;
    chk.mu = mu;
    chk.at_n = graded_product(G, n, lambda, mu, caps);
    chk.at_n_minus_1 = graded_product(G, n - 1, lambda, mu, caps);
    ClassVector restricted;
    restricted.n = n - 1;
    for (const auto& [nu, c] : chk.at_n.terms)
      if (n - 1 >= min_ambient_n(nu)) restricted.add(nu, c);
    chk.pass = restricted.terms == chk.at_n_minus_1.terms;
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace stablering

#endif
