#ifndef STABLERING_SYMFUN_HPP
#define STABLERING_SYMFUN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stablering/errors.hpp"
#include "stablering/fhring.hpp"
#include "stablering/partition.hpp"

namespace stablering {

using Rational = boost::multiprecision::cpp_rational;

enum class Basis { m, e, h, p, s, g, hstar };

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::g: return "g";
    case Basis::hstar: return "hstar";
  }
  return "?";
}

inline Basis parse_basis(const std::string& s) {
  if (s == "m") return Basis::m;
  if (s == "e") return Basis::e;
  if (s == "h") return Basis::h;
  if (s == "p") return Basis::p;
  if (s == "s") return Basis::s;
  if (s == "g") return Basis::g;
  if (s == "hstar") return Basis::hstar;
  throw validation_error("unknown basis '" + s + "'");
}

/// Degree-truncated element of Lambda, tagged with its expansion basis.
struct SymFunc {
  Basis basis = Basis::m;
  int N = 0;
  std::map<Partition, Rational> terms;

  void add(const Partition& p, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms.emplace(p, c);
    } else if ((it->second += c) == 0) {
      terms.erase(it);
    }
  }

  bool operator==(const SymFunc& o) const {
    return basis == o.basis && terms == o.terms;
  }
};

/// The ring Lambda over Z, truncated at degree N. Holds exact transition
/// caches; all arithmetic is rational, no floating point anywhere.
class SymRing {
public:
  explicit SymRing(int truncation_degree = 8) : N_(truncation_degree) {
    if (N_ < 1) throw validation_error("truncation degree must be >= 1");
  }

  int truncation() const { return N_; }

  SymFunc zero(Basis b = Basis::m) const { return SymFunc{b, N_, {}}; }

  SymFunc term(Basis b, const Partition& p, const Rational& c = 1) const {
    check_degree(p.weight());
    SymFunc f = zero(b);
    f.add(p, c);
    return f;
  }

  static SymFunc sum(const SymFunc& f, const SymFunc& g) {
    if (f.basis != g.basis)
      throw validation_error("sum of symfuncs in different bases");
    SymFunc out = f;
    for (const auto& [p, c] : g.terms) out.add(p, c);
    return out;
  }

  static SymFunc scale(const SymFunc& f, const Rational& c) {
    SymFunc out{f.basis, f.N, {}};
    for (const auto& [p, v] : f.terms) out.add(p, v * c);
    return out;
  }

  /// Expand into the monomial basis.
  SymFunc to_m(const SymFunc& f) {
    SymFunc out = zero(Basis::m);
    for (const auto& [lam, c] : f.terms) {
      check_degree(lam.weight());
      for (const auto& [nu, a] : basis_in_m(f.basis, lam)) out.add(nu, c * a);
    }
    return out;
  }

  SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis == target) return f;
    SymFunc fm = to_m(f);
    if (target == Basis::m) return fm;
    SymFunc out = zero(target);
    // Degree by degree: solve M^T x = v where row lam of M is B_lam in m.
    std::map<int, std::map<Partition, Rational>> by_degree;
    for (const auto& [p, c] : fm.terms) by_degree[p.weight()][p] = c;
    for (const auto& [d, comp] : by_degree) {
      auto parts = enumerate_partitions(d);
      std::vector<Rational> v(parts.size(), 0);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto it = comp.find(parts[i]);
        if (it != comp.end()) v[i] = it->second;
      }
      std::vector<Rational> x = solve_transposed(target, d, v);
      for (std::size_t i = 0; i < parts.size(); ++i) out.add(parts[i], x[i]);
    }
    return out;
  }

  /// Product, returned in the monomial basis.
  SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fm = to_m(f), gm = to_m(g);
    SymFunc out = zero(Basis::m);
    for (const auto& [a, ca] : fm.terms)
      for (const auto& [b, cb] : gm.terms) {
        check_degree(a.weight() + b.weight());
        for (const auto& [nu, k] : mult_mm(a, b)) out.add(nu, ca * cb * k);
      }
    return out;
  }

  /// Hall inner product: <h_lambda, m_mu> = delta.
  Rational hall_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc fh = convert(f, Basis::h);
    SymFunc gm = to_m(g);
    Rational v = 0;
    for (const auto& [p, c] : fh.terms) {
      auto it = gm.terms.find(p);
      if (it != gm.terms.end()) v += c * it->second;
    }
    return v;
  }

  /// The involution omega: multiplies p_lambda by prod_i (-1)^(lambda_i - 1).
  SymFunc omega(const SymFunc& f) {
    SymFunc fp = convert(f, Basis::p);
    SymFunc out = zero(Basis::p);
    for (const auto& [lam, c] : fp.terms) {
      int sign = (lam.weight() - lam.length()) % 2 ? -1 : 1;
      out.add(lam, c * sign);
    }
    return convert(out, f.basis);
  }

  /// h_k^*: degree-k coefficient of the compositional inverse of
  /// u = t + h_1 t^2 + h_2 t^3 + ..., expressed in the h basis.
  SymFunc hstar(int k) {
    check_degree(k);
    if (k == 0) return term(Basis::h, Partition());
    SymFunc f = zero(Basis::m);
    for (const auto& [p, c] : hstar_m(k)) f.add(p, c);
    return convert(f, Basis::h);
  }

  /// The involution psi: ring endomorphism sending h_k to h_k^*.
  SymFunc psi(const SymFunc& f) {
    SymFunc fh = convert(f, Basis::h);
    SymFunc out = zero(Basis::m);
    for (const auto& [lam, c] : fh.terms)
      for (const auto& [nu, a] : basis_in_m(Basis::hstar, lam)) out.add(nu, c * a);
    return out;
  }

  /// g_lambda: the basis dual to (h_mu^*) under the Hall pairing, in m.
  SymFunc dual_g(const Partition& lam) {
    check_degree(lam.weight());
    SymFunc out = zero(Basis::m);
    for (const auto& [nu, c] : basis_in_m(Basis::g, lam)) out.add(nu, c);
    return out;
  }

  /// Macdonald's map: expand in the g basis and relabel g_lambda -> K_lambda
  /// (Gamma trivial: modified types live on the single label 0).
  FHElement macdonald_varphi(const SymFunc& f) {
    SymFunc fg = convert(f, Basis::g);
    FHElement out;
    for (const auto& [lam, c] : fg.terms) {
      if (denominator(c) != 1)
        throw math_error("varphi: non-integral g-expansion coefficient");
      long long cc = numerator(c).convert_to<long long>();
      out.add(PartitionFunction(std::vector<Partition>{lam}), cc);
    }
    return out;
  }

  /// Inverse map: K_lambda -> g_lambda. Rejects non-trivial Gamma.
  SymFunc macdonald_phi(const FHElement& e) {
    SymFunc out = zero(Basis::m);
    for (const auto& [mu, c] : e.coeffs) {
      for (int lbl = 1; lbl < mu.label_count(); ++lbl)
        if (!mu.at(lbl).empty())
          throw validation_error(
              "macdonald_phi supports only the symmetric group case "
              "(all classes at label 0)");
      out = sum(out, scale(dual_g(mu.at(0)), c));
    }
    return out;
  }

  /// Kostka number: semistandard tableaux of shape lambda and content mu.
  long long kostka(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) return 0;
    auto key = std::make_pair(lam, mu);
    auto it = kostka_cache_.find(key);
    if (it != kostka_cache_.end()) return it->second;
    long long v;
    if (mu.empty()) {
      v = lam.empty() ? 1 : 0;
    } else {
      // Place the largest letter as a horizontal strip of size mu_last.
      int strip = mu.parts().back();
      Partition mu_rest(std::vector<int>(mu.parts().begin(), mu.parts().end() - 1));
      v = 0;
      std::vector<int> nu(lam.parts());
      auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == lam.length()) {
          if (remaining == 0)
            v += kostka(Partition::from_unsorted(nu), mu_rest);
          return;
        }
        int lo = row + 1 < lam.length() ? lam.parts()[row + 1] : 0;
        for (int take = 0; take <= lam.parts()[row] - lo && take <= remaining; ++take) {
          nu[row] = lam.parts()[row] - take;
          if (row > 0 && nu[row] > nu[row - 1]) continue;  // keep nu a partition
          self(self, row + 1, remaining - take);
        }
        nu[row] = lam.parts()[row];
      };
      rec(rec, 0, strip);
    }
    kostka_cache_.emplace(key, v);
    return v;
  }

  /// m_a * m_b expanded in the m basis (exact, via monomials in N variables).
  const std::map<Partition, Rational>& mult_mm(const Partition& a, const Partition& b) {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = mm_cache_.find(key);
    if (it != mm_cache_.end()) return it->second;
    auto ea = monomial_orbit(key.first);
    auto eb = monomial_orbit(key.second);
    std::map<std::vector<int>, long long> prod;
    for (const auto& va : ea)
      for (const auto& vb : eb) {
        std::vector<int> v(N_);
        for (int i = 0; i < N_; ++i) v[i] = va[i] + vb[i];
        ++prod[v];
      }
    std::map<Partition, Rational> out;
    for (const auto& [v, c] : prod) {
      if (!std::is_sorted(v.begin(), v.end(), std::greater<int>())) continue;
      out.emplace(Partition::from_unsorted(v), c);
    }
    it = mm_cache_.emplace(key, std::move(out)).first;
    return it->second;
  }

private:
  void check_degree(int d) const {
    if (d > N_)
      throw validation_error("degree " + std::to_string(d) +
                             " exceeds the truncation degree " + std::to_string(N_));
  }

  // All distinct exponent vectors in N_ variables with sorted form lam.
  std::vector<std::vector<int>> monomial_orbit(const Partition& lam) const {
    std::vector<int> v(N_, 0);
    for (int i = 0; i < lam.length(); ++i) v[i] = lam.parts()[i];
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
      out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  const std::map<Partition, Rational>& basis_in_m(Basis b, const Partition& lam) {
    if (b == Basis::m) {
      auto& cache = in_m_cache_[Basis::m];
      auto it = cache.find(lam);
      if (it == cache.end())
        it = cache.emplace(lam, std::map<Partition, Rational>{{lam, 1}}).first;
      return it->second;
    }
    auto& cache = in_m_cache_[b];
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;

    std::map<Partition, Rational> out;
    if (b == Basis::s) {
      for (const auto& mu : enumerate_partitions(lam.weight())) {
        long long k = kostka(lam, mu);
        if (k) out.emplace(mu, k);
      }
    } else if (b == Basis::g) {
      build_g_degree(lam.weight());
      return in_m_cache_[Basis::g].at(lam);
    } else {
      // Multiplicative bases: product of one-part expansions.
      out = {{Partition(), 1}};
      for (int part : lam.parts()) {
        std::map<Partition, Rational> one = one_part_in_m(b, part);
        std::map<Partition, Rational> next;
        for (const auto& [x, cx] : out)
          for (const auto& [y, cy] : one)
            for (const auto& [nu, k] : mult_mm(x, y)) {
              auto& slot = next[nu];
              slot += cx * cy * k;
            }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        out = std::move(next);
      }
    }
    return cache.emplace(lam, std::move(out)).first->second;
  }

  std::map<Partition, Rational> one_part_in_m(Basis b, int k) {
    std::map<Partition, Rational> out;
    switch (b) {
      case Basis::p:
        out.emplace(Partition({k}), 1);
        break;
      case Basis::e:
        out.emplace(Partition(std::vector<int>(k, 1)), 1);
        break;
      case Basis::h:
        for (const auto& mu : enumerate_partitions(k)) out.emplace(mu, 1);
        break;
      case Basis::hstar:
        out = hstar_m(k);
        break;
      default:
        throw validation_error("not a multiplicative basis");
    }
    return out;
  }

  // Series reversion: iterate t <- u - sum_k h_k t^(k+1) to order u^(N+1).
  // hstar_m(k) is the coefficient of u^(k+1).
  const std::map<Partition, Rational>& hstar_m(int k) {
    check_degree(k);
    if (hstar_m_.empty()) {
      using Series = std::vector<std::map<Partition, Rational>>;  // by power of u
      int order = N_ + 2;  // coefficients of u^0 .. u^(N+1)
      auto series_mul = [&](const Series& A, const Series& B) {
        Series C(order);
        for (int i = 0; i < order; ++i)
          for (int j = 0; i + j < order; ++j)
            for (const auto& [pa, ca] : A[i])
              for (const auto& [pb, cb] : B[j])
                for (const auto& [nu, m] : mult_mm(pa, pb)) {
                  auto& slot = C[i + j][nu];
                  slot += ca * cb * m;
                }
        return C;
      };
      Series t(order);
      t[1].emplace(Partition(), 1);
      for (int iter = 0; iter <= N_; ++iter) {
        Series next(order);
        next[1].emplace(Partition(), 1);
        Series power = series_mul(t, t);  // t^2
        for (int k2 = 1; k2 <= N_; ++k2) {
          const auto& hk = basis_in_m(Basis::h, Partition({k2}));
          for (int i = 0; i < order; ++i)
            for (const auto& [pp, cp] : power[i])
              for (const auto& [ph, ch] : hk)
                for (const auto& [nu, m] : mult_mm(pp, ph)) {
                  auto& slot = next[i][nu];
                  slot -= cp * ch * m;
                }
          power = series_mul(power, t);
        }
        for (auto& comp : next)
          std::erase_if(comp, [](const auto& kv) { return kv.second == 0; });
        t = std::move(next);
      }
      hstar_m_.resize(N_ + 1);
      for (int j = 1; j <= N_; ++j) hstar_m_[j] = t[j + 1];
    }
    return hstar_m_[k];
  }

  // g basis for one degree: with A the matrix h_mu^* = sum_kappa A[mu][kappa]
  // h_kappa, set g_lambda = sum_nu ((A^T)^-1)[lambda][nu] m_nu.
  void build_g_degree(int d) {
    auto& cache = in_m_cache_[Basis::g];
    auto parts = enumerate_partitions(d);
    if (cache.count(parts.front())) return;
    std::size_t p = parts.size();
    std::vector<std::vector<Rational>> A(p, std::vector<Rational>(p, 0));
    for (std::size_t r = 0; r < p; ++r) {
      SymFunc hs = zero(Basis::m);
      for (const auto& [nu, c] : basis_in_m(Basis::hstar, parts[r])) hs.add(nu, c);
      SymFunc in_h = convert(hs, Basis::h);
      for (std::size_t cidx = 0; cidx < p; ++cidx) {
        auto it = in_h.terms.find(parts[cidx]);
        if (it != in_h.terms.end()) A[r][cidx] = it->second;
      }
    }
    std::vector<std::vector<Rational>> inv = invert_transposed(A);
    for (std::size_t r = 0; r < p; ++r) {
      std::map<Partition, Rational> gl;
      for (std::size_t cidx = 0; cidx < p; ++cidx)
        if (inv[r][cidx] != 0) {
          if (denominator(inv[r][cidx]) != 1)
            throw math_error("dual_g: non-integral dual basis entry");
          gl.emplace(parts[cidx], inv[r][cidx]);
        }
      cache.emplace(parts[r], std::move(gl));
    }
  }

  // Solve B(target)^T x = v for the degree-d coordinate change from m.
  std::vector<Rational> solve_transposed(Basis target, int d,
                                         std::vector<Rational> v) {
    auto parts = enumerate_partitions(d);
    std::size_t p = parts.size();
    std::vector<std::vector<Rational>> M(p, std::vector<Rational>(p, 0));
    for (std::size_t r = 0; r < p; ++r) {
      const auto& row = basis_in_m(target, parts[r]);
      for (std::size_t c = 0; c < p; ++c) {
        auto it = row.find(parts[c]);
        if (it != row.end()) M[c][r] = it->second;  // transposed
      }
    }
    // Gaussian elimination, exact.
    for (std::size_t col = 0; col < p; ++col) {
      std::size_t piv = col;
      while (piv < p && M[piv][col] == 0) ++piv;
      if (piv == p) throw math_error("singular transition matrix");
      std::swap(M[piv], M[col]);
      std::swap(v[piv], v[col]);
      for (std::size_t r = 0; r < p; ++r) {
        if (r == col || M[r][col] == 0) continue;
        Rational f = M[r][col] / M[col][col];
        for (std::size_t c = col; c < p; ++c) M[r][c] -= f * M[col][c];
        v[r] -= f * v[col];
      }
    }
    std::vector<Rational> x(p);
    for (std::size_t i = 0; i < p; ++i) x[i] = v[i] / M[i][i];
    return x;
  }

  // Inverse of A^T by Gauss-Jordan; throws on singular input.
  static std::vector<std::vector<Rational>> invert_transposed(
      std::vector<std::vector<Rational>> A) {
    std::size_t p = A.size();
    std::vector<std::vector<Rational>> M(p, std::vector<Rational>(p, 0));
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c) M[r][c] = A[c][r];
    std::vector<std::vector<Rational>> I(p, std::vector<Rational>(p, 0));
    for (std::size_t i = 0; i < p; ++i) I[i][i] = 1;
    for (std::size_t col = 0; col < p; ++col) {
      std::size_t piv = col;
      while (piv < p && M[piv][col] == 0) ++piv;
      if (piv == p) throw math_error("dual basis matrix is singular");
      std::swap(M[piv], M[col]);
      std::swap(I[piv], I[col]);
      Rational d = M[col][col];
      for (std::size_t c = 0; c < p; ++c) {
        M[col][c] /= d;
        I[col][c] /= d;
      }
      for (std::size_t r = 0; r < p; ++r) {
        if (r == col || M[r][col] == 0) continue;
        Rational f = M[r][col];
        for (std::size_t c = 0; c < p; ++c) {
          M[r][c] -= f * M[col][c];
          I[r][c] -= f * I[col][c];
        }
      }
    }
    return I;
  }

  int N_;
  std::map<std::pair<Partition, Partition>, std::map<Partition, Rational>> mm_cache_;
  std::map<Basis, std::map<Partition, std::map<Partition, Rational>>> in_m_cache_;
  std::map<std::pair<Partition, Partition>, long long> kostka_cache_;
  std::vector<std::map<Partition, Rational>> hstar_m_;
};

}  // namespace stablering

#endif
