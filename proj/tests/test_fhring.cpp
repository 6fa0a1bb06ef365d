#include <doctest.h>

#include <map>
#include <vector>

#include "stablering/fhring.hpp"

namespace sr = stablering;

namespace {

sr::Partition P(std::vector<int> parts) { return sr::Partition(std::move(parts)); }

sr::PartitionFunction pf(std::vector<sr::Partition> a) {
  return sr::PartitionFunction(std::move(a));
}

}  // namespace

TEST_CASE("binomial handles negative arguments") {
  using boost::multiprecision::cpp_int;
  CHECK(sr::binomial(5, 2) == 10);
  CHECK(sr::binomial(5, 0) == 1);
  CHECK(sr::binomial(5, 6) == 0);
  CHECK(sr::binomial(5, -1) == 0);
  CHECK(sr::binomial(-1, 2) == 1);
  CHECK(sr::binomial(-2, 3) == -4);
}

TEST_CASE("IntegerValuedPolynomial evaluates in the binomial basis") {
  sr::IntegerValuedPolynomial p({1, 2, 3});  // 1 + 2n + 3C(n,2)
  CHECK(p.degree() == 2);
  CHECK(p.eval(0) == 1);
  CHECK(p.eval(1) == 3);
  CHECK(p.eval(4) == 27);
  sr::IntegerValuedPolynomial trimmed({7, 0, 0});
  CHECK(trimmed.degree() == 0);
  CHECK(trimmed.eval(100) == 7);
}

TEST_CASE("fh_product stable examples") {
  sr::FiniteGroup t = sr::build_group("trivial");
  auto r = sr::fh_product(t, pf({P({1})}), pf({P({1})}));
  sr::FHElement want;
  want.add(pf({P({2})}), 3);
  want.add(pf({P({1, 1})}), 2);
  CHECK(r.element == want);
  CHECK(r.witness_lo == 4);
  CHECK(r.witness_hi == 5);

  auto unit = sr::fh_product(t, pf({}), pf({P({2, 1})}));
  sr::FHElement wantu;
  wantu.add(pf({P({2, 1})}), 1);
  CHECK(unit.element == wantu);

  // Z/2 wreath: the table comes from the brute-force graded product itself.
  sr::FiniteGroup z2 = sr::build_group("cyclic:2");
  auto lam = pf({sr::Partition(), P({1})});
  auto rz = sr::fh_product(z2, lam, lam);
  auto direct = sr::graded_product(z2, rz.witness_lo, lam, lam);
  CHECK(rz.element.coeffs == direct.terms);
  for (const auto& [nu, c] : rz.element.coeffs) CHECK(c > 0);
}

TEST_CASE("fh_product is commutative and associative") {
  sr::FiniteGroup t = sr::build_group("trivial");
  auto a = pf({P({1})}), b = pf({P({2})}), c = pf({P({1})});
  CHECK(sr::fh_product(t, a, b).element == sr::fh_product(t, b, a).element);

  auto mul_elem = [&](const sr::FHElement& e, const sr::PartitionFunction& w) {
    sr::FHElement out;
    for (const auto& [mu, coeff] : e.coeffs)
      for (const auto& [nu, d] : sr::fh_product(t, mu, w).element.coeffs)
        out.add(nu, coeff * d);
    return out;
  };
  auto left = mul_elem(sr::fh_product(t, a, b).element, c);
  auto right = mul_elem(sr::fh_product(t, b, c).element, a);
  CHECK(left == right);
}

TEST_CASE("polyfit recovers C(n,2) for lambda=mu=(1), nu=empty") {
  sr::FiniteGroup t = sr::build_group("trivial");
  auto r = sr::polyfit_structure(t, pf({P({1})}), pf({P({1})}), pf({}), 2, 7);
  CHECK(r.poly.degree() == 2);
  CHECK(r.poly.binomial_coeffs() == std::vector<boost::multiprecision::cpp_int>{0, 0, 1});
  CHECK(r.holdout_n == 7);
  CHECK(r.holdout_ok);
  CHECK(r.poly.eval(7) == 21);
  std::vector<std::pair<int, long long>> want = {{2, 1}, {3, 3}, {4, 6},
                                                 {5, 10}, {6, 15}, {7, 21}};
  CHECK(r.samples == want);
}

TEST_CASE("polyfit top-degree constants") {
  sr::FiniteGroup t = sr::build_group("trivial");
  auto r = sr::polyfit_structure(t, pf({P({1})}), pf({P({1})}), pf({P({2})}), 3, 7);
  CHECK(r.poly.degree() == 0);
  CHECK(r.poly.eval(100) == 3);
  CHECK(r.holdout_ok);

  auto r2 = sr::polyfit_structure(t, pf({}), pf({P({2})}), pf({P({2})}), 3, 7);
  CHECK(r2.poly.degree() == 0);
  CHECK(r2.poly.eval(9) == 1);

  // top-degree fits agree with fh_product coefficients
  auto fh = sr::fh_product(t, pf({P({1})}), pf({P({1})})).element;
  auto r3 = sr::polyfit_structure(t, pf({P({1})}), pf({P({1})}), pf({P({1, 1})}), 4, 8);
  CHECK(r3.poly.degree() == 0);
  CHECK(r3.poly.eval(0) == fh.coeffs.at(pf({P({1, 1})})));
}

TEST_CASE("structure_constant demands nonempty classes") {
  sr::FiniteGroup t = sr::build_group("trivial");
  CHECK_THROWS_AS(
      sr::structure_constant(t, 3, pf({P({1})}), pf({P({1})}), pf({P({1, 1})})),
      sr::class_empty_error);
  CHECK(sr::structure_constant(t, 4, pf({P({1})}), pf({P({1})}), pf({P({1, 1})})) == 2);
}

TEST_CASE("restriction map compatibility") {
  sr::FiniteGroup t = sr::build_group("trivial");
  auto rep5 = sr::restriction_check(t, 5, {{pf({P({1})}), pf({P({1})})}});
  REQUIRE(rep5.checks.size() == 1);
  CHECK(rep5.all_pass());
  CHECK(rep5.checks[0].at_n.terms == rep5.checks[0].at_n_minus_1.terms);

  // at n=4 the (1,1) class dies at n-1=3 and is dropped
  auto rep4 = sr::restriction_check(t, 4, {{pf({P({1})}), pf({P({1})})}});
  CHECK(rep4.all_pass());
  CHECK(rep4.checks[0].at_n.terms.size() == 2);
  CHECK(rep4.checks[0].at_n_minus_1.terms.size() == 1);

  auto rep_triv = sr::restriction_check(t, 3, {{pf({}), pf({})}});
  CHECK(rep_triv.all_pass());
}
