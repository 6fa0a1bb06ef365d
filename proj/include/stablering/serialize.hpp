#ifndef STABLERING_SERIALIZE_HPP
#define STABLERING_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "stablering/fhring.hpp"
#include "stablering/jm.hpp"
#include "stablering/partialperm.hpp"
#include "stablering/partition.hpp"
#include "stablering/symfun.hpp"
#include "stablering/wreath.hpp"

namespace stablering {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
  return Partition(j.get<std::vector<int>>());
}

inline json to_json(const ClassVector& v) {
  json terms = json::array();
  for (const auto& [mu, c] : v.terms)
    terms.push_back({{"type", format_pvf(mu)}, {"coeff", c}});
  return json{{"n", v.n}, {"terms", terms}};
}

inline ClassVector class_vector_from_json(const json& j) {
  ClassVector v;
  v.n = j.at("n").get<int>();
  for (const auto& t : j.at("terms"))
    v.add(parse_pvf(t.at("type").get<std::string>()), t.at("coeff").get<long long>());
  return v;
}

inline json to_json(const FHElement& e) {
  json terms = json::array();
  for (const auto& [mu, c] : e.coeffs)
    terms.push_back({{"type", format_pvf(mu)}, {"coeff", c}});
  return json{{"terms", terms}};
}

inline FHElement fh_element_from_json(const json& j) {
  FHElement e;
  for (const auto& t : j.at("terms"))
    e.add(parse_pvf(t.at("type").get<std::string>()), t.at("coeff").get<long long>());
  return e;
}

inline json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [p, c] : f.terms)
    terms.push_back({{"partition", p.parts()}, {"coeff", c.str()}});
  return json{{"basis", basis_name(f.basis)}, {"N", f.N}, {"terms", terms}};
}

inline SymFunc symfunc_from_json(const json& j) {
  SymFunc f;
  f.basis = parse_basis(j.at("basis").get<std::string>());
  f.N = j.at("N").get<int>();
  for (const auto& t : j.at("terms"))
    f.add(Partition(t.at("partition").get<std::vector<int>>()),
          Rational(t.at("coeff").get<std::string>()));
  return f;
}

inline json to_json(const GradedElement& a) {
  json terms = json::array();
  for (const auto& [p, c] : a.terms) {
    std::vector<int> one_based(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) one_based[i] = p[i] + 1;
    terms.push_back({{"perm", one_based}, {"coeff", c}});
  }
  return json{{"n", a.n}, {"degree", a.degree}, {"terms", terms}};
}

inline GradedElement graded_element_from_json(const json& j) {
  GradedElement a;
  a.n = j.at("n").get<int>();
  a.degree = j.at("degree").get<int>();
  for (const auto& t : j.at("terms")) {
    Perm p = t.at("perm").get<std::vector<int>>();
    for (auto& v : p) --v;
    a.add(p, t.at("coeff").get<long long>());
  }
  return a;
}

inline json to_json(const OrbitElement& e) {
  json terms = json::array();
  for (const auto& [rho, c] : e.coeffs)
    terms.push_back({{"partition", rho.parts()}, {"coeff", c}});
  return json{{"n", e.n}, {"terms", terms}};
}

inline OrbitElement orbit_element_from_json(const json& j) {
  OrbitElement e;
  e.n = j.at("n").get<int>();
  for (const auto& t : j.at("terms"))
    e.add(Partition(t.at("partition").get<std::vector<int>>()),
          t.at("coeff").get<long long>());
  return e;
}

inline json to_json(const PolyfitResult& r) {
  json samples = json::array();
  for (const auto& [n, d] : r.samples) samples.push_back({{"n", n}, {"D", d}});
  json coeffs = json::array();
  for (const auto& c : r.poly.binomial_coeffs())
    coeffs.push_back(c.convert_to<long long>());
  return json{{"lambda", format_pvf(r.lambda)}, {"mu", format_pvf(r.mu)},
              {"nu", format_pvf(r.nu)},         {"samples", samples},
              {"binomial_coeffs", coeffs},      {"holdout_n", r.holdout_n},
              {"holdout_ok", r.holdout_ok}};
}

}  // namespace stablering

#endif
