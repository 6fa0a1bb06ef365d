// Batch CLI for the stable-ring library: group and wreath-class inspection,
// FH products and polynomial fits, Jucys-Murphy identities, symmetric
// function checks, partial-permutation convolution, and the Goettsche series.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "stablering/errors.hpp"
#include "stablering/fhring.hpp"
#include "stablering/group.hpp"
#include "stablering/jm.hpp"
#include "stablering/partialperm.hpp"
#include "stablering/partition.hpp"
#include "stablering/serialize.hpp"
#include "stablering/series.hpp"
#include "stablering/symfun.hpp"
#include "stablering/wreath.hpp"

namespace sr = stablering;

namespace {

struct Options {
  std::string group = "trivial";
  std::string lambda, mu, nu, rho, sigma;
  std::string n_range;
  std::string format = "json";
  std::string basis = "m";
  int n = 0, m = 0, k = 0, d = 0;
  int deg = 8;
  int max_weight = 2;
  int heven = 1, hodd = 0, terms = 10;
  long long cap = 0;
};

sr::Caps caps_of(const Options& o) {
  sr::Caps c = sr::default_caps();
  if (o.cap > 0) c.group_enum = o.cap;
  return c;
}

void emit_terms_table(const std::vector<std::pair<std::string, long long>>& rows) {
  std::size_t w = 4;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows)
    std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

void emit_class_vector(const sr::ClassVector& v, const std::string& format) {
  if (format == "json") {
    std::cout << sr::to_json(v).dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, long long>> rows;
  for (const auto& [mu, c] : v.terms) rows.emplace_back(sr::format_pvf(mu), c);
  emit_terms_table(rows);
}

std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw sr::validation_error("--n-range must look like a:b");
  try {
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw sr::validation_error("--n-range must look like a:b");
  }
}

int run_group_info(const Options& o) {
  sr::FiniteGroup G = sr::build_group(o.group);
  if (o.format == "json") {
    sr::json classes = sr::json::array();
    for (int c = 0; c < G.class_count(); ++c)
      classes.push_back({{"index", c}, {"rep", G.class_rep(c)}, {"size", G.class_size(c)}});
    std::cout << sr::json{{"group", G.name()}, {"order", G.order()}, {"classes", classes}}
                     .dump()
              << "\n";
  } else {
    std::cout << "group " << G.name() << " order " << G.order() << "\n";
    for (int c = 0; c < G.class_count(); ++c)
      std::cout << "class " << c << "  rep " << G.class_rep(c) << "  size "
                << G.class_size(c) << "\n";
  }
  return 0;
}

int run_wreath_classes(const Options& o) {
  sr::FiniteGroup G = sr::build_group(o.group);
  sr::Caps caps = caps_of(o);
  sr::json rows = sr::json::array();
  for (const auto& mu : sr::candidate_types(G, o.n, o.n, caps)) {
    auto cls = sr::enumerate_class(G, o.n, mu, caps);
    if (cls.empty()) continue;
    if (o.format == "json")
      rows.push_back({{"type", sr::format_pvf(mu)},
                      {"weight", mu.weight()},
                      {"size", cls.size()}});
    else
      std::cout << sr::format_pvf(mu) << "  weight " << mu.weight() << "  size "
                << cls.size() << "\n";
  }
  if (o.format == "json") std::cout << sr::json{{"n", o.n}, {"classes", rows}}.dump() << "\n";
  return 0;
}

int run_wreath_conv(const Options& o, bool graded) {
  sr::FiniteGroup G = sr::build_group(o.group);
  sr::ClassVector v =
      graded ? sr::graded_product(G, o.n, sr::parse_pvf(o.lambda), sr::parse_pvf(o.mu),
                                  caps_of(o))
             : sr::convolve(G, o.n, sr::parse_pvf(o.lambda), sr::parse_pvf(o.mu),
                            caps_of(o));
  emit_class_vector(v, o.format);
  return 0;
}

int run_fh_product(const Options& o) {
  sr::FiniteGroup G = sr::build_group(o.group);
  sr::FHProductResult r =
      sr::fh_product(G, sr::parse_pvf(o.lambda), sr::parse_pvf(o.mu), caps_of(o));
  if (o.format == "json") {
    sr::json j = sr::to_json(r.element);
    j["witness_n"] = {r.witness_lo, r.witness_hi};
    std::cout << j.dump() << "\n";
  } else {
    std::vector<std::pair<std::string, long long>> rows;
    for (const auto& [mu, c] : r.element.coeffs) rows.emplace_back(sr::format_pvf(mu), c);
    emit_terms_table(rows);
    std::cout << "witness n: " << r.witness_lo << ", " << r.witness_hi << "\n";
  }
  return 0;
}

int run_fh_polyfit(const Options& o) {
  sr::FiniteGroup G = sr::build_group(o.group);
  auto [lo, hi] = parse_range(o.n_range);
  sr::PolyfitResult r =
      sr::polyfit_structure(G, sr::parse_pvf(o.lambda), sr::parse_pvf(o.mu),
                            sr::parse_pvf(o.nu), lo, hi, caps_of(o));
  if (o.format == "json") {
    std::cout << sr::to_json(r).dump() << "\n";
  } else {
    std::cout << "degree " << r.poly.degree() << "  binomial coeffs:";
    for (const auto& c : r.poly.binomial_coeffs()) std::cout << " " << c;
    std::cout << "\nholdout n=" << r.holdout_n << (r.holdout_ok ? " ok" : " FAIL")
              << "\n";
  }
  return 0;
}

int run_fh_restrict(const Options& o) {
  sr::FiniteGroup G = sr::build_group(o.group);
  std::vector<std::pair<sr::PartitionFunction, sr::PartitionFunction>> pairs;
  if (!o.lambda.empty() && !o.mu.empty()) {
    pairs.emplace_back(sr::parse_pvf(o.lambda), sr::parse_pvf(o.mu));
  } else {
    sr::IndexSet S = G.class_index_set();
    std::vector<sr::PartitionFunction> all;
    for (int w = 0; w <= o.max_weight; ++w)
      for (auto& p : sr::enumerate_pvf(w, S)) all.push_back(std::move(p));
    for (const auto& a : all)
      for (const auto& b : all)
        if (a.weight() + b.weight() <= o.max_weight &&
            o.n - 1 >= sr::min_ambient_n(a) && o.n - 1 >= sr::min_ambient_n(b))
          pairs.emplace_back(a, b);
  }
  sr::RestrictionReport rep = sr::restriction_check(G, o.n, pairs, caps_of(o));
  if (o.format == "json") {
    sr::json rows = sr::json::array();
    for (const auto& c : rep.checks)
      rows.push_back({{"lambda", sr::format_pvf(c.lambda)},
                      {"mu", sr::format_pvf(c.mu)},
                      {"pass", c.pass}});
    std::cout << sr::json{{"n", rep.n}, {"checks", rows}, {"all_pass", rep.all_pass()}}
                     .dump()
              << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << sr::format_pvf(c.lambda) << " * " << sr::format_pvf(c.mu) << "  "
                << (c.pass ? "pass" : "FAIL") << "\n";
  }
  return rep.all_pass() ? 0 : 4;
}

int run_jm_verify(const Options& o) {
  int n = o.n;
  bool all_ok = true;
  for (int k = 1; k <= n + 1; ++k) {
    sr::GradedElement el = sr::neg_xi_star_power(k, n);
    bool ok;
    if (k >= n) {
      ok = el.zero();
    } else {
      sr::ClassVector cv = sr::to_class_vector(el);
      sr::ClassVector want;
      want.n = n;
      want.add(sr::PartitionFunction({sr::Partition({k})}), k % 2 ? -1 : 1);
      ok = cv == want;
    }
    all_ok = all_ok && ok;
    std::cout << "(-Xi)^{*" << k << "}(" << n << ") "
              << (k >= n ? "= 0" : std::string("= (-1)^") + std::to_string(k) + " K_(" +
                                       std::to_string(k) + ")(" + std::to_string(n) + ")")
              << "  " << (ok ? "pass" : "FAIL") << "\n";
  }
  if (!all_ok) throw sr::math_error("jm verify: a star-power identity failed");
  return 0;
}

int run_jm_power(const Options& o) {
  sr::GradedElement el = sr::neg_xi_star_power(o.k, o.n);
  if (o.format == "json") {
    std::cout << sr::to_json(el).dump() << "\n";
  } else {
    sr::ClassVector cv = sr::to_class_vector(el);
    emit_class_vector(cv, "table");
  }
  return 0;
}

int run_jm_schur(const Options& o) {
  sr::GradedElement el =
      sr::sym_star(sr::SymKind::s, sr::parse_partition(o.lambda), o.n, true);
  if (o.format == "json")
    std::cout << sr::to_json(el).dump() << "\n";
  else
    emit_class_vector(sr::to_class_vector(el), "table");
  return 0;
}

void emit_symfunc(const sr::SymFunc& f, const std::string& format) {
  if (format == "json") {
    std::cout << sr::to_json(f).dump() << "\n";
    return;
  }
  if (f.terms.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [p, c] : f.terms)
    std::cout << sr::basis_name(f.basis) << "[" << sr::format_partition(p) << "]  " << c
              << "\n";
}

int run_symfunc_hstar(const Options& o) {
  sr::SymRing ring(o.deg);
  emit_symfunc(ring.hstar(o.k), o.format);
  return 0;
}

int run_symfunc_g(const Options& o) {
  sr::SymRing ring(o.deg);
  emit_symfunc(ring.dual_g(sr::parse_partition(o.lambda)), o.format);
  return 0;
}

int run_symfunc_phi(const Options& o) {
  sr::SymRing ring(o.deg);
  sr::FHElement e;
  e.add(sr::PartitionFunction({sr::parse_partition(o.lambda)}), 1);
  sr::SymFunc f = ring.macdonald_phi(e);
  emit_symfunc(ring.convert(f, sr::parse_basis(o.basis)), o.format);
  return 0;
}

int run_symfunc_check(const Options& o) {
  int deg = std::min(o.deg, 6);
  sr::SymRing ring(std::max(o.deg, deg));
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    all_ok = all_ok && ok;
    std::cout << name << "  " << (ok ? "pass" : "FAIL") << "\n";
  };

  bool psi_ok = true, omega_ok = true, schur_ok = true, dual_ok = true;
  for (int d = 0; d <= deg; ++d) {
    auto parts = sr::enumerate_partitions(d);
    for (const auto& lam : parts) {
      sr::SymFunc h = ring.term(sr::Basis::h, lam);
      psi_ok = psi_ok && ring.convert(ring.psi(ring.psi(h)), sr::Basis::h) == h;
      sr::SymFunc s = ring.term(sr::Basis::s, lam);
      omega_ok = omega_ok && ring.convert(ring.omega(ring.omega(s)), sr::Basis::s) == s;
      for (const auto& mu : parts) {
        sr::Rational want = lam == mu ? 1 : 0;
        schur_ok = schur_ok &&
                   ring.hall_inner(ring.term(sr::Basis::s, lam),
                                   ring.term(sr::Basis::s, mu)) == want;
        dual_ok = dual_ok &&
                  ring.hall_inner(ring.dual_g(lam),
                                  ring.term(sr::Basis::hstar, mu)) == want;
      }
    }
  }
  report("psi is an involution (h basis, degree <= " + std::to_string(deg) + ")", psi_ok);
  report("omega is an involution (s basis)", omega_ok);
  report("<s_lambda, s_mu> = delta", schur_ok);
  report("<g_lambda, h_mu*> = delta", dual_ok);
  if (!all_ok) throw sr::math_error("symfunc check failed");
  return 0;
}

int run_ik_conv(const Options& o) {
  sr::OrbitElement e = sr::pp_convolve(sr::parse_partition(o.rho),
                                       sr::parse_partition(o.sigma), o.n, caps_of(o));
  if (o.format == "json") {
    std::cout << sr::to_json(e).dump() << "\n";
  } else {
    std::vector<std::pair<std::string, long long>> rows;
    for (const auto& [p, c] : e.coeffs) rows.emplace_back(sr::format_partition(p), c);
    emit_terms_table(rows);
  }
  return 0;
}

int run_ik_theta(const Options& o) {
  sr::OrbitElement e = sr::theta(o.n, o.m, sr::orbit_sum(sr::parse_partition(o.rho), o.n));
  std::cout << sr::to_json(e).dump() << "\n";
  return 0;
}

int run_ik_forget(const Options& o) {
  sr::ClassVector v = sr::forget(sr::orbit_sum(sr::parse_partition(o.rho), o.n));
  emit_class_vector(v, o.format);
  return 0;
}

int run_ik_age(const Options& o) {
  auto a = sr::age(sr::parse_partition(o.rho), o.d);
  if (o.format == "json")
    std::cout << sr::json{{"cycle_type", sr::parse_partition(o.rho).parts()},
                          {"d", o.d},
                          {"age", a.str()}}
                     .dump()
              << "\n";
  else
    std::cout << a << "\n";
  return 0;
}

int run_goettsche(const Options& o) {
  auto coeffs = sr::goettsche_series(o.heven, o.hodd, o.terms);
  if (o.format == "json") {
    sr::json arr = sr::json::array();
    for (const auto& c : coeffs) arr.push_back(c.str());
    std::cout << sr::json{{"heven", o.heven}, {"hodd", o.hodd}, {"coeffs", arr}}.dump()
              << "\n";
  } else {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      std::cout << (i ? "," : "") << coeffs[i];
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stablering: exact stable rings of wreath-product class algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--cap", o.cap, "enumeration cap override");
  };

  int (*action)(const Options&) = nullptr;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) {
    add_common(cmd);
    cmd->callback([&action, fn]() { action = fn; });
    return cmd;
  };

  CLI::App* group = app.add_subcommand("group", "finite group kernel");
  group->require_subcommand(1);
  CLI::App* ginfo = bind(group->add_subcommand("info", "order and conjugacy classes"),
                         run_group_info);
  ginfo->add_option("--group", o.group, "group spec")->required();

  CLI::App* wreath = app.add_subcommand("wreath", "wreath product class algebra");
  wreath->require_subcommand(1);
  CLI::App* wcl = bind(wreath->add_subcommand("classes", "list nonempty classes"),
                       run_wreath_classes);
  wcl->add_option("--group", o.group);
  wcl->add_option("--n", o.n)->required();
  for (bool graded : {false, true}) {
    CLI::App* cmd = wreath->add_subcommand(graded ? "graded" : "conv",
                                           graded ? "graded product in G_Gamma(n)"
                                                  : "convolution product in R_Z(Gamma_n)");
    add_common(cmd);
    cmd->add_option("--group", o.group);
    cmd->add_option("--n", o.n)->required();
    cmd->add_option("--lambda", o.lambda)->required();
    cmd->add_option("--mu", o.mu)->required();
    cmd->callback([&action, graded]() {
      static int (*fns[2])(const Options&) = {
          [](const Options& opt) { return run_wreath_conv(opt, false); },
          [](const Options& opt) { return run_wreath_conv(opt, true); }};
      action = fns[graded ? 1 : 0];
    });
  }

  CLI::App* fh = app.add_subcommand("fh", "Farahat-Higman stable layer");
  fh->require_subcommand(1);
  CLI::App* fhp = bind(fh->add_subcommand("product", "stable FH product"), run_fh_product);
  fhp->add_option("--group", o.group);
  fhp->add_option("--lambda", o.lambda)->required();
  fhp->add_option("--mu", o.mu)->required();
  CLI::App* fhf = bind(fh->add_subcommand("polyfit", "interpolate D(n) in n"),
                       run_fh_polyfit);
  fhf->add_option("--group", o.group);
  fhf->add_option("--lambda", o.lambda)->required();
  fhf->add_option("--mu", o.mu)->required();
  fhf->add_option("--nu", o.nu)->required();
  fhf->add_option("--n-range", o.n_range, "a:b inclusive; b is held out")->required();
  CLI::App* fhr = bind(fh->add_subcommand("restrict", "restriction homomorphism check"),
                       run_fh_restrict);
  fhr->add_option("--group", o.group);
  fhr->add_option("--n", o.n)->required();
  fhr->add_option("--lambda", o.lambda);
  fhr->add_option("--mu", o.mu);
  fhr->add_option("--max-weight", o.max_weight);

  CLI::App* jm = app.add_subcommand("jm", "Jucys-Murphy star products");
  jm->require_subcommand(1);
  CLI::App* jmv = bind(jm->add_subcommand("verify", "star-power class identities"),
                       run_jm_verify);
  jmv->add_option("--n", o.n)->required();
  CLI::App* jmp = bind(jm->add_subcommand("power", "(-Xi)^{*k}(n)"), run_jm_power);
  jmp->add_option("--k", o.k)->required();
  jmp->add_option("--n", o.n)->required();
  CLI::App* jms = bind(jm->add_subcommand("schur", "s_lambda^*(-Xi) at n"), run_jm_schur);
  jms->add_option("--lambda", o.lambda)->required();
  jms->add_option("--n", o.n)->required();

  CLI::App* sf = app.add_subcommand("symfunc", "symmetric functions");
  sf->require_subcommand(1);
  CLI::App* sfh = bind(sf->add_subcommand("hstar", "h_k^* in the h basis"),
                       run_symfunc_hstar);
  sfh->add_option("--k", o.k)->required();
  sfh->add_option("--deg", o.deg);
  CLI::App* sfg = bind(sf->add_subcommand("g", "dual basis g_lambda in m"), run_symfunc_g);
  sfg->add_option("--lambda", o.lambda)->required();
  sfg->add_option("--deg", o.deg);
  CLI::App* sfp = bind(sf->add_subcommand("phi", "phi(K_lambda) in a chosen basis"),
                       run_symfunc_phi);
  sfp->add_option("--lambda", o.lambda)->required();
  sfp->add_option("--basis", o.basis);
  sfp->add_option("--deg", o.deg);
  CLI::App* sfc = bind(sf->add_subcommand("check", "involution and duality checks"),
                       run_symfunc_check);
  sfc->add_option("--deg", o.deg);

  CLI::App* ik = app.add_subcommand("ik", "partial permutations at X = point");
  ik->require_subcommand(1);
  CLI::App* ikc = bind(ik->add_subcommand("conv", "c_rho . c_sigma"), run_ik_conv);
  ikc->add_option("--rho", o.rho)->required();
  ikc->add_option("--sigma", o.sigma)->required();
  ikc->add_option("--n", o.n)->required();
  CLI::App* ikt = bind(ik->add_subcommand("theta", "projection theta_{n,m}"), run_ik_theta);
  ikt->add_option("--rho", o.rho)->required();
  ikt->add_option("--n", o.n)->required();
  ikt->add_option("--m", o.m)->required();
  CLI::App* ikf = bind(ik->add_subcommand("forget", "forgetful map to R(S_n)"),
                       run_ik_forget);
  ikf->add_option("--rho", o.rho)->required();
  ikf->add_option("--n", o.n)->required();
  CLI::App* ika = bind(ik->add_subcommand("age", "degree shift number"), run_ik_age);
  ika->add_option("--rho", o.rho)->required();
  ika->add_option("--d", o.d)->required();

  CLI::App* goe = bind(app.add_subcommand("goettsche", "graded dimension series"),
                       run_goettsche);
  goe->add_option("--heven", o.heven);
  goe->add_option("--hodd", o.hodd);
  goe->add_option("--terms", o.terms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    return action ? action(o) : 2;
  } catch (const sr::size_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sr::math_error& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 4;
  } catch (const sr::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
