#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "omn/element.hpp"
#include "omn/entropy.hpp"
#include "omn/errors.hpp"
#include "omn/group_actions.hpp"
#include "omn/json_io.hpp"
#include "omn/ktheory.hpp"
#include "omn/reproduce.hpp"
#include "omn/rieffel.hpp"
#include "omn/shift_rep.hpp"
#include "omn/solenoid.hpp"

namespace {

using omn::Json;

struct Common {
  int m = 1;
  int n = 2;
  bool json = false;
  std::uint64_t seed = omn::ReproduceOptions{}.seed;
  std::size_t bound = 200000;
};

int exit_for(bool ok) { return ok ? EXIT_SUCCESS : EXIT_FAILURE; }

std::string read_stdin() {
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw omn::InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

/// From --expr text, else from Element JSON on stdin.
omn::Element read_element(const std::string& expr, const omn::AlgebraParams& params) {
  if (!expr.empty()) return omn::parse_expression(expr, params);
  return omn::element_from_json(parse_json(read_stdin()), params);
}

void print_element(const omn::Element& x, bool json) {
  if (json) std::cout << omn::to_json(x).dump() << "\n";
  else std::cout << omn::to_string(x) << "\n";
}

void print_scalar(const omn::Scalar& s, bool json) {
  if (json) std::cout << Json{{"re", omn::format_rational(s.re)}, {"im", omn::format_rational(s.im)}}.dump() << "\n";
  else std::cout << omn::to_string(s) << "\n";
}

void print_kgroups(const omn::KGroups& k, bool json) {
  if (json) std::cout << omn::to_json(k).dump() << "\n";
  else std::cout << "K0 = " << omn::to_string(k.K0) << "\nK1 = " << omn::to_string(k.K1) << "\n";
}

void print_witness(const omn::WitnessReport& r, bool json) {
  if (json) {
    std::cout << omn::to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << "k = " << r.k << " (effective " << r.effective_k << ")\n";
  for (const auto& s : r.reductions)
    std::cout << "  reduce by p = " << s.prime << ": z^" << s.k_before << " -> z^" << s.k_after
              << " via S_1^* z^{" << s.a << "n} S_1 = z^{" << s.a << "m} " << (s.verified ? "ok" : "FAILED") << "\n";
  for (const auto& rel : r.relations)
    std::cout << "  " << (rel.pass() ? "ok     " : "FAILED ") << rel.relation << " (" << rel.instances << " instances)"
              << (rel.first_failure.empty() ? "" : " first failure " + rel.first_failure) << "\n";
  if (!r.l_table.empty()) {
    std::cout << "  l-table:";
    for (const auto& [l, p] : r.l_table) std::cout << " " << l;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the algebras O_(m,n)(T)"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--m", c.m, "parameter m")->capture_default_str();
    sub->add_option("--n", c.n, "parameter n")->capture_default_str();
  };
  app.add_flag("--json", c.json, "machine-readable output");
  app.add_option("--seed", c.seed, "seed for randomized sweeps")->capture_default_str();
  app.add_option("--bound", c.bound, "term or size bound")->capture_default_str();

  std::string expr, expr_b;

  auto* normalize = app.add_subcommand("normalize", "normal form of an expression (or Element JSON on stdin)");
  add_params(normalize);
  normalize->add_option("--expr", expr, "e.g. \"S_1 z^2 S_2*\"");

  auto* mul = app.add_subcommand("mul", "product of two expressions");
  add_params(mul);
  mul->add_option("--a", expr, "left factor")->required();
  mul->add_option("--b", expr_b, "right factor")->required();

  auto* iszero = app.add_subcommand("iszero", "decide x = 0 in the algebra");
  add_params(iszero);
  iszero->add_option("--expr", expr, "expression; Element JSON on stdin otherwise");

  auto* kms = app.add_subcommand("kms", "value of the log n KMS state");
  add_params(kms);
  kms->add_option("--expr", expr, "expression; Element JSON on stdin otherwise");

  std::string method = "six-term";
  auto* kgroups = app.add_subcommand("kgroups", "K-groups of O_(m,n)(T)");
  add_params(kgroups);
  kgroups->add_option("--method", method, "six-term|pv|both")
      ->check(CLI::IsMember({"six-term", "pv", "both"}))
      ->capture_default_str();

  std::string parity = "odd";
  auto* kfixed = app.add_subcommand("kgroups-fixed", "K-groups of the symmetry fixed-point algebra");
  kfixed->add_option("--m-parity", parity, "odd|even")->check(CLI::IsMember({"odd", "even"}))->capture_default_str();
  kfixed->add_option("--n", c.n, "parameter n")->capture_default_str();

  std::string fp_action, monomial_json;
  auto* fixed = app.add_subcommand("fixed-point", "beta-fixed monomials and their generator words");
  add_params(fixed);
  fixed->add_option("action", fp_action, "test|rewrite")->required()->check(CLI::IsMember({"test", "rewrite"}));
  fixed->add_option("--monomial", monomial_json, "{\"mu\":[..],\"k\":..,\"nu\":[..]}")->required();

  std::string sub_kind;
  int sub_k = 1;
  std::int64_t witness_bound = 81;
  auto* subalgebra = app.add_subcommand("subalgebra", "generator witnesses for C*(z, S_1^k) and C*(z^k, S_1)");
  add_params(subalgebra);
  subalgebra->add_option("kind", sub_kind, "power|zk")->required()->check(CLI::IsMember({"power", "zk"}));
  subalgebra->add_option("--k", sub_k, "k")->required();
  subalgebra->add_option("--max-generators", witness_bound, "bound on n^k")->capture_default_str();

  std::string rieffel_action;
  std::size_t grid = 4096;
  auto* rieffel = app.add_subcommand("rieffel", "the Rieffel-type projection in M_2(O_(1,2)(T))");
  rieffel->add_option("action", rieffel_action, "verify|trace|k0class")
      ->required()
      ->check(CLI::IsMember({"verify", "trace", "k0class"}));
  rieffel->add_option("--grid", grid, "sample grid for P^2 = P")->capture_default_str();

  std::string rep_action, variant = "A", window_text = "64,0";
  auto* rep = app.add_subcommand("rep", "relation residuals of the shift representation");
  add_params(rep);
  rep->add_option("action", rep_action, "check")->required()->check(CLI::IsMember({"check"}));
  rep->add_option("--variant", variant, "A|B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  rep->add_option("--window", window_text, "P,Q: indices p/m^q with |p| <= P, q <= Q")->capture_default_str();

  std::string sol_action, phase_text = "0", f_text = "x0";
  int period = 1;
  std::int64_t residue = -1;
  auto* solenoid = app.add_subcommand("solenoid", "periodic points and covariant representations of the solenoid");
  solenoid->add_option("action", sol_action, "points|rep")->required()->check(CLI::IsMember({"points", "rep"}));
  solenoid->add_option("--m", c.m, "solenoid base m >= 2")->required();
  solenoid->add_option("--period", period, "exact period k")->required();
  solenoid->add_option("--phase", phase_text, "z = exp(2 pi i phase); p/q is exact, decimals are double")
      ->capture_default_str();
  solenoid->add_option("--f", f_text, "coordinate monomial, e.g. \"x0^2 x1^-1\"")->capture_default_str();
  solenoid->add_option("--r", residue, "residue of the point (default: every point)");

  int s = 0, n_max = 8;
  auto* entropy = app.add_subcommand("entropy", "span-dimension growth under the canonical endomorphism");
  add_params(entropy);
  entropy->add_option("--s", s, "omega(s)")->capture_default_str();
  entropy->add_option("--nmax", n_max, "largest N")->capture_default_str();

  int criterion = 0;
  auto* reproduce = app.add_subcommand("reproduce", "run the acceptance suite");
  reproduce->add_option("--criterion", criterion, "run a single criterion 1..9")->check(CLI::Range(1, omn::criterion_count));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize) {
      const omn::AlgebraParams params(c.m, c.n);
      print_element(read_element(expr, params), c.json);
    } else if (*mul) {
      const omn::AlgebraParams params(c.m, c.n);
      print_element(omn::mul(omn::parse_expression(expr, params), omn::parse_expression(expr_b, params), params),
                    c.json);
    } else if (*iszero) {
      const omn::AlgebraParams params(c.m, c.n);
      const bool zero = omn::is_zero(read_element(expr, params), params);
      std::cout << (c.json ? Json{{"is_zero", zero}}.dump() : std::string(zero ? "true" : "false")) << "\n";
    } else if (*kms) {
      const omn::AlgebraParams params(c.m, c.n);
      print_scalar(omn::kms_state(read_element(expr, params), params), c.json);
    } else if (*kgroups) {
      if (method == "both") {
        const auto six = omn::six_term_kgroups(c.m, c.n);
        const auto pv = omn::pv_dual_action_kgroups(c.m, c.n);
        const bool agree = six.K0.same_type(pv.K0) && six.K1.same_type(pv.K1);
        if (c.json) {
          std::cout << Json{{"six-term", omn::to_json(six)}, {"pv", omn::to_json(pv)}, {"agree", agree}}.dump() << "\n";
        } else {
          print_kgroups(six, false);
          std::cout << (agree ? "six-term and PV agree" : "six-term and PV DISAGREE") << "\n";
        }
        return exit_for(agree);
      }
      const auto k = method == "pv" ? omn::pv_dual_action_kgroups(c.m, c.n) : omn::six_term_kgroups(c.m, c.n);
      std::cout << omn::to_json(k).dump() << "\n";
    } else if (*kfixed) {
      const auto r = omn::symmetric_fixed_point_kgroups(omn::parse_parity(parity), c.n);
      if (c.json) {
        std::cout << omn::to_json(r).dump(2) << "\n";
      } else {
        std::cout << "m " << parity << ", n = " << c.n << "\n[Y]_0 = " << omn::to_string(r.map)
                  << "\nSNF(I - [Y]_0) = " << omn::to_string(r.smith.D) << "\nK0 = " << omn::to_string(r.computed.K0)
                  << "\nK1 = " << omn::to_string(r.computed.K1) << "\n";
        if (!r.note.empty()) std::cout << r.note << "\n";
      }
    } else if (*fixed) {
      const omn::AlgebraParams params(c.m, c.n);
      const omn::Monomial mon = omn::monomial_from_json(parse_json(monomial_json), params);
      if (fp_action == "test") {
        const bool fixed_point = omn::fixed_point_test(mon, params);
        if (c.json)
          std::cout << Json{{"fixed", fixed_point}, {"weight", omn::beta_weight(mon, params)}}.dump() << "\n";
        else
          std::cout << (fixed_point ? "true" : "false") << "\n";
      } else {
        const auto w = omn::fixed_point_rewrite(mon, params);
        std::cout << (c.json ? omn::to_json(w).dump() : omn::to_string(w)) << "\n";
      }
    } else if (*subalgebra) {
      const omn::AlgebraParams params(c.m, c.n);
      const auto r = sub_kind == "power" ? omn::subalgebra_witness_power(sub_k, params, witness_bound)
                                         : omn::subalgebra_witness_zk(sub_k, params, witness_bound);
      print_witness(r, c.json);
      return exit_for(r.all_pass());
    } else if (*rieffel) {
      const auto data = omn::build_canonical_data();
      if (rieffel_action == "trace") {
        const auto t = omn::kms_trace(data);
        std::cout << (c.json ? Json{{"trace", omn::pretty_rational(t)}}.dump() : omn::pretty_rational(t)) << "\n";
      } else if (rieffel_action == "k0class") {
        const auto k = omn::k0_class(data);
        std::cout << (c.json ? Json{{"k0_class", k.get_si()}}.dump() : k.get_str()) << "\n";
      } else {
        const auto cond = omn::check_conditions(data);
        const auto square = omn::assemble_and_square(data, grid);
        const bool ok = cond.all_pass() && square.residual < omn::tolerance::projection_residual;
        if (c.json) {
          std::cout << Json{{"conditions", omn::to_json(cond)}, {"square", omn::to_json(square)}, {"pass", ok}}.dump(2)
                    << "\n";
        } else {
          for (const auto& chk : cond.checks)
            std::cout << (chk.pass ? "ok     " : "FAILED ") << chk.name
                      << (chk.witness ? " at t = " + omn::pretty_rational(*chk.witness) : "") << "\n";
          std::cout << "max |P^2 - P| = " << square.residual << " on " << square.grid << " points, "
                    << square.residual_doubled << " on " << 2 * square.grid << "\n";
        }
        return exit_for(ok);
      }
    } else if (*rep) {
      const omn::AlgebraParams params(c.m, c.n);
      omn::IndexWindow window;
      const auto comma = window_text.find(',');
      if (comma == std::string::npos) throw omn::InvalidInput("--window expects P,Q");
      window.max_abs_numerator = std::stoll(window_text.substr(0, comma));
      window.max_exponent = std::stoi(window_text.substr(comma + 1));
      const auto r = omn::relation_residuals(omn::parse_variant(variant), params, window);
      if (c.json) {
        std::cout << omn::to_json(r).dump(2) << "\n";
      } else {
        for (const auto& chk : r.checks)
          std::cout << (chk.violations == 0 ? "ok     " : "FAILED ") << chk.relation << ": " << chk.covered << "/"
                    << chk.instances << " covered" << (chk.first_violation.empty() ? "" : ", " + chk.first_violation)
                    << "\n";
        std::cout << "coverage " << r.coverage() << ", violations " << r.violations() << "\n";
      }
      return exit_for(r.violations() == 0);
    } else if (*solenoid) {
      const auto points = omn::solenoid_periodic_points(c.m, period);
      if (sol_action == "points") {
        if (c.json) {
          Json out = Json::array();
          for (const auto& orbit : omn::solenoid_orbits(c.m, period)) {
            Json o = Json::array();
            for (const auto& x : orbit) o.push_back(omn::to_json(x));
            out.push_back(o);
          }
          std::cout << Json{{"count", points.size()}, {"orbits", out}}.dump(2) << "\n";
        } else {
          std::cout << "|Per_" << period << "| = " << points.size() << "\n";
          for (const auto& orbit : omn::solenoid_orbits(c.m, period)) {
            std::cout << "  orbit r =";
            for (const auto& x : orbit) std::cout << " " << x.r;
            std::cout << " (mod " << orbit.front().modulus << ")\n";
          }
        }
      } else {
        const auto f = omn::parse_coordinate_monomial(f_text);
        const bool exact_phase = phase_text.find('.') == std::string::npos;
        bool ok = true;
        Json reports = Json::array();
        for (const auto& x : points) {
          if (residue >= 0 && x.r != residue) continue;
          const auto r = exact_phase ? omn::solenoid_rep_check(x, omn::parse_rational(phase_text), f)
                                     : omn::solenoid_rep_check(x, std::stod(phase_text), f);
          const bool pass = r.exact ? r.residual_inverse == 0 && r.unitary_residual == 0
                                    : r.residual_inverse < 1e-12 && r.unitary_residual < 1e-12;
          ok = ok && pass;
          if (c.json) {
            reports.push_back(omn::to_json(r));
          } else {
            std::cout << "r = " << x.r << ": |uu^* - 1| = " << r.unitary_residual
                      << ", |u rho(f) u^* - rho(f o sigma^-1)| = " << r.residual_inverse
                      << ", |u rho(f) u^* - rho(f o sigma)| = " << r.residual_forward << "\n";
          }
        }
        if (c.json) std::cout << reports.dump(2) << "\n";
        return exit_for(ok);
      }
    } else if (*entropy) {
      const auto t = omn::entropy_estimate(s, n_max, omn::AlgebraParams(c.m, c.n), c.bound);
      if (c.json) {
        std::cout << omn::to_json(t).dump(2) << "\n";
      } else {
        std::cout << "N  D_N  log(D_N)/N  slope\n";
        for (const auto& row : t.rows)
          std::cout << row.N << "  " << row.dimension << "  " << row.log_dim_over_n << "  " << row.slope << "\n";
        std::cout << "growth rate " << t.growth_rate << "\n";
        if (t.partial) std::cerr << "warning: " << t.warning << "\n";
      }
    } else if (*reproduce) {
      omn::ReproduceOptions options;
      options.seed = c.seed;
      bool all = true;
      Json out = Json::array();
      for (int id = 1; id <= omn::criterion_count; ++id) {
        if (criterion != 0 && id != criterion) continue;
        const auto r = omn::run_criterion(id, options);
        all = all && r.pass;
        if (c.json)
          out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        else
          std::cout << omn::format_result(r) << std::endl;
      }
      if (c.json) std::cout << Json{{"schema", 1}, {"seed", c.seed}, {"criteria", out}, {"pass", all}}.dump(2) << "\n";
      return exit_for(all);
    }
  } catch (const omn::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const omn::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const omn::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return EXIT_SUCCESS;
}
