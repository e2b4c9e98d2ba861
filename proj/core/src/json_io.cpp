#include "omn/json_io.hpp"

#include "omn/errors.hpp"

namespace omn {

namespace {

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json big_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

Word word_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const Json& w = j.at(key);
  if (!w.is_array()) throw InvalidInput(std::string("\"") + key + "\" must be an array of letters");
  Word out;
  for (const auto& letter : w) {
    if (!letter.is_number_integer()) throw InvalidInput(std::string("\"") + key + "\" must contain integers");
    out.push_back(letter.get<int>());
  }
  return out;
}

Monomial term_monomial(const Json& j) {
  if (!j.is_object()) throw InvalidInput("term must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "mu" && key != "k" && key != "nu" && key != "re" && key != "im")
      throw InvalidInput("unknown term key \"" + key + "\" (expected mu, k, nu, re, im)");
  Monomial mon;
  mon.mu = word_from_json(j, "mu");
  mon.nu = word_from_json(j, "nu");
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer()) throw InvalidInput("\"k\" must be an integer");
    mon.k = j.at("k").get<std::int64_t>();
  }
  return mon;
}

std::vector<Rational> breakpoints_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("pieces"))
    throw InvalidInput("function JSON needs \"breakpoints\" and \"pieces\"");
  std::vector<Rational> out;
  for (const auto& b : j.at("breakpoints")) out.push_back(rational_from_json(b));
  return out;
}

std::string backend_of(const Json& j) {
  if (!j.contains("backend")) return "exact";
  const std::string b = j.at("backend").get<std::string>();
  if (b != "exact" && b != "numeric") throw InvalidInput("backend must be \"exact\" or \"numeric\"");
  return b;
}

std::vector<Polynomial> polynomial_pieces(const Json& j) {
  std::vector<Polynomial> out;
  for (const auto& piece : j.at("pieces")) {
    if (!piece.is_array()) throw InvalidInput("each piece must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : piece) coeffs.push_back(rational_from_json(c));
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("rationals must be \"p/q\" strings or integers, got " + j.dump());
}

Json to_json(const Element& x) {
  Json out = Json::array();
  for (const auto& [mon, c] : x.terms()) {
    Json t = to_json(mon);
    t["re"] = format_rational(c.re);
    t["im"] = format_rational(c.im);
    out.push_back(std::move(t));
  }
  return out;
}

Element element_from_json(const Json& j, const AlgebraParams& params) {
  if (!j.is_array()) throw InvalidInput("element JSON must be an array of terms");
  Element x;
  for (const auto& t : j) {
    const Monomial mon = term_monomial(t);
    validate(mon, params);
    const bool has_coeff = t.contains("re") || t.contains("im");
    const Rational re = t.contains("re") ? rational_from_json(t.at("re")) : Rational(has_coeff ? 0 : 1);
    const Rational im = t.contains("im") ? rational_from_json(t.at("im")) : Rational(0);
    x.add_term(mon, Scalar(re, im));
  }
  return x;
}

Json to_json(const Monomial& mon) { return Json{{"mu", mon.mu}, {"k", mon.k}, {"nu", mon.nu}}; }

Monomial monomial_from_json(const Json& j, const AlgebraParams& params) {
  const Json& t = j.is_array() && j.size() == 1 ? j.at(0) : j;
  const Monomial mon = term_monomial(t);
  validate(mon, params);
  return mon;
}

Json to_json(const PiecewiseFunction& f) {
  Json out;
  out["breakpoints"] = Json::array();
  for (const auto& b : f.breakpoints()) out["breakpoints"].push_back(format_rational(b));
  out["pieces"] = Json::array();
  for (const auto& p : f.pieces()) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(format_rational(c));
    out["pieces"].push_back(std::move(coeffs));
  }
  out["backend"] = "exact";
  return out;
}

PiecewiseFunction function_from_json(const Json& j) {
  auto breakpoints = breakpoints_from_json(j);
  if (backend_of(j) != "exact") throw InvalidInput("backend mismatch: expected \"exact\", got \"numeric\"");
  return PiecewiseFunction(std::move(breakpoints), polynomial_pieces(j));
}

NumericFunction numeric_function_from_json(const Json& j) {
  auto breakpoints = breakpoints_from_json(j);
  if (backend_of(j) != "numeric") throw InvalidInput("backend mismatch: expected \"numeric\", got \"exact\"");
  std::vector<NumericPiece> pieces;
  for (const auto& p : polynomial_pieces(j)) pieces.emplace_back(p);
  return NumericFunction(std::move(breakpoints), std::move(pieces));
}

Json to_json(const FGAbelianGroup& g) {
  Json out{{"free_rank", g.free_rank}, {"torsion", big_list(g.torsion)}};
  if (!g.localized.empty()) out["localized"] = big_list(g.localized);
  if (!g.generators.empty()) {
    out["generators"] = Json::array();
    for (const auto& gen : g.generators)
      out["generators"].push_back({{"coords", big_list(gen.coords)}, {"order", big(gen.order)}});
  }
  return out;
}

Json to_json(const KGroups& k) { return Json{{"K0", to_json(k.K0)}, {"K1", to_json(k.K1)}}; }

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const SymmetricFixedPointReport& r) {
  Json out{{"parity", to_string(r.parity)},
           {"n", r.n},
           {"map", to_json(r.map)},
           {"id_minus_map", to_json(r.id_minus_map)},
           {"smith", {{"U", to_json(r.smith.U)}, {"D", to_json(r.smith.D)}, {"V", to_json(r.smith.V)}}},
           {"computed", to_json(r.computed)},
           {"stated", to_json(r.stated)},
           {"K0_agrees", r.K0_agrees},
           {"K1_agrees", r.K1_agrees}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const GeneratorWord& w) {
  Json out = Json::array();
  for (const auto& t : w) {
    switch (t.kind) {
      case TokenKind::power: out.push_back({{"Z", t.exponent}}); break;
      case TokenKind::create: out.push_back("CREATE"); break;
      case TokenKind::annihilate: out.push_back("ANNIHILATE"); break;
    }
  }
  return out;
}

Json to_json(const WitnessReport& r) {
  Json out{{"k", r.k}, {"effective_k", r.effective_k}, {"pass", r.all_pass()}};
  out["relations"] = Json::array();
  for (const auto& rel : r.relations) {
    Json j{{"relation", rel.relation}, {"instances", rel.instances}, {"failures", rel.failures}};
    if (!rel.first_failure.empty()) j["first_failure"] = rel.first_failure;
    out["relations"].push_back(std::move(j));
  }
  if (!r.reductions.empty()) {
    out["reductions"] = Json::array();
    for (const auto& s : r.reductions)
      out["reductions"].push_back({{"prime", s.prime},
                                   {"k_before", s.k_before},
                                   {"k_after", s.k_after},
                                   {"a", s.a},
                                   {"verified", s.verified}});
  }
  if (!r.l_table.empty()) {
    out["l_table"] = Json::array();
    for (const auto& [l, p] : r.l_table) out["l_table"].push_back({{"l", l}, {"p", p}});
  }
  return out;
}

Json to_json(const RelationReport& r) {
  Json out{{"variant", to_string(r.variant)},
           {"window", {{"max_abs_numerator", r.window.max_abs_numerator}, {"max_exponent", r.window.max_exponent}}},
           {"violations", r.violations()},
           {"coverage", r.coverage()}};
  out["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"relation", c.relation}, {"instances", c.instances}, {"covered", c.covered}, {"violations", c.violations}};
    if (!c.first_violation.empty()) j["first_violation"] = c.first_violation;
    out["checks"].push_back(std::move(j));
  }
  return out;
}

Json to_json(const SolenoidPeriodicPoint& x) {
  Json coords = Json::array();
  for (int i = 0; i < x.k; ++i) coords.push_back(x.coordinate(i));
  return Json{{"m", x.m}, {"period", x.k}, {"modulus", x.modulus}, {"r", x.r}, {"coordinates", coords}};
}

Json to_json(const SolenoidRepReport& r) {
  auto phases = [](const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(format_rational(q));
    return out;
  };
  return Json{{"point", to_json(r.point)},
              {"f", to_string(r.f)},
              {"z_phase", r.z_phase},
              {"exact", r.exact},
              {"unitary_residual", r.unitary_residual},
              {"covariance_residual_sigma_inverse", r.residual_inverse},
              {"covariance_residual_sigma", r.residual_forward},
              {"rho", phases(r.rho)},
              {"u_rho_u_star", phases(r.conjugated)}};
}

Json to_json(const EntropyTable& t) {
  Json out{{"m", t.m}, {"n", t.n}, {"s", t.s}, {"growth_rate", t.growth_rate}, {"partial", t.partial}};
  if (!t.warning.empty()) out["warning"] = t.warning;
  out["rows"] = Json::array();
  for (const auto& row : t.rows)
    out["rows"].push_back({{"N", row.N},
                           {"span_dimension", row.dimension},
                           {"log_dim_over_N", row.log_dim_over_n},
                           {"slope", row.slope},
                           {"within_bound", row.within_bound}});
  return out;
}

Json to_json(const ConditionReport& r) {
  Json out{{"pass", r.all_pass()}, {"checks", Json::array()}};
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    if (c.witness) j["witness"] = format_rational(*c.witness);
    out["checks"].push_back(std::move(j));
  }
  return out;
}

Json to_json(const SquareReport& r) {
  return Json{{"grid", r.grid},
              {"residual", r.residual},
              {"residual_doubled", r.residual_doubled},
              {"adjoint_residual", r.adjoint_residual}};
}

}  // namespace omn
