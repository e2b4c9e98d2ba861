#include "omn/group_actions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "omn/errors.hpp"
#include "omn/rational.hpp"

namespace omn {

namespace {

std::int64_t action_order(const AlgebraParams& params) {
  const std::int64_t order = std::abs(static_cast<std::int64_t>(params.n()) - params.m());
  if (order <= 1)
    throw InvalidInput("the Z_|n-m| action needs |n-m| >= 2 (got m=" + std::to_string(params.m()) +
                       ", n=" + std::to_string(params.n()) + ")");
  return order;
}

/// x with a x = 1 mod modulus.
std::int64_t inverse_mod(std::int64_t a, std::int64_t modulus) {
  std::int64_t g = modulus, x = 0, r = floor_mod(a, modulus), y = 1;
  while (r != 0) {
    const std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  if (g != 1) throw Error("no modular inverse");
  return floor_mod(x, modulus);
}

Element s1_power(int k) { return Element(Monomial{Word(static_cast<std::size_t>(k), 1), 0, {}}); }

Element zpow(std::int64_t e) { return Element(Monomial::z(e)); }

RelationStatus named(std::string relation) {
  RelationStatus status;
  status.relation = std::move(relation);
  return status;
}

void check(RelationStatus& status, bool ok, const std::string& what) {
  ++status.instances;
  if (ok) return;
  if (status.failures == 0) status.first_failure = what;
  ++status.failures;
}

}  // namespace

std::int64_t beta_weight(const Monomial& mon, const AlgebraParams& params) {
  const std::int64_t order = action_order(params);
  validate(mon, params);
  std::int64_t w = mon.k;
  for (int letter : mon.mu) w += letter - 1;
  for (int letter : mon.nu) w -= letter - 1;
  return floor_mod(w, order);
}

Element sigma_apply(const Element& x, const AlgebraParams& params) {
  auto sigma_word = [&](const Word& w) {
    // S_i = z^{i-1} S_1 maps to z^{-(i-1)} S_1
    Element acc = Element::one();
    for (int letter : w) acc = mul(acc, mul(zpow(-(letter - 1)), Element(Monomial::s(1)), params), params);
    return acc;
  };
  Element out;
  for (const auto& [mon, c] : x.terms()) {
    const Element image =
        product({sigma_word(mon.mu), zpow(-mon.k), adjoint(sigma_word(mon.nu))}, params);
    out += c * image;
  }
  return out;
}

std::string to_string(const GeneratorWord& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    switch (w[i].kind) {
      case TokenKind::power: os << "Z(" << w[i].exponent << ")"; break;
      case TokenKind::create: os << "CREATE"; break;
      case TokenKind::annihilate: os << "ANNIHILATE"; break;
    }
  }
  os << "]";
  return os.str();
}

bool fixed_point_test(const Monomial& mon, const AlgebraParams& params) { return beta_weight(mon, params) == 0; }

GeneratorWord fixed_point_rewrite(const Monomial& mon, const AlgebraParams& params) {
  const std::int64_t order = action_order(params);
  if (beta_weight(mon, params) != 0)
    throw InvalidInput("not in fixed-point algebra: " + to_string(mon) + " has weight " +
                       std::to_string(beta_weight(mon, params)) + " mod " + std::to_string(order));
  const std::int64_t n = params.n(), m = params.m();
  const std::int64_t n_inv = inverse_mod(n, order);

  // gamma_i = (w_i - 1 - p_{i-1} m) + p_i n with p_i the least residue making it = 0 mod order
  auto exponents = [&](const Word& w, std::vector<std::int64_t>& out) {
    std::int64_t prev = 0;
    for (int letter : w) {
      const std::int64_t base = (letter - 1) - prev * m;
      const std::int64_t p = floor_mod(-base * n_inv, order);
      out.push_back(base + p * n);
      prev = p;
    }
    return prev;
  };
  std::vector<std::int64_t> gamma, delta;
  const std::int64_t p_last = exponents(mon.mu, gamma);
  const std::int64_t q_last = exponents(mon.nu, delta);

  GeneratorWord out;
  for (std::int64_t g : gamma) {
    out.push_back({TokenKind::power, g});
    out.push_back({TokenKind::create, 0});
  }
  out.push_back({TokenKind::power, -p_last * m + mon.k + q_last * m});
  for (auto it = delta.rbegin(); it != delta.rend(); ++it) {
    out.push_back({TokenKind::annihilate, 0});
    out.push_back({TokenKind::power, -*it});
  }
  return out;
}

Element expand(const GeneratorWord& w, const AlgebraParams& params) {
  Element acc = Element::one();
  for (const auto& t : w) {
    Monomial factor;
    switch (t.kind) {
      case TokenKind::power: factor = Monomial::z(t.exponent); break;
      case TokenKind::create: factor = Monomial::s(1); break;
      case TokenKind::annihilate: factor = Monomial::s_star(1); break;
    }
    acc = mul(acc, Element(factor), params);
  }
  return acc;
}

bool WitnessReport::all_pass() const {
  const bool reductions_ok =
      std::all_of(reductions.begin(), reductions.end(), [](const ReductionStep& s) { return s.verified; });
  return reductions_ok &&
         std::all_of(relations.begin(), relations.end(), [](const RelationStatus& r) { return r.pass(); });
}

namespace {

/// Checks the defining relations of O_(M, N) for generators w, T_1..T_N.
void check_cuntz_family(const Element& w, const std::vector<Element>& t, std::int64_t big_m,
                        const AlgebraParams& params, WitnessReport& report) {
  const std::size_t count = t.size();
  RelationStatus shift = named("w S~_i = S~_{i+1}");
  for (std::size_t i = 0; i + 1 < count; ++i)
    check(shift, is_zero(mul(w, t[i], params) - t[i + 1], params), "i=" + std::to_string(i + 1));
  report.relations.push_back(shift);

  Element w_power = Element::one();
  for (std::int64_t i = 0; i < big_m; ++i) w_power = mul(w_power, w, params);
  RelationStatus wrap = named("w S~_N = S~_1 w^M");
  check(wrap, is_zero(mul(w, t.back(), params) - mul(t.front(), w_power, params), params), "");
  report.relations.push_back(wrap);

  RelationStatus ortho = named("S~_i^* S~_j = delta_ij");
  std::vector<Element> adj;
  for (const auto& e : t) adj.push_back(adjoint(e));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const Element expected = i == j ? Element::one() : Element();
      check(ortho, is_zero(mul(adj[i], t[j], params) - expected, params),
            "i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1));
    }
  report.relations.push_back(ortho);

  RelationStatus unit = named("sum S~_i S~_i^* = 1");
  Element sum;
  for (std::size_t i = 0; i < count; ++i) sum += mul(t[i], adj[i], params);
  check(unit, is_zero(sum - Element::one(), params), "");
  report.relations.push_back(unit);
}

}  // namespace

WitnessReport subalgebra_witness_power(int k, const AlgebraParams& params, std::int64_t bound) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  std::int64_t count = 1, big_m = 1;
  for (int i = 0; i < k; ++i) {
    count *= params.n();
    big_m *= params.m();
    if (count > bound)
      throw BoundExceeded("n^k exceeds the configured bound " + std::to_string(bound) +
                          "; rerun with --bound >= " + std::to_string(ipow(params.n(), k)));
  }
  WitnessReport report;
  report.k = k;
  report.effective_k = k;
  std::vector<Element> t;
  for (std::int64_t j = 1; j <= count; ++j) t.push_back(mul(zpow(j - 1), s1_power(k), params));
  check_cuntz_family(zpow(1), t, big_m, params, report);
  return report;
}

WitnessReport subalgebra_witness_zk(int k, const AlgebraParams& params, std::int64_t bound) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (params.n() > bound)
    throw BoundExceeded("n exceeds the configured bound " + std::to_string(bound));
  WitnessReport report;
  report.k = k;
  const std::int64_t n = params.n(), m = params.m();
  std::int64_t current = k;
  while (std::gcd(current, n) > 1) {
    std::int64_t p = 2;
    const std::int64_t g = std::gcd(current, n);
    while (g % p != 0) ++p;
    ReductionStep step;
    step.prime = static_cast<int>(p);
    step.k_before = current;
    std::int64_t alpha = 0, beta = 0, p1 = current, p2 = n;
    while (p1 % p == 0) p1 /= p, ++alpha;
    while (p2 % p == 0) p2 /= p, ++beta;
    // z^{a n} lies in C*(z^k, S_1); S_1^* z^{a n} S_1 = z^{a m} and gcd(m, n) = 1 give z^a
    std::int64_t a;
    if (alpha > beta) a = ipow(p, static_cast<int>(alpha - beta)) * p1;
    else a = p1;
    step.a = a;
    step.k_after = a;
    const Element lhs = product({Element(Monomial::s_star(1)), zpow(a * n), Element(Monomial::s(1))}, params);
    const bool membership = (a * n) % current == 0 && current % a == 0;
    step.verified = membership && is_zero(lhs - zpow(a * m), params);
    report.reductions.push_back(step);
    if (a >= current) throw Error("gcd reduction failed to make progress");
    current = a;
  }
  report.effective_k = current;
  for (std::int64_t q = 1; q <= n; ++q) {
    const std::int64_t e = (q - 1) * current;
    report.l_table.emplace_back(floor_mod(e, n), floor_div(e, n));
  }
  std::vector<Element> t;
  for (std::int64_t q = 1; q <= n; ++q) t.push_back(mul(zpow((q - 1) * current), Element(Monomial::s(1)), params));
  check_cuntz_family(zpow(current), t, m, params, report);
  return report;
}

}  // namespace omn
