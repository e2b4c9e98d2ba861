#include "omn/solenoid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include "omn/errors.hpp"

namespace omn {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return (a % mod) * (b % mod) % mod;
}

std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t mod) {
  std::int64_t result = 1 % mod, b = floor_mod(base, mod);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mulmod(result, b, mod);
    b = mulmod(b, b, mod);
  }
  return result;
}

std::int64_t solenoid_modulus(int m, int k) {
  if (m < 2) throw InvalidInput("solenoid needs m >= 2");
  if (k < 1) throw InvalidInput("period must be >= 1");
  if (k * std::log2(static_cast<double>(m)) > 31) throw BoundExceeded("m^k - 1 exceeds 2^31");
  return ipow(m, k) - 1;
}

Rational frac(Rational q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= fl;
  q.canonicalize();
  return q;
}

double frac(double q) { return q - std::floor(q); }

double chord(double phase) { return std::abs(2 * std::sin(std::numbers::pi * frac(phase))); }

/// A k x k matrix with exactly one nonzero per row: row i holds
/// exp(2 pi i phase[i]) in column col[i].
template <class Phase>
struct MonomialMatrix {
  std::vector<std::size_t> col;
  std::vector<Phase> phase;

  static MonomialMatrix diagonal(const std::vector<Phase>& d) {
    MonomialMatrix out;
    for (std::size_t i = 0; i < d.size(); ++i) {
      out.col.push_back(i);
      out.phase.push_back(d[i]);
    }
    return out;
  }

  MonomialMatrix operator*(const MonomialMatrix& b) const {
    MonomialMatrix out;
    for (std::size_t i = 0; i < col.size(); ++i) {
      out.col.push_back(b.col[col[i]]);
      out.phase.push_back(frac(phase[i] + b.phase[col[i]]));
    }
    return out;
  }

  MonomialMatrix adjoint() const {
    MonomialMatrix out;
    out.col.resize(col.size());
    out.phase.resize(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) {
      out.col[col[i]] = i;
      out.phase[col[i]] = frac(-phase[i]);
    }
    return out;
  }
};

/// Max entrywise modulus of a - b.
template <class Phase>
double residual(const MonomialMatrix<Phase>& a, const MonomialMatrix<Phase>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.col.size(); ++i) {
    if (a.col[i] != b.col[i]) {
      worst = std::max(worst, 1.0);
    } else if constexpr (std::is_same_v<Phase, Rational>) {
      const Rational d = frac(a.phase[i] - b.phase[i]);
      if (d != 0) worst = std::max(worst, chord(d.get_d()));
    } else {
      worst = std::max(worst, chord(a.phase[i] - b.phase[i]));
    }
  }
  return worst;
}

template <class Phase>
SolenoidRepReport rep_check(const SolenoidPeriodicPoint& x, const Phase& z_phase, const CoordinateMonomial& f_in) {
  const CoordinateMonomial f = normalize_coordinate_monomial(f_in);
  const std::size_t k = static_cast<std::size_t>(exact_period(x));
  SolenoidRepReport report;
  report.point = x;
  report.f = f;

  MonomialMatrix<Phase> u;
  // u e_j = e_{j+1}, u e_{k-1} = z e_0: row 0 carries z in column k-1
  for (std::size_t i = 0; i < k; ++i) {
    u.col.push_back(i == 0 ? k - 1 : i - 1);
    u.phase.push_back(i == 0 ? frac(z_phase) : Phase(0));
  }
  const auto as_phase = [](const std::vector<Rational>& d) {
    std::vector<Phase> out;
    for (const auto& q : d) {
      if constexpr (std::is_same_v<Phase, Rational>) out.push_back(q);
      else out.push_back(q.get_d());
    }
    return out;
  };
  report.rho = rho_diagonal(f, x);
  const auto rho = MonomialMatrix<Phase>::diagonal(as_phase(report.rho));
  const auto rho_inv = MonomialMatrix<Phase>::diagonal(as_phase(rho_diagonal(compose_sigma_inverse(f, x.m), x)));
  const auto rho_fwd = MonomialMatrix<Phase>::diagonal(as_phase(rho_diagonal(compose_sigma(f), x)));
  const auto identity = MonomialMatrix<Phase>::diagonal(std::vector<Phase>(k, Phase(0)));

  report.unitary_residual = std::max(residual(u * u.adjoint(), identity), residual(u.adjoint() * u, identity));
  const auto conj = u * rho * u.adjoint();
  report.residual_inverse = residual(conj, rho_inv);
  report.residual_forward = residual(conj, rho_fwd);
  for (std::size_t i = 0; i < k; ++i) report.conjugated.push_back(Rational(conj.phase[i]));
  return report;
}

}  // namespace

std::int64_t SolenoidPeriodicPoint::coordinate(std::int64_t i) const {
  if (i < 0) throw InvalidInput("negative solenoid coordinate index");
  return mulmod(r, powmod(m, static_cast<std::int64_t>(k - 1) * (i % k), modulus), modulus);
}

Rational SolenoidPeriodicPoint::phase(std::int64_t i) const {
  Rational q(coordinate(i), modulus);
  q.canonicalize();
  return q;
}

SolenoidPeriodicPoint SolenoidPeriodicPoint::shifted(std::int64_t j) const {
  SolenoidPeriodicPoint y = *this;
  y.r = coordinate(floor_mod(j, k));
  return y;
}

int exact_period(const SolenoidPeriodicPoint& x) {
  for (int l = 1; l <= x.k; ++l)
    if (mulmod(x.r, floor_mod(ipow(x.m, l) - 1, x.modulus), x.modulus) == 0) return l;
  throw Error("point is not sigma^k-periodic");
}

std::vector<SolenoidPeriodicPoint> solenoid_periodic_points(int m, int k) {
  const std::int64_t modulus = solenoid_modulus(m, k);
  std::vector<SolenoidPeriodicPoint> out;
  for (std::int64_t r = 0; r < modulus; ++r) {
    SolenoidPeriodicPoint x{m, k, modulus, r};
    if (exact_period(x) == k) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<SolenoidPeriodicPoint>> solenoid_orbits(int m, int k) {
  std::vector<std::vector<SolenoidPeriodicPoint>> orbits;
  std::set<std::int64_t> seen;
  for (const auto& x : solenoid_periodic_points(m, k)) {
    if (seen.count(x.r)) continue;
    std::vector<SolenoidPeriodicPoint> orbit;
    for (int j = 0; j < k; ++j) {
      orbit.push_back(x.shifted(j));
      seen.insert(orbit.back().r);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

CoordinateMonomial normalize_coordinate_monomial(CoordinateMonomial f) {
  std::sort(f.begin(), f.end());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].first < 0) throw InvalidInput("coordinate index must be >= 0");
    if (i > 0 && f[i].first == f[i - 1].first)
      throw InvalidInput("coordinate x" + std::to_string(f[i].first) + " appears twice");
  }
  std::erase_if(f, [](const auto& t) { return t.second == 0; });
  return f;
}

CoordinateMonomial parse_coordinate_monomial(const std::string& text) {
  static const std::regex token(R"(\s*x_?\{?(\d+)\}?(?:\^\{?(-?\d+)\}?)?\s*)");
  CoordinateMonomial f;
  std::string rest = text;
  if (rest.find_first_not_of(" \t") == std::string::npos || rest == "1") return f;
  std::smatch match;
  while (!rest.empty()) {
    if (!std::regex_search(rest, match, token, std::regex_constants::match_continuous))
      throw InvalidInput("cannot parse coordinate monomial near '" + rest + "'");
    f.emplace_back(std::stoi(match[1]), match[2].matched ? std::stoll(match[2]) : 1);
    rest = match.suffix();
  }
  return normalize_coordinate_monomial(f);
}

std::string to_string(const CoordinateMonomial& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    os << (i ? " " : "") << "x" << f[i].first;
    if (f[i].second != 1) os << "^" << f[i].second;
  }
  return os.str();
}

CoordinateMonomial compose_sigma(const CoordinateMonomial& f) {
  CoordinateMonomial out;
  for (const auto& [i, a] : normalize_coordinate_monomial(f)) out.emplace_back(i + 1, a);
  return out;
}

CoordinateMonomial compose_sigma_inverse(const CoordinateMonomial& f, int m) {
  std::map<int, std::int64_t> acc;
  for (const auto& [i, a] : normalize_coordinate_monomial(f)) {
    if (i == 0) acc[0] += a * m;
    else acc[i - 1] += a;
  }
  return normalize_coordinate_monomial({acc.begin(), acc.end()});
}

Rational evaluate_phase(const CoordinateMonomial& f, const SolenoidPeriodicPoint& x) {
  std::int64_t total = 0;
  for (const auto& [i, a] : normalize_coordinate_monomial(f))
    total = floor_mod(total + mulmod(floor_mod(a, x.modulus), x.coordinate(i), x.modulus), x.modulus);
  Rational q(total, x.modulus);
  q.canonicalize();
  return frac(q);
}

std::vector<Rational> rho_diagonal(const CoordinateMonomial& f, const SolenoidPeriodicPoint& x) {
  std::vector<Rational> out;
  const int k = exact_period(x);
  for (int j = 0; j < k; ++j) out.push_back(evaluate_phase(f, x.shifted(j)));
  return out;
}

SolenoidRepReport solenoid_rep_check(const SolenoidPeriodicPoint& x, const Rational& z_phase,
                                     const CoordinateMonomial& f) {
  SolenoidRepReport r = rep_check<Rational>(x, z_phase, f);
  r.exact = true;
  r.z_phase = pretty_rational(frac(z_phase));
  return r;
}

SolenoidRepReport solenoid_rep_check(const SolenoidPeriodicPoint& x, double z_phase, const CoordinateMonomial& f) {
  SolenoidRepReport r = rep_check<double>(x, z_phase, f);
  r.exact = false;
  std::ostringstream os;
  os.precision(17);
  os << z_phase;
  r.z_phase = os.str();
  return r;
}

}  // namespace omn
