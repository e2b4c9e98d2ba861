#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omn/rational.hpp"

namespace omn {

/// A point of the solenoid S_m fixed by sigma^k, sigma(x)_i = x_{i+1}, stored
/// through its coordinates x_i = exp(2 pi i c_i / (m^k - 1)),
/// c_i = r m^{(k-1) i} mod (m^k - 1).
struct SolenoidPeriodicPoint {
  int m = 2;
  int k = 1;
  std::int64_t modulus = 1;  // m^k - 1
  std::int64_t r = 0;

  std::int64_t coordinate(std::int64_t i) const;
  /// x_i as a phase in [0, 1).
  Rational phase(std::int64_t i) const;
  /// The point sigma^j(x), same residue class data.
  SolenoidPeriodicPoint shifted(std::int64_t j) const;
};

/// Smallest l >= 1 with sigma^l(x) = x, i.e. r (m^l - 1) = 0 mod m^k - 1.
int exact_period(const SolenoidPeriodicPoint& x);

/// All points of exact period k, in increasing order of r.
std::vector<SolenoidPeriodicPoint> solenoid_periodic_points(int m, int k);

/// The same points grouped into sigma-orbits (each of size k).
std::vector<std::vector<SolenoidPeriodicPoint>> solenoid_orbits(int m, int k);

/// f = prod x_i^{a_i}, stored as (i, a_i) pairs with distinct i.
using CoordinateMonomial = std::vector<std::pair<int, std::int64_t>>;

/// Sorts, drops zero exponents, rejects negative or duplicate indices.
CoordinateMonomial normalize_coordinate_monomial(CoordinateMonomial f);

/// Parses "1", "x0", "x0^2 x3^-1".
CoordinateMonomial parse_coordinate_monomial(const std::string& text);
std::string to_string(const CoordinateMonomial& f);

/// f o sigma: x_i -> x_{i+1}.
CoordinateMonomial compose_sigma(const CoordinateMonomial& f);
/// f o sigma^{-1}: x_i -> x_{i-1} (i >= 1), x_0 -> x_0^m.
CoordinateMonomial compose_sigma_inverse(const CoordinateMonomial& f, int m);

/// f(x) as a phase in [0, 1).
Rational evaluate_phase(const CoordinateMonomial& f, const SolenoidPeriodicPoint& x);

/// Diagonal of rho_x(f) = diag(f(x), f(sigma x), ..., f(sigma^{k-1} x)) as phases.
std::vector<Rational> rho_diagonal(const CoordinateMonomial& f, const SolenoidPeriodicPoint& x);

struct SolenoidRepReport {
  SolenoidPeriodicPoint point;
  CoordinateMonomial f;
  bool exact = true;              // root-of-unity phase: all residuals are exact
  std::string z_phase;
  double unitary_residual = 0;    // max |u u^* - 1|, |u^* u - 1|
  double residual_inverse = 0;    // max |u rho(f) u^* - rho(f o sigma^{-1})|
  double residual_forward = 0;    // max |u rho(f) u^* - rho(f o sigma)|
  std::vector<Rational> rho;      // diagonal phases of rho_x(f)
  std::vector<Rational> conjugated;

  bool inverse_holds() const { return residual_inverse == 0; }
  bool forward_holds() const { return residual_forward == 0; }
};

/// u_{x,z} has 1 on the subdiagonal and z in the top-right corner.
SolenoidRepReport solenoid_rep_check(const SolenoidPeriodicPoint& x, const Rational& z_phase,
                                     const CoordinateMonomial& f);

/// Same check with z = exp(2 pi i z_phase) in double precision.
SolenoidRepReport solenoid_rep_check(const SolenoidPeriodicPoint& x, double z_phase,
                                     const CoordinateMonomial& f);

}  // namespace omn
