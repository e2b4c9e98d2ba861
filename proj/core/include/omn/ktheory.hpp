#pragma once

#include <string>
#include <utility>
#include <vector>

#include "omn/int_matrix.hpp"
#include "omn/rational.hpp"

namespace omn {

/// Z^free_rank + Z_{t_1} + ... + Z_{t_k} (t_1 | t_2 | ..., all > 1), plus
/// symbolic summands Z[1/d] (d > 1) that are not finitely generated.
struct FGAbelianGroup {
  struct Generator {
    std::vector<BigInt> coords;  // in the ambient basis
    BigInt order;                // 0 for infinite order
  };

  int free_rank = 0;
  std::vector<BigInt> torsion;
  std::vector<BigInt> localized;
  std::vector<Generator> generators;  // filled where a basis is meaningful

  bool is_trivial() const { return free_rank == 0 && torsion.empty() && localized.empty(); }

  /// Compares the isomorphism type (generators are ignored).
  bool same_type(const FGAbelianGroup& other) const {
    return free_rank == other.free_rank && torsion == other.torsion && localized == other.localized;
  }

  static FGAbelianGroup free(int rank);
  static FGAbelianGroup cyclic(const BigInt& order);
};

/// Isomorphism type of A + B in invariant-factor form.
FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

/// "Z + Z_2", "0", "Z[1/3]".
std::string to_string(const FGAbelianGroup& g);

struct CokerKer {
  FGAbelianGroup coker;
  FGAbelianGroup ker;
};

/// Cokernel and kernel of M: Z^cols -> Z^rows with generators (columns of
/// U^{-1} for the cokernel, columns of V for the kernel).
CokerKer coker_ker(const IntMatrix& m);

struct KGroups {
  FGAbelianGroup K0;
  FGAbelianGroup K1;
};

/// Six-term computation K0 = coker(1-n) + ker(1-m), K1 = coker(1-m) + ker(1-n).
KGroups six_term_kgroups(int m, int n);

/// x -> (1-c) x on Z[1/d].
struct LocalizedMap {
  int d = 1;
  int c = 0;
};

CokerKer localized_coker_ker(const LocalizedMap& map);

/// Pimsner-Voiculescu computation from the 1/n and 1/m actions on Z[1/n], Z[1/m].
KGroups pv_dual_action_kgroups(int m, int n);

enum class Parity { even, odd };

Parity parse_parity(const std::string& text);
std::string to_string(Parity p);

struct SymmetricFixedPointReport {
  Parity parity = Parity::odd;
  int n = 2;
  IntMatrix map;            // [Y]_0 on e0, e1, e2
  IntMatrix id_minus_map;   // I - [Y]_0
  SmithForm smith;
  KGroups computed;
  KGroups stated;           // the stated answer
  bool K0_agrees = false;
  bool K1_agrees = false;
  std::string note;
};

/// K-groups of the symmetry fixed-point algebra from the [Y]_0 data on
/// K_0(C(T) x Z_2) = Z^3 (K_1 = 0), compared against the stated groups.
SymmetricFixedPointReport symmetric_fixed_point_kgroups(Parity parity, int n);

}  // namespace omn
