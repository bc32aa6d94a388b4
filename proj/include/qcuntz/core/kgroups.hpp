#pragma once

#include <string>
#include <vector>

#include "qcuntz/core/errors.hpp"

namespace qcuntz {

using IntMat = std::vector<std::vector<long long>>;

struct SnfResult {
  IntMat U, D, V;  // U * M * V = D, with U and V unimodular
};

/// Smith normal form over the integers with unimodular transforms tracked.
SnfResult smith_normal_form(const IntMat& M);

IntMat mat_mul(const IntMat& A, const IntMat& B);
long long det(const IntMat& A);

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
struct FgAbGroup {
  long long free_rank = 0;
  std::vector<long long> invariants;

  bool operator==(const FgAbGroup&) const = default;

  static FgAbGroup zero() { return {}; }
  static FgAbGroup free(long long rank) { return {rank, {}}; }
  static FgAbGroup cyclic(long long d);  // Z/dZ; d = 0 means Z, d = 1 means 0

  bool is_zero() const { return free_rank == 0 && invariants.empty(); }
  long long torsion_order() const;
  std::string str() const;

  /// All cyclic pieces: 0 stands for a Z summand.
  std::vector<long long> cyclic_orders() const;
};

/// Canonical group from an unordered list of cyclic orders (0 = Z summand).
FgAbGroup group_from_cyclic_orders(const std::vector<long long>& orders);

FgAbGroup direct_sum(const FgAbGroup& A, const FgAbGroup& B);

enum class AbOp { Tensor, Tor, Hom, Ext };

/// Standard bifunctors on finitely generated abelian groups, extended
/// additively from the cyclic cases.
FgAbGroup ab_functor(AbOp op, const FgAbGroup& A, const FgAbGroup& B);

/// Cokernel of multiplication by k on Z/aZ (a = 0 means Z), via SNF of the
/// presentation matrix.
FgAbGroup coker_mult(long long k, long long a);
/// Kernel of multiplication by k on Z/aZ.
FgAbGroup ker_mult(long long k, long long a);

struct KTable {
  int n = 0, m = 0;
  long long d = 1;
  FgAbGroup k0_On, k1_On, k0_Om, k1_Om;
  FgAbGroup k0_OnOm, k1_OnOm;              // via the six-term route
  FgAbGroup k0_OnOm_kunneth, k1_OnOm_kunneth;
  FgAbGroup k0_E, k1_E;                    // Toeplitz-level twisted product
  FgAbGroup k0_Mq, k1_Mq;
  long long kk1_order = 1;                 // forced by 0 -> Z/d + Z/d -> KK_1 -> Z/d -> 0
  bool ext_trivial = false;                // known-zero obstruction group when d = 1
  bool routes_agree = false;
};

/// K-group bookkeeping for the twisted tensor product, computed both via the
/// six-term multiplication-by-(m-1) sequence and via the Kunneth formula.
/// Requires n, m >= 2.
KTable k_table(int n, int m);

}  // namespace qcuntz
