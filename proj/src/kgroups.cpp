#include "qcuntz/core/kgroups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace qcuntz {

namespace {

IntMat identity(size_t k) {
  IntMat I(k, std::vector<long long>(k, 0));
  for (size_t i = 0; i < k; ++i) I[i][i] = 1;
  return I;
}

void row_swap(IntMat& A, size_t i, size_t j) { std::swap(A[i], A[j]); }
void col_swap(IntMat& A, size_t i, size_t j) {
  for (auto& row : A) std::swap(row[i], row[j]);
}
// row i -= f * row j
void row_axpy(IntMat& A, size_t i, size_t j, long long f) {
  for (size_t c = 0; c < A[i].size(); ++c) A[i][c] -= f * A[j][c];
}
void col_axpy(IntMat& A, size_t i, size_t j, long long f) {
  for (auto& row : A) row[i] -= f * row[j];
}
void row_negate(IntMat& A, size_t i) {
  for (auto& v : A[i]) v = -v;
}

}  // namespace

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  size_t r = A.size(), k = B.size(), c = B.empty() ? 0 : B[0].size();
  IntMat out(r, std::vector<long long>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) out[i][j] += A[i][t] * B[t][j];
    }
  return out;
}

long long det(const IntMat& A) {
  // Fraction-free Gaussian elimination (Bareiss).
  size_t k = A.size();
  if (k == 0) return 1;
  IntMat M = A;
  long long prev = 1, sign = 1;
  for (size_t p = 0; p < k; ++p) {
    size_t pivot = p;
    while (pivot < k && M[pivot][p] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != p) {
      row_swap(M, pivot, p);
      sign = -sign;
    }
    for (size_t i = p + 1; i < k; ++i) {
      for (size_t j = p + 1; j < k; ++j)
        M[i][j] = (M[i][j] * M[p][p] - M[i][p] * M[p][j]) / prev;
      M[i][p] = 0;
    }
    prev = M[p][p];
  }
  return sign * M[k - 1][k - 1];
}

SnfResult smith_normal_form(const IntMat& M0) {
  SnfResult res;
  res.D = M0;
  size_t rows = M0.size(), cols = rows ? M0[0].size() : 0;
  res.U = identity(rows);
  res.V = identity(cols);
  IntMat& D = res.D;

  size_t t = std::min(rows, cols);
  for (size_t p = 0; p < t; ++p) {
    bool exhausted = false;
    for (;;) {
      // Move the smallest-magnitude nonzero entry to the pivot.
      size_t bi = rows, bj = cols;
      for (size_t i = p; i < rows; ++i)
        for (size_t j = p; j < cols; ++j)
          if (D[i][j] != 0 &&
              (bi == rows || std::llabs(D[i][j]) < std::llabs(D[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        exhausted = true;
        break;
      }
      if (bi != p) {
        row_swap(D, bi, p);
        row_swap(res.U, bi, p);
      }
      if (bj != p) {
        col_swap(D, bj, p);
        col_swap(res.V, bj, p);
      }
      bool clean = true;
      for (size_t i = p + 1; i < rows; ++i) {
        if (D[i][p] == 0) continue;
        long long f = D[i][p] / D[p][p];
        row_axpy(D, i, p, f);
        row_axpy(res.U, i, p, f);
        if (D[i][p] != 0) clean = false;
      }
      for (size_t j = p + 1; j < cols; ++j) {
        if (D[p][j] == 0) continue;
        long long f = D[p][j] / D[p][p];
        col_axpy(D, j, p, f);
        col_axpy(res.V, j, p, f);
        if (D[p][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility fix-up: fold any entry the pivot does not divide.
      bool fixed = true;
      for (size_t i = p + 1; i < rows && fixed; ++i)
        for (size_t j = p + 1; j < cols && fixed; ++j)
          if (D[i][j] % D[p][p] != 0) {
            row_axpy(D, p, i, -1);
            row_axpy(res.U, p, i, -1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (exhausted) break;
    if (D[p][p] < 0) {
      row_negate(D, p);
      row_negate(res.U, p);
    }
  }
  return res;
}

FgAbGroup FgAbGroup::cyclic(long long d) {
  if (d < 0) d = -d;
  if (d == 0) return free(1);
  if (d == 1) return zero();
  return {0, {d}};
}

long long FgAbGroup::torsion_order() const {
  long long o = 1;
  for (long long d : invariants) o *= d;
  return o;
}

std::vector<long long> FgAbGroup::cyclic_orders() const {
  std::vector<long long> out(invariants);
  for (long long i = 0; i < free_rank; ++i) out.push_back(0);
  return out;
}

std::string FgAbGroup::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += " + ";
    out += piece;
  };
  for (long long d : invariants) append("Z/" + std::to_string(d) + "Z");
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  return out;
}

FgAbGroup group_from_cyclic_orders(const std::vector<long long>& orders) {
  FgAbGroup g;
  std::vector<long long> torsion;
  for (long long d : orders) {
    long long a = std::llabs(d);
    if (a == 0)
      ++g.free_rank;
    else if (a > 1)
      torsion.push_back(a);
  }
  if (torsion.empty()) return g;
  // Canonicalize into a divisor chain via the SNF of the diagonal matrix.
  IntMat M(torsion.size(), std::vector<long long>(torsion.size(), 0));
  for (size_t i = 0; i < torsion.size(); ++i) M[i][i] = torsion[i];
  SnfResult snf = smith_normal_form(M);
  for (size_t i = 0; i < torsion.size(); ++i)
    if (snf.D[i][i] > 1) g.invariants.push_back(snf.D[i][i]);
  std::sort(g.invariants.begin(), g.invariants.end());
  return g;
}

FgAbGroup direct_sum(const FgAbGroup& A, const FgAbGroup& B) {
  std::vector<long long> orders = A.cyclic_orders();
  auto more = B.cyclic_orders();
  orders.insert(orders.end(), more.begin(), more.end());
  return group_from_cyclic_orders(orders);
}

FgAbGroup ab_functor(AbOp op, const FgAbGroup& A, const FgAbGroup& B) {
  std::vector<long long> out;
  for (long long a : A.cyclic_orders()) {
    for (long long b : B.cyclic_orders()) {
      long long piece;  // cyclic order of the contribution (0 = Z, 1 = trivial)
      if (op == AbOp::Tensor) {
        if (a == 0 && b == 0)
          piece = 0;
        else if (a == 0)
          piece = b;
        else if (b == 0)
          piece = a;
        else
          piece = std::gcd(a, b);
      } else if (op == AbOp::Tor) {
        piece = (a == 0 || b == 0) ? 1 : std::gcd(a, b);
      } else if (op == AbOp::Hom) {
        if (a == 0)
          piece = b;  // Hom(Z, C) = C
        else if (b == 0)
          piece = 1;  // Hom(Z/a, Z) = 0
        else
          piece = std::gcd(a, b);
      } else {  // Ext
        if (a == 0)
          piece = 1;  // Ext(Z, -) = 0
        else if (b == 0)
          piece = a;  // Ext(Z/a, Z) = Z/a
        else
          piece = std::gcd(a, b);
      }
      if (piece != 1) out.push_back(piece);
    }
  }
  return group_from_cyclic_orders(out);
}

FgAbGroup coker_mult(long long k, long long a) {
  // coker(Z ->k Z/a) presented by the 1 x 2 matrix [k a].
  SnfResult snf = smith_normal_form({{k, a}});
  return FgAbGroup::cyclic(snf.D[0][0]);
}

FgAbGroup ker_mult(long long k, long long a) {
  if (a == 0) return k == 0 ? FgAbGroup::free(1) : FgAbGroup::zero();
  // {x mod a : kx = 0 mod a} is cyclic of order gcd(k mod a, a) ... computed
  // honestly: solutions form (a/g)Z / aZ with g = gcd(k, a).
  long long g = std::gcd(k, a);
  return FgAbGroup::cyclic(g);
}

KTable k_table(int n, int m) {
  if (n < 2 || m < 2) throw DomainError("k_table requires n, m >= 2");
  KTable t;
  t.n = n;
  t.m = m;
  t.d = std::gcd<long long>(n - 1, m - 1);

  t.k0_On = FgAbGroup::cyclic(n - 1);
  t.k1_On = FgAbGroup::zero();
  t.k0_Om = FgAbGroup::cyclic(m - 1);
  t.k1_Om = FgAbGroup::zero();

  // Six-term route: 0 -> K1 -> K0(O_n) ->(m-1) K0(O_n) -> K0 -> 0.
  t.k0_OnOm = coker_mult(m - 1, n - 1);
  t.k1_OnOm = ker_mult(m - 1, n - 1);

  // Kunneth route; the Tor term sits in degree 1 because K1 of each factor
  // vanishes, so both extensions are trivial.
  t.k0_OnOm_kunneth = ab_functor(AbOp::Tensor, t.k0_On, t.k0_Om);
  t.k1_OnOm_kunneth = ab_functor(AbOp::Tor, t.k0_On, t.k0_Om);
  t.routes_agree =
      t.k0_OnOm == t.k0_OnOm_kunneth && t.k1_OnOm == t.k1_OnOm_kunneth;

  t.k0_E = FgAbGroup::free(1);
  t.k1_E = FgAbGroup::zero();

  t.k0_Mq = direct_sum(FgAbGroup::cyclic(t.d), FgAbGroup::free(1));
  t.k1_Mq = FgAbGroup::zero();

  // 0 -> Z/d + Z/d -> KK_1 -> Z/d -> 0 forces |KK_1| = d^3.
  t.kk1_order = t.d * t.d * t.d;
  t.ext_trivial = (t.d == 1);
  return t;
}

}  // namespace qcuntz
