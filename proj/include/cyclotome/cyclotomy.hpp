#ifndef CYCLOTOME_CYCLOTOMY_HPP
#define CYCLOTOME_CYCLOTOMY_HPP

#include <complex>
#include <string>
#include <vector>

#include "cyclotome/gf.hpp"

namespace cyclotome {

// Exact value in Z[zeta_p] as a length-p coefficient vector, canonicalized so
// the minimum coefficient is 0 (using 1 + zeta + ... + zeta^(p-1) = 0).
struct CycIntValue {
  std::vector<i64> c;

  CycIntValue() = default;
  explicit CycIntValue(u64 p) : c(p, 0) {}
  static CycIntValue rational(u64 p, i64 v);

  void canon();
  bool is_rational() const;
  i64 rational_value() const;  // requires is_rational()
  CycIntValue& operator+=(const CycIntValue& o);
  CycIntValue scaled(i64 k) const;
  bool operator==(const CycIntValue& o) const { return c == o.c; }
  bool operator<(const CycIntValue& o) const { return c < o.c; }
  std::complex<double> numeric() const;
  std::string str() const;  // "17" or coefficient form "[0,3,1]"
};

// Product in Z[zeta_p] (cyclic convolution of coefficient vectors).
CycIntValue cyc_mul(const CycIntValue& a, const CycIntValue& b);

// counts[j][t] = #{x in C_j : Tr(x) = t}, where C_j is the j-th cyclotomic
// class of order N. Carries every psi-sum over unions of classes exactly.
struct PeriodTable {
  u64 p = 0;
  int f = 0;
  u64 q = 0;
  u64 N = 0;
  std::vector<int> modulus;
  std::vector<std::vector<i64>> counts;

  u64 class_size() const { return (q - 1) / N; }
  CycIntValue eta(u64 j) const;  // Gauss period as exact value
  std::complex<double> eta_numeric(u64 j) const;
};

// Throws SetupMismatch unless N divides q-1.
PeriodTable build_period_table(const FieldTable& field, u64 N, int threads = 1);

// psi(gamma^a D) for D = union of classes C_i, i in I.
CycIntValue char_sum(const PeriodTable& pt, const std::vector<u64>& I, u64 a);

// G(chi^k) for chi(gamma) = zeta_N, evaluated in double complex arithmetic.
std::complex<double> gauss_sum_numeric(const PeriodTable& pt, u64 k);

enum class ParamKind { TwoPrimes, TwoP1m };

// Arithmetic data governing the index-2 closed forms: N = p1^m p2^n
// (TwoPrimes) or 2 p1^m (TwoP1m), f = ord_N(p) = phi(N)/2, h the class
// number of Q(sqrt(-D)) with D = p1 p2 or p1, and 4 p^h = b^2 + D c^2.
struct IndexTwoParams {
  ParamKind kind = ParamKind::TwoPrimes;
  u64 p = 0, p1 = 0, p2 = 0;
  u64 m = 0, n = 0;
  u64 N = 0, f = 0, h = 0;
  i64 b = 0, c = 0;
};

// Derive N, f, h, b, c from the raw inputs; throws ConditionViolation if the
// index-2 hypothesis ord_N(p) = phi(N)/2 fails, and propagates norm-equation
// errors.
IndexTwoParams make_params_A(u64 p, u64 p1, u64 p2, u64 m, u64 n);
IndexTwoParams make_params_B(u64 p, u64 p1, u64 m);

// Exact closed-form value: sign * p^E * ((X + Y sqrt(-D))/2) * sqrt(p*)^spow,
// optionally conjugated, where p* = (-1)^((p-1)/2) p.
struct GaussPrediction {
  int sign = 1;
  u64 p = 0;
  u64 E = 0;
  i128 X = 2, Y = 0;
  u64 D = 1;
  bool sqrt_pstar = false;
  bool conjugated = false;
  std::string case_label;

  std::complex<double> numeric() const;
  i128 norm() const;  // |value|^2, exact
};

// Theorem-style clause predictors. (s,t) capped at (m,n): s=m selects the
// -p^(f/2) clause, t=n (s<m) the +p^(f/2) clause, otherwise the
// quadratic-integer power clause. csign multiplies c (both ideal choices
// are admissible; see compare_gauss).
GaussPrediction predict_gauss_A(const IndexTwoParams& params, u64 s, u64 t, int csign = 1);
GaussPrediction predict_gauss_B(const IndexTwoParams& params, u64 k_for_clause, int csign = 1);

// Full prediction for G(chi^k), including the reduction of k to a clause
// exponent and the conjugation adjustment for units outside <p>.
GaussPrediction predict_gauss(const IndexTwoParams& params, u64 k, int csign = 1);

struct GaussExponentResult {
  u64 k = 0;
  std::string case_label;
  std::complex<double> direct;
  std::complex<double> predicted;
  double deviation = 0.0;
};

struct GaussCompareReport {
  int csign = 0;  // the globally consistent sign of c
  double tolerance = 0.0;
  double max_deviation = 0.0;
  double max_modulus_deviation = 0.0;  // | |G|^2 - q | over nontrivial chi
  std::vector<GaussExponentResult> rows;
};

// Cross-check every nontrivial exponent against the closed forms with both
// signs of c; succeeds iff one sign matches all exponents within
// tol = 1e-6 * sqrt(q). Throws Mismatch otherwise.
GaussCompareReport compare_gauss(const PeriodTable& pt, const IndexTwoParams& params);

}  // namespace cyclotome

#endif
