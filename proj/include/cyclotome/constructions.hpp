#ifndef CYCLOTOME_CONSTRUCTIONS_HPP
#define CYCLOTOME_CONSTRUCTIONS_HPP

#include "cyclotome/cyclotomy.hpp"

namespace cyclotome {

struct Condition {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ConditionReport {
  std::vector<Condition> items;
  bool all() const {
    for (const auto& c : items)
      if (!c.holds) return false;
    return true;
  }
};

// Hypothesis checks, pure integer arithmetic (no field materialization):
// suitable for instances whose q is astronomically large.
ConditionReport check_conditions_A(u64 p, u64 p1, u64 p2, u64 m, u64 n);
ConditionReport check_conditions_B(u64 p, u64 p1, u64 m);

// Index set I in Z_N plus the induced union of cyclotomic classes.
struct ConnectionSet {
  u64 N = 0;
  std::vector<u64> I;            // sorted
  std::vector<uint8_t> member;   // size q; member[x] iff log(x) mod N in I
  u64 size = 0;                  // |D| = |I| * (q-1)/N
};

ConnectionSet build_connection_set(const FieldTable& field, u64 N, std::vector<u64> I);

std::vector<u64> index_set_A(const IndexTwoParams& params);
ConnectionSet build_D_A(const FieldTable& field, const IndexTwoParams& params);

// coset 0 is the index set read off the stated recipe; coset 1 is its
// negation in Z_N, the other gamma-labeling. Exactly one carries the
// predicted two-valued spectrum; the caller selects empirically.
std::vector<u64> index_set_B(const IndexTwoParams& params, int coset);
ConnectionSet build_D_B(const FieldTable& field, const IndexTwoParams& params, int coset);

struct SrgParams {
  i128 v = 0, k = 0, lambda = 0, mu = 0, r = 0, s = 0;
};

// Exact r, s, k, lambda, mu for the two-prime construction (b = +-1 branch).
SrgParams predicted_spectrum_A(const IndexTwoParams& params);

struct SpectrumCase {
  u64 a = 0;
  u64 i_a = 0, j_a = 0;
  int delta_i = 0, delta_j = 0;
  std::string case_label;  // "(i)".."(iv)"
  i64 predicted = 0;       // exact psi(gamma^a D)
};

// Per-a case analysis of the two-prime construction; csign fixes the global
// sign of c (from compare_gauss).
SpectrumCase case_analysis_A(const IndexTwoParams& params, u64 a, int csign);

// Predicted psi-values for the second construction, (-1 +- sqrt(p*^f))/2,
// exposed through the exact quantity 2x+1 = +-sqrt(p*^f) in Z[zeta_p].
struct PredictedPairB {
  CycIntValue tplus, tminus;  // +sqrt(p*^f) and -sqrt(p*^f)
  std::string str_plus, str_minus;
  bool paley = false;  // p = 1 (mod 4)
};
PredictedPairB predicted_values_B(u64 p, u64 f);

CycIntValue two_x_plus_one(const CycIntValue& x);

// Relations D_0 .. D_{p1 p2 - 1} partitioning F_q^*.
std::vector<ConnectionSet> build_scheme_relations(const FieldTable& field,
                                                  const IndexTwoParams& params);

struct ScanRowA {
  u64 p = 0, p1 = 0, p2 = 0, h = 0;
  i64 b = 0;
};
struct ScanRowB {
  u64 p = 0, p1 = 0, h = 0;
  i64 b = 0;
};

// Enumerate parameter seeds by increasing p^(h/2) (resp. p^h); bound caps
// max(p1, p2) (resp. p1). Rows sorted by (p1, p2, p).
std::vector<ScanRowA> scan_A(u64 bound);
std::vector<ScanRowB> scan_B(u64 bound);

}  // namespace cyclotome

#endif
