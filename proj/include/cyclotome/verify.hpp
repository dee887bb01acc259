#ifndef CYCLOTOME_VERIFY_HPP
#define CYCLOTOME_VERIFY_HPP

#include <optional>

#include "cyclotome/constructions.hpp"

namespace cyclotome {

struct SpectrumValue {
  CycIntValue value;
  u64 a_count = 0;       // number of a in Z_N attaining it
  u64 multiplicity = 0;  // a_count * (q-1)/N
};

// Exact restricted eigenvalues {psi(gamma^a D) : a in Z_N} with multiplicities.
std::vector<SpectrumValue> restricted_spectrum(const PeriodTable& pt, const ConnectionSet& D);

struct SrgCertificate {
  u64 v = 0, k = 0;
  i64 lambda = 0, mu = 0;
  bool rational = true;
  i64 r = 0, s = 0;  // valid when rational
  std::string r_str, s_str;
  u64 m_r = 0, m_s = 0;
  bool connected = true;
  std::string method;  // "spectral" or "direct"
};

// Spectral SRG decision: exactly two restricted values, both rational or a
// conjugate quadratic pair. Throws NotSymmetric / NotTwoValued / NotSrg.
SrgCertificate verify_srg(const PeriodTable& pt, const ConnectionSet& D);

// Brute-force oracle (v <= 10^4): common-neighbor counts by direct counting,
// independent of all character machinery.
SrgCertificate verify_srg_direct(const FieldTable& field, const ConnectionSet& D);

struct SkewVerdict {
  u64 v = 0, k = 0;
  i64 census_value = 0;  // (v-3)/4
  bool census_ran = false;
  std::string value_plus, value_minus;  // the two psi-values
};

// Skew Hadamard difference set check: structural split F_q = D u -D u {0},
// difference census (when |D|^2 <= 10^8), and exact spectral comparison
// against (-1 +- sqrt(-v))/2. Throws SkewSplitFails / DifferenceCensusFails /
// SpectrumMismatch.
SkewVerdict verify_skew_hds(const FieldTable& field, const PeriodTable& pt,
                            const ConnectionSet& D);

struct PaleyVerdict {
  u64 v = 0, k = 0;
  std::string value_plus, value_minus;
};

// Paley-type partial difference set check: D = -D, |D| = (v-1)/2, and every
// restricted value equals (-1 +- sqrt(v))/2 exactly. Throws SymmetryFails /
// SpectrumMismatch.
PaleyVerdict verify_paley_pds(const FieldTable& field, const PeriodTable& pt,
                              const ConnectionSet& D);

struct SchemeReport {
  u64 classes = 0;
  u64 valency = 0;
  bool valencies_equal = false;
  u64 multiplicity = 0;
  bool pseudocyclic = false;
  bool intersection_checked = false;  // direct p_ij^k check ran (v <= 10^4)
  std::vector<std::vector<std::vector<i64>>> pnum;  // [k][i][j], 0 = identity
  std::vector<SrgCertificate> certificates;
  std::optional<std::pair<u64, u64>> witness;  // fused pair with > 2 values
  u64 witness_value_count = 0;
};

// Association scheme verification: partition + symmetry, per-relation SRG
// certificates, intersection-number well-definedness at small v, pseudocyclic
// test, and a non-amorphy witness search over fused pairs.
SchemeReport verify_scheme(const FieldTable& field, const PeriodTable& pt,
                           const std::vector<ConnectionSet>& relations);

// Human-readable exact value: decimal when rational, "(-1+sqrt(-243))/2"
// when it matches the quadratic shapes used here, coefficient vector
// otherwise.
std::string value_string(const CycIntValue& x, u64 p, u64 f);

}  // namespace cyclotome

#endif
