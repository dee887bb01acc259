#include "cyclotome/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cyclotome {

namespace {

u64 field_add(const FieldTable& f, u64 x, u64 y) { return f.sub(x, f.neg(y)); }

bool index_set_symmetric(const PeriodTable& pt, const ConnectionSet& D) {
  if (pt.p == 2) return true;
  u64 half = ((pt.q - 1) / 2) % pt.N;
  for (u64 i : D.I)
    if (!std::binary_search(D.I.begin(), D.I.end(), (i + half) % pt.N)) return false;
  return true;
}

i64 isqrt_exact(i128 n) {
  if (n < 0) return -1;
  i64 r = (i64)std::sqrt((double)n);
  while ((i128)r * r > n) --r;
  while ((i128)(r + 1) * (r + 1) <= n) ++r;
  return (i128)r * r == n ? r : -1;
}

void check_srg_identities(const SrgCertificate& c) {
  i128 v = c.v, k = c.k, l = c.lambda, mu = c.mu;
  if (k * (k - l - 1) != (v - k - 1) * mu)
    throw Error(Errc::NotSrg, "counting identity k(k-l-1) = (v-k-1)mu fails");
  if (c.m_r + c.m_s != c.v - 1)
    throw Error(Errc::NotSrg, "multiplicities do not sum to v-1");
  if (c.rational) {
    i128 tr = k + (i128)c.m_r * c.r + (i128)c.m_s * c.s;
    if (tr != 0) throw Error(Errc::NotSrg, "trace condition fails");
  }
}

}  // namespace

std::vector<SpectrumValue> restricted_spectrum(const PeriodTable& pt, const ConnectionSet& D) {
  if (D.N != pt.N) throw Error(Errc::SetupMismatch, "connection set built for different N");
  std::map<CycIntValue, u64> seen;
  for (u64 a = 0; a < pt.N; ++a) seen[char_sum(pt, D.I, a)]++;
  std::vector<SpectrumValue> out;
  for (auto& [val, cnt] : seen) out.push_back({val, cnt, cnt * pt.class_size()});
  return out;
}

std::string value_string(const CycIntValue& x, u64 p, u64 f) {
  if (x.is_rational()) return std::to_string(x.rational_value());
  if (p > 2 && f % 2 == 1) {
    try {
      PredictedPairB pv = predicted_values_B(p, f);
      CycIntValue t = two_x_plus_one(x);
      if (t == pv.tplus) return pv.str_plus;
      if (t == pv.tminus) return pv.str_minus;
    } catch (const Error&) {
    }
  }
  return x.str();
}

SrgCertificate verify_srg(const PeriodTable& pt, const ConnectionSet& D) {
  if (!index_set_symmetric(pt, D)) throw Error(Errc::NotSymmetric, "D != -D");
  auto spec = restricted_spectrum(pt, D);
  if (spec.size() != 2) {
    std::string vals;
    for (auto& s : spec) vals += (vals.empty() ? "" : ", ") + s.value.str();
    throw Error(Errc::NotTwoValued, "restricted spectrum has " + std::to_string(spec.size()) +
                                        " distinct values: " + vals);
  }
  SrgCertificate cert;
  cert.method = "spectral";
  cert.v = pt.q;
  cert.k = D.size;
  const CycIntValue &x1 = spec[0].value, &x2 = spec[1].value;
  if (x1.is_rational() && x2.is_rational()) {
    cert.rational = true;
    i64 v1 = x1.rational_value(), v2 = x2.rational_value();
    const SpectrumValue& big = v1 > v2 ? spec[0] : spec[1];
    const SpectrumValue& small = v1 > v2 ? spec[1] : spec[0];
    cert.r = std::max(v1, v2);
    cert.s = std::min(v1, v2);
    cert.m_r = big.multiplicity;
    cert.m_s = small.multiplicity;
    cert.mu = (i64)((i128)cert.k + (i128)cert.r * cert.s);
    cert.lambda = cert.mu + cert.r + cert.s;
    cert.connected = cert.r != (i64)cert.k;
    cert.r_str = std::to_string(cert.r);
    cert.s_str = std::to_string(cert.s);
  } else {
    // Quadratic conjugate pair (conference case): x1 + x2 and x1 x2 rational
    // forces {x1, x2} to be the roots of an integer quadratic; complex
    // conjugacy is too strong since the pair is real when p = 1 (mod 4).
    CycIntValue sum = x1;
    sum += x2;
    if (!sum.is_rational() || sum.rational_value() != -1)
      throw Error(Errc::NotSrg, "irrational values do not sum to -1");
    CycIntValue prod = cyc_mul(x1, x2);
    if (!prod.is_rational()) throw Error(Errc::NotSrg, "product of conjugate pair not rational");
    i64 rs = prod.rational_value();
    cert.rational = false;
    cert.m_r = cert.m_s = (cert.v - 1) / 2;
    if (spec[0].multiplicity != cert.m_r || spec[1].multiplicity != cert.m_s)
      throw Error(Errc::NotSrg, "conference multiplicities are not (v-1)/2");
    if (cert.k != (cert.v - 1) / 2)
      throw Error(Errc::NotSrg, "conference valency is not (v-1)/2");
    cert.mu = (i64)((i128)cert.k + rs);
    cert.lambda = cert.mu - 1;
    cert.connected = true;
    // r is the branch with the larger real part (ties: positive imaginary).
    auto z1 = x1.numeric(), z2 = x2.numeric();
    bool first_is_r = z1.real() != z2.real() ? z1.real() > z2.real() : z1.imag() > z2.imag();
    cert.r_str = value_string(first_is_r ? x1 : x2, pt.p, (u64)pt.f);
    cert.s_str = value_string(first_is_r ? x2 : x1, pt.p, (u64)pt.f);
  }
  check_srg_identities(cert);
  return cert;
}

SrgCertificate verify_srg_direct(const FieldTable& field, const ConnectionSet& D) {
  u64 q = field.q();
  if (q > 10000) throw Error(Errc::SizeExceeded, "direct check limited to v <= 10^4");
  for (u64 x = 1; x < q; ++x)
    if (D.member[x] != D.member[field.neg(x)]) throw Error(Errc::NotSymmetric, "D != -D");
  if (D.member[0]) throw Error(Errc::NotSrg, "0 in D");
  std::vector<u64> dl;
  for (u64 x = 1; x < q; ++x)
    if (D.member[x]) dl.push_back(x);
  u64 k = dl.size();
  if (k == 0) throw Error(Errc::NotSrg, "edgeless graph");
  if (k == q - 1) throw Error(Errc::NotSrg, "complete graph");
  i64 lambda = -1, mu = -1;
  for (u64 w = 1; w < q; ++w) {
    i64 c = 0;
    for (u64 d : dl)
      if (D.member[field_add(field, d, w)]) ++c;
    if (D.member[w]) {
      if (lambda < 0)
        lambda = c;
      else if (lambda != c)
        throw Error(Errc::NotSrg, "lambda not constant at w = " + std::to_string(w));
    } else {
      if (mu < 0)
        mu = c;
      else if (mu != c)
        throw Error(Errc::NotSrg, "mu not constant at w = " + std::to_string(w));
    }
  }
  SrgCertificate cert;
  cert.method = "direct";
  cert.v = q;
  cert.k = k;
  cert.lambda = lambda;
  cert.mu = mu;
  i128 disc = (i128)(lambda - mu) * (lambda - mu) + 4 * ((i128)k - mu);
  i64 sq = isqrt_exact(disc);
  if (sq >= 0 && ((lambda - mu) + sq) % 2 == 0) {
    cert.rational = true;
    cert.r = ((lambda - mu) + sq) / 2;
    cert.s = ((lambda - mu) - sq) / 2;
    i128 mr = -((i128)k + (i128)(q - 1) * cert.s);
    if (mr % (cert.r - cert.s)) throw Error(Errc::NotSrg, "non-integral multiplicity");
    cert.m_r = (u64)(mr / (cert.r - cert.s));
    cert.m_s = q - 1 - cert.m_r;
    cert.connected = cert.r != (i64)cert.k;
    cert.r_str = std::to_string(cert.r);
    cert.s_str = std::to_string(cert.s);
  } else {
    if (lambda - mu != -1 || k != (q - 1) / 2)
      throw Error(Errc::NotSrg, "irrational spectrum without conference parameters");
    cert.rational = false;
    cert.m_r = cert.m_s = (q - 1) / 2;
    cert.connected = true;
    cert.r_str = "(-1+sqrt(" + std::to_string(q) + "))/2";
    cert.s_str = "(-1-sqrt(" + std::to_string(q) + "))/2";
  }
  check_srg_identities(cert);
  return cert;
}

SkewVerdict verify_skew_hds(const FieldTable& field, const PeriodTable& pt,
                            const ConnectionSet& D) {
  u64 q = field.q(), p = field.p();
  if (p % 4 != 3) throw Error(Errc::ConditionViolation, "skew case requires p = 3 (mod 4)");
  for (u64 x = 1; x < q; ++x)
    if (D.member[x] + D.member[field.neg(x)] != 1)
      throw Error(Errc::SkewSplitFails, "F_q is not the disjoint union D, -D, {0}");
  if (D.member[0]) throw Error(Errc::SkewSplitFails, "0 in D");
  SkewVerdict out;
  out.v = q;
  out.k = D.size;
  out.census_value = (i64)((q - 3) / 4);
  if ((double)D.size * (double)D.size <= 1e8) {
    std::vector<u64> dl;
    for (u64 x = 1; x < q; ++x)
      if (D.member[x]) dl.push_back(x);
    for (u64 g = 1; g < q; ++g) {
      i64 c = 0;
      for (u64 d : dl)
        if (D.member[field_add(field, d, g)]) ++c;
      if (c != out.census_value)
        throw Error(Errc::DifferenceCensusFails, "element " + std::to_string(g) + " has " +
                                                     std::to_string(c) + " representations, want " +
                                                     std::to_string(out.census_value));
    }
    out.census_ran = true;
  }
  PredictedPairB pv = predicted_values_B(p, (u64)pt.f);
  auto spec = restricted_spectrum(pt, D);
  if (spec.size() != 2)
    throw Error(Errc::SpectrumMismatch,
                "spectrum has " + std::to_string(spec.size()) + " values, want 2");
  bool seen_plus = false, seen_minus = false;
  for (auto& s : spec) {
    CycIntValue t = two_x_plus_one(s.value);
    if (t == pv.tplus)
      seen_plus = true;
    else if (t == pv.tminus)
      seen_minus = true;
    else
      throw Error(Errc::SpectrumMismatch, "value " + s.value.str() + " is not (-1 +- sqrt(-v))/2");
  }
  if (!seen_plus || !seen_minus)
    throw Error(Errc::SpectrumMismatch, "spectrum misses one of the predicted values");
  out.value_plus = pv.str_plus;
  out.value_minus = pv.str_minus;
  return out;
}

PaleyVerdict verify_paley_pds(const FieldTable& field, const PeriodTable& pt,
                              const ConnectionSet& D) {
  u64 q = field.q(), p = field.p();
  if (p % 4 != 1 && p != 2)
    throw Error(Errc::ConditionViolation, "Paley case requires p = 1 (mod 4)");
  if (!index_set_symmetric(pt, D)) throw Error(Errc::SymmetryFails, "D != -D");
  if (D.size != (q - 1) / 2)
    throw Error(Errc::SizeInvariantViolation, "|D| != (v-1)/2");
  PaleyVerdict out;
  out.v = q;
  out.k = D.size;
  auto spec = restricted_spectrum(pt, D);
  if (spec.size() != 2)
    throw Error(Errc::SpectrumMismatch,
                "spectrum has " + std::to_string(spec.size()) + " values, want 2");
  u64 f = (u64)pt.f;
  bool seen_plus = false, seen_minus = false;
  if (f % 2 == 0) {
    i64 root = 1;
    for (u64 i = 0; i < f / 2; ++i) root *= (i64)p;
    out.value_plus = std::to_string((-1 + root) / 2);
    out.value_minus = std::to_string((-1 - root) / 2);
    for (auto& s : spec) {
      if (!s.value.is_rational())
        throw Error(Errc::SpectrumMismatch, "irrational value with even f");
      i64 v = s.value.rational_value();
      if (2 * v + 1 == root)
        seen_plus = true;
      else if (2 * v + 1 == -root)
        seen_minus = true;
      else
        throw Error(Errc::SpectrumMismatch,
                    "value " + std::to_string(v) + " is not (-1 +- sqrt(v))/2");
    }
  } else {
    PredictedPairB pv = predicted_values_B(p, f);
    out.value_plus = pv.str_plus;
    out.value_minus = pv.str_minus;
    for (auto& s : spec) {
      CycIntValue t = two_x_plus_one(s.value);
      if (t == pv.tplus)
        seen_plus = true;
      else if (t == pv.tminus)
        seen_minus = true;
      else
        throw Error(Errc::SpectrumMismatch,
                    "value " + s.value.str() + " is not (-1 +- sqrt(v))/2");
    }
  }
  if (!seen_plus || !seen_minus)
    throw Error(Errc::SpectrumMismatch, "spectrum misses one of the predicted values");
  return out;
}

SchemeReport verify_scheme(const FieldTable& field, const PeriodTable& pt,
                           const std::vector<ConnectionSet>& relations) {
  u64 q = field.q();
  if (relations.empty()) throw Error(Errc::NotPartition, "no relations given");
  std::vector<int> rel_of(q, -1);
  rel_of[0] = 0;
  for (size_t r = 0; r < relations.size(); ++r) {
    const auto& D = relations[r];
    for (u64 x = 1; x < q; ++x) {
      if (!D.member[x]) continue;
      if (rel_of[x] != -1) throw Error(Errc::NotPartition, "relations overlap");
      rel_of[x] = (int)r + 1;
    }
  }
  for (u64 x = 1; x < q; ++x)
    if (rel_of[x] == -1) throw Error(Errc::NotPartition, "relations do not cover F_q^*");
  for (const auto& D : relations)
    for (u64 x = 1; x < q; ++x)
      if (D.member[x] != D.member[field.neg(x)])
        throw Error(Errc::NotSymmetric, "relation is not symmetric");

  SchemeReport rep;
  rep.classes = relations.size();
  rep.valency = relations[0].size;
  rep.valencies_equal = true;
  for (const auto& D : relations)
    if (D.size != rep.valency) rep.valencies_equal = false;

  for (const auto& D : relations) rep.certificates.push_back(verify_srg(pt, D));

  if (q <= 10000) {
    size_t nc = relations.size() + 1;
    rep.pnum.assign(nc, std::vector<std::vector<i64>>(nc, std::vector<i64>(nc, 0)));
    rep.pnum[0][0][0] = 1;
    for (size_t i = 1; i < nc; ++i) rep.pnum[0][i][i] = (i64)relations[i - 1].size;
    std::vector<bool> seen(nc, false);
    std::vector<std::vector<i64>> tally(nc, std::vector<i64>(nc));
    for (u64 g = 1; g < q; ++g) {
      for (auto& row : tally) std::fill(row.begin(), row.end(), 0);
      for (u64 w = 1; w < q; ++w) tally[rel_of[w]][rel_of[field.sub(g, w)]]++;
      tally[0][rel_of[g]] = 1;  // w = 0 contributes (identity, class of g)
      int k = rel_of[g];
      if (!seen[k]) {
        rep.pnum[k] = tally;
        seen[k] = true;
      } else if (rep.pnum[k] != tally) {
        throw Error(Errc::AxiomFails,
                    "intersection numbers not well-defined on class " + std::to_string(k));
      }
    }
    rep.intersection_checked = true;
  }

  // Pseudocyclicity: nontrivial multiplicities from the eigenvalue tuples.
  std::map<std::vector<CycIntValue>, u64> groups;
  for (u64 a = 0; a < pt.N; ++a) {
    std::vector<CycIntValue> tuple;
    tuple.reserve(relations.size());
    for (const auto& D : relations) tuple.push_back(char_sum(pt, D.I, a));
    groups[std::move(tuple)]++;
  }
  rep.pseudocyclic = rep.valencies_equal;
  bool first = true;
  for (auto& [tuple, cnt] : groups) {
    u64 mult = cnt * pt.class_size();
    if (first) {
      rep.multiplicity = mult;
      first = false;
    } else if (mult != rep.multiplicity) {
      rep.pseudocyclic = false;
    }
  }

  // Non-amorphy witness: first fused pair whose spectrum exceeds two values.
  for (size_t i = 0; i + 1 < relations.size() && !rep.witness; ++i) {
    for (size_t j = i + 1; j < relations.size(); ++j) {
      std::vector<u64> I = relations[i].I;
      I.insert(I.end(), relations[j].I.begin(), relations[j].I.end());
      std::sort(I.begin(), I.end());
      std::map<CycIntValue, u64> vals;
      for (u64 a = 0; a < pt.N; ++a) vals[char_sum(pt, I, a)]++;
      if (vals.size() > 2) {
        rep.witness = {i, j};
        rep.witness_value_count = vals.size();
        break;
      }
    }
  }
  return rep;
}

}  // namespace cyclotome
