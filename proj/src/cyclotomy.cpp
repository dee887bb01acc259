#include "cyclotome/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <unordered_set>

namespace cyclotome {

CycIntValue CycIntValue::rational(u64 p, i64 v) {
  CycIntValue out(p);
  out.c[0] = v;
  out.canon();
  return out;
}

void CycIntValue::canon() {
  i64 m = *std::min_element(c.begin(), c.end());
  if (m) {
    for (auto& x : c) x -= m;
  }
}

bool CycIntValue::is_rational() const {
  for (size_t t = 2; t < c.size(); ++t)
    if (c[t] != c[1]) return false;
  return true;
}

i64 CycIntValue::rational_value() const {
  if (!is_rational()) throw Error(Errc::NonIntegral, "rational_value on irrational value");
  return c[0] - (c.size() > 1 ? c[1] : 0);
}

CycIntValue& CycIntValue::operator+=(const CycIntValue& o) {
  if (c.size() != o.c.size()) throw Error(Errc::SetupMismatch, "mixed zeta_p rings");
  for (size_t t = 0; t < c.size(); ++t) c[t] += o.c[t];
  canon();
  return *this;
}

CycIntValue CycIntValue::scaled(i64 k) const {
  CycIntValue out = *this;
  for (auto& x : out.c) x *= k;
  out.canon();
  return out;
}

std::complex<double> CycIntValue::numeric() const {
  std::complex<double> z = 0;
  double p = (double)c.size();
  for (size_t t = 0; t < c.size(); ++t)
    z += (double)c[t] * std::polar(1.0, 2.0 * std::numbers::pi * (double)t / p);
  return z;
}

std::string CycIntValue::str() const {
  if (is_rational()) return std::to_string(rational_value());
  std::string s = "[";
  for (size_t t = 0; t < c.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(c[t]);
  }
  return s + "]";
}

CycIntValue cyc_mul(const CycIntValue& a, const CycIntValue& b) {
  if (a.c.size() != b.c.size()) throw Error(Errc::SetupMismatch, "mixed zeta_p rings");
  size_t p = a.c.size();
  CycIntValue out((u64)p);
  for (size_t s = 0; s < p; ++s) {
    if (!a.c[s]) continue;
    for (size_t t = 0; t < p; ++t) out.c[(s + t) % p] += a.c[s] * b.c[t];
  }
  out.canon();
  return out;
}

CycIntValue PeriodTable::eta(u64 j) const {
  CycIntValue v(p);
  for (u64 t = 0; t < p; ++t) v.c[t] = counts[j][t];
  v.canon();
  return v;
}

std::complex<double> PeriodTable::eta_numeric(u64 j) const { return eta(j).numeric(); }

PeriodTable build_period_table(const FieldTable& field, u64 N, int threads) {
  u64 q = field.q();
  if (N == 0 || (q - 1) % N != 0)
    throw Error(Errc::SetupMismatch, "period table: N must divide q-1");
  PeriodTable pt;
  pt.p = field.p();
  pt.f = field.f();
  pt.q = q;
  pt.N = N;
  pt.modulus = field.spec.modulus;
  pt.counts.assign(N, std::vector<i64>(pt.p, 0));

  int nth = std::max(threads, 1);
  u64 total = q - 1;
  if (nth == 1 || total < 1u << 16) {
    for (u64 a = 0; a < total; ++a) pt.counts[a % N][field.trace[field.exp[a]]]++;
    return pt;
  }
  std::vector<std::vector<std::vector<i64>>> local(
      nth, std::vector<std::vector<i64>>(N, std::vector<i64>(pt.p, 0)));
  std::vector<std::thread> ws;
  u64 chunk = (total + nth - 1) / nth;
  for (int w = 0; w < nth; ++w) {
    u64 lo = (u64)w * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    ws.emplace_back([&, w, lo, hi]() {
      auto& mine = local[w];
      for (u64 a = lo; a < hi; ++a) mine[a % N][field.trace[field.exp[a]]]++;
    });
  }
  for (auto& w : ws) w.join();
  for (auto& mine : local)
    for (u64 j = 0; j < N; ++j)
      for (u64 t = 0; t < pt.p; ++t) pt.counts[j][t] += mine[j][t];
  return pt;
}

CycIntValue char_sum(const PeriodTable& pt, const std::vector<u64>& I, u64 a) {
  CycIntValue v(pt.p);
  for (u64 i : I) {
    const auto& row = pt.counts[(a + i) % pt.N];
    for (u64 t = 0; t < pt.p; ++t) v.c[t] += row[t];
  }
  v.canon();
  return v;
}

std::complex<double> gauss_sum_numeric(const PeriodTable& pt, u64 k) {
  std::complex<double> g = 0;
  for (u64 j = 0; j < pt.N; ++j) {
    double ang = 2.0 * std::numbers::pi * (double)(k * j % pt.N) / (double)pt.N;
    g += std::polar(1.0, ang) * pt.eta_numeric(j);
  }
  return g;
}

namespace {

u64 upow(u64 b, u64 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

// ((X1 + Y1 sqrt(-D))/2) * ((X2 + Y2 sqrt(-D))/2) with numerators staying
// integral (X = Y mod 2 throughout).
std::pair<i128, i128> qmul(std::pair<i128, i128> a, std::pair<i128, i128> b, i64 D) {
  i128 X = a.first * b.first - a.second * b.second * D;
  i128 Y = a.first * b.second + a.second * b.first;
  if (X % 2 || Y % 2) throw Error(Errc::NonIntegral, "quadratic power left the integer ring");
  return {X / 2, Y / 2};
}

std::pair<i128, i128> qpow(i64 b, i64 c, i64 D, u64 e) {
  std::pair<i128, i128> r{2, 0}, base{b, c};
  while (e) {
    if (e & 1) r = qmul(r, base, D);
    base = qmul(base, base, D);
    e >>= 1;
  }
  return r;
}

bool in_p_subgroup(u64 u, u64 p, u64 Np) {
  if (Np <= 1) return true;
  u %= Np;
  u64 x = p % Np;
  u64 start = x;
  if (u == 1 || u == x) return true;
  for (;;) {
    x = mulmod(x, p, Np);
    if (x == u) return true;
    if (x == start) return false;
  }
}

}  // namespace

std::complex<double> GaussPrediction::numeric() const {
  std::complex<double> v((double)X / 2.0, (double)Y / 2.0 * std::sqrt((double)D));
  v *= std::pow((double)p, (double)E) * (double)sign;
  if (sqrt_pstar) {
    if (p % 4 == 1)
      v *= std::sqrt((double)p);
    else
      v *= std::complex<double>(0.0, std::sqrt((double)p));
  }
  return conjugated ? std::conj(v) : v;
}

i128 GaussPrediction::norm() const {
  i128 n = (X * X + (i128)D * Y * Y) / 4;
  for (u64 i = 0; i < 2 * E; ++i) n *= (i128)p;
  if (sqrt_pstar) n *= (i128)p;
  return n;
}

IndexTwoParams make_params_A(u64 p, u64 p1, u64 p2, u64 m, u64 n) {
  IndexTwoParams pr;
  pr.kind = ParamKind::TwoPrimes;
  pr.p = p;
  pr.p1 = p1;
  pr.p2 = p2;
  pr.m = m;
  pr.n = n;
  pr.N = upow(p1, m) * upow(p2, n);
  pr.f = mult_order(p, pr.N);
  if (pr.f != euler_phi(pr.N) / 2)
    throw Error(Errc::ConditionViolation, "ord_N(p) != phi(N)/2");
  pr.h = class_number(p1 * p2);
  NormSolution s = solve_norm_equation(p, pr.h, p1 * p2, NormMode::TwoPrimes, pr.f);
  pr.b = s.b;
  pr.c = s.c;
  return pr;
}

IndexTwoParams make_params_B(u64 p, u64 p1, u64 m) {
  IndexTwoParams pr;
  pr.kind = ParamKind::TwoP1m;
  pr.p = p;
  pr.p1 = p1;
  pr.m = m;
  pr.N = 2 * upow(p1, m);
  pr.f = mult_order(p, pr.N);
  if (pr.f != euler_phi(pr.N) / 2)
    throw Error(Errc::ConditionViolation, "ord_N(p) != phi(N)/2");
  pr.h = class_number(p1);
  NormSolution s = solve_norm_equation(p, pr.h, p1, NormMode::OnePrime, pr.f);
  pr.b = s.b;
  pr.c = s.c;
  return pr;
}

GaussPrediction predict_gauss_A(const IndexTwoParams& params, u64 s, u64 t, int csign) {
  GaussPrediction g;
  g.p = params.p;
  if (s >= params.m) {
    g.sign = -1;
    g.E = params.f / 2;
    g.case_label = "-p^(f/2)";
    return g;
  }
  if (t >= params.n) {
    g.E = params.f / 2;
    g.case_label = "+p^(f/2)";
    return g;
  }
  u64 e = upow(params.p1, s) * upow(params.p2, t);
  if (params.f < params.h * e)
    throw Error(Errc::ConditionViolation, "negative p-exponent in closed form");
  g.E = (params.f - params.h * e) / 2;
  g.D = params.p1 * params.p2;
  auto [X, Y] = qpow(params.b, params.c * csign, (i64)g.D, e);
  g.X = X;
  g.Y = Y;
  g.case_label = "quadratic^" + std::to_string(e);
  return g;
}

GaussPrediction predict_gauss_B(const IndexTwoParams& params, u64 k, int csign) {
  GaussPrediction g;
  g.p = params.p;
  u64 p = params.p, p1 = params.p1, m = params.m, f = params.f, h = params.h;
  u64 kk = k;
  u64 t = 0;
  while (kk % p1 == 0) {
    ++t;
    kk /= p1;
  }
  int psign = (p % 4 == 3) ? -1 : 1;
  if (t == m) {
    // quadratic character
    g.sign = (psign == -1 && ((f - 1) / 2) % 2 == 1) ? -1 : 1;
    g.E = (f - 1) / 2;
    g.sqrt_pstar = true;
    g.case_label = "quadratic-character";
    return g;
  }
  u64 e = upow(p1, t);
  if (kk % 2 == 0) {
    if (f < e * h) throw Error(Errc::ConditionViolation, "negative p-exponent in closed form");
    g.E = (f - e * h) / 2;
    g.D = p1;
    auto [X, Y] = qpow(params.b, params.c * csign, (i64)p1, e);
    g.X = X;
    g.Y = Y;
    g.case_label = "even^" + std::to_string(e);
    return g;
  }
  if ((f - 1) / 2 < h * e)
    throw Error(Errc::ConditionViolation, "negative p-exponent in closed form");
  g.sign = (psign == -1 && (m - 1) % 2 == 1) ? -1 : 1;
  g.E = (f - 1) / 2 - h * e;
  g.D = p1;
  g.sqrt_pstar = true;
  auto [X, Y] = qpow(params.b, params.c * csign, (i64)p1, 2 * e);
  g.X = X;
  g.Y = Y;
  g.case_label = "odd^" + std::to_string(e);
  return g;
}

GaussPrediction predict_gauss(const IndexTwoParams& params, u64 k, int csign) {
  k %= params.N;
  if (k == 0) {
    GaussPrediction g;
    g.p = params.p;
    g.sign = -1;
    g.case_label = "trivial";
    return g;
  }
  u64 q = 1;
  for (u64 i = 0; i < params.f; ++i) q *= params.p;
  GaussPrediction g;
  u64 Np, u;
  if (params.kind == ParamKind::TwoPrimes) {
    u64 s = 0, t = 0, kk = k;
    while (s < params.m && kk % params.p1 == 0) {
      ++s;
      kk /= params.p1;
    }
    while (t < params.n && kk % params.p2 == 0) {
      ++t;
      kk /= params.p2;
    }
    g = predict_gauss_A(params, s, t, csign);
    Np = params.N / (upow(params.p1, s) * upow(params.p2, t));
    u = kk % Np;
  } else {
    g = predict_gauss_B(params, k, csign);
    u64 kk = k, t = 0;
    while (kk % params.p1 == 0) {
      ++t;
      kk /= params.p1;
    }
    if (t == params.m) {
      Np = 2;
      u = 1;
    } else if (kk % 2 == 0) {
      Np = params.N / (2 * upow(params.p1, t));
      u = (kk / 2) % Np;
    } else {
      Np = params.N / upow(params.p1, t);
      u = kk % Np;
    }
  }
  if (!in_p_subgroup(u, params.p, Np)) {
    // G(chi^(-e u')) = chi(-1) * conj(G(chi^e)) for u in -<p>
    g.conjugated = !g.conjugated;
    if (params.p != 2) {
      u64 half = (q - 1) / 2;
      if (mulmod(k % params.N, half % params.N, params.N) != 0) g.sign = -g.sign;
    }
    g.case_label += " (conj)";
  }
  return g;
}

GaussCompareReport compare_gauss(const PeriodTable& pt, const IndexTwoParams& params) {
  if (pt.N != params.N || pt.p != params.p)
    throw Error(Errc::SetupMismatch, "period table does not match parameters");
  double tol = 1e-6 * std::sqrt((double)pt.q);
  std::vector<std::complex<double>> direct(pt.N);
  for (u64 k = 1; k < pt.N; ++k) direct[k] = gauss_sum_numeric(pt, k);

  GaussCompareReport best;
  for (int csign : {1, -1}) {
    GaussCompareReport rep;
    rep.csign = csign;
    rep.tolerance = tol;
    bool ok = true;
    for (u64 k = 1; k < pt.N; ++k) {
      GaussPrediction g = predict_gauss(params, k, csign);
      GaussExponentResult row;
      row.k = k;
      row.case_label = g.case_label;
      row.direct = direct[k];
      row.predicted = g.numeric();
      row.deviation = std::abs(row.direct - row.predicted);
      rep.max_deviation = std::max(rep.max_deviation, row.deviation);
      double mod_dev = std::abs(std::norm(direct[k]) - (double)pt.q);
      rep.max_modulus_deviation = std::max(rep.max_modulus_deviation, mod_dev);
      if (row.deviation > tol) ok = false;
      rep.rows.push_back(std::move(row));
    }
    if (ok) return rep;
    if (best.rows.empty() || rep.max_deviation < best.max_deviation) best = rep;
  }
  throw Error(Errc::Mismatch,
              "no globally consistent sign of c (best max deviation " +
                  std::to_string(best.max_deviation) + ", tol " + std::to_string(tol) + ")");
}

}  // namespace cyclotome
