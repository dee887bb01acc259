#include "cyclotome/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

namespace cyclotome {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool materializable(u64 p, u64 f) { return (double)f * std::log2((double)p) <= 31.0; }

ordered_json complex_json(std::complex<double> z) {
  return ordered_json::array({z.real(), z.imag()});
}

FieldTable obtain_field(u64 p, u64 f, const RunOptions& opt) {
  return build_field_cached(p, (int)f, opt.cache_dir, std::max(opt.threads, 1));
}

ordered_json base_report(const char* construction) {
  ordered_json rep;
  rep["schema"] = kSchema;
  rep["artifact_version"] = kVersion;
  rep["construction"] = construction;
  return rep;
}

ordered_json error_json(const Error& e) {
  ordered_json j;
  j["code"] = errc_name(e.code());
  j["message"] = e.what();
  return j;
}

}  // namespace

ordered_json conditions_json(const ConditionReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : rep.items) {
    ordered_json item;
    item["name"] = c.name;
    item["holds"] = c.holds;
    if (!c.detail.empty()) item["detail"] = c.detail;
    arr.push_back(std::move(item));
  }
  return arr;
}

ordered_json params_json(const IndexTwoParams& params) {
  ordered_json j;
  j["kind"] = params.kind == ParamKind::TwoPrimes ? "p1^m p2^n" : "2 p1^m";
  j["p"] = params.p;
  j["p1"] = params.p1;
  if (params.kind == ParamKind::TwoPrimes) j["p2"] = params.p2;
  j["m"] = params.m;
  if (params.kind == ParamKind::TwoPrimes) j["n"] = params.n;
  j["N"] = params.N;
  j["f"] = params.f;
  j["h"] = params.h;
  j["b"] = params.b;
  j["c"] = params.c;
  return j;
}

ordered_json cert_json(const SrgCertificate& cert) {
  ordered_json j;
  j["v"] = cert.v;
  j["k"] = cert.k;
  j["lambda"] = cert.lambda;
  j["mu"] = cert.mu;
  j["r"] = cert.r_str;
  j["s"] = cert.s_str;
  j["m_r"] = cert.m_r;
  j["m_s"] = cert.m_s;
  j["rational"] = cert.rational;
  j["connected"] = cert.connected;
  j["method"] = cert.method;
  return j;
}

ordered_json spectrum_json(const std::vector<SpectrumValue>& spec, u64 p, u64 f) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : spec) {
    ordered_json item;
    item["value"] = value_string(s.value, p, f);
    item["multiplicity"] = s.multiplicity;
    arr.push_back(std::move(item));
  }
  return arr;
}

ordered_json period_table_json(const PeriodTable& pt) {
  ordered_json j;
  j["p"] = pt.p;
  j["f"] = pt.f;
  j["N"] = pt.N;
  j["modulus"] = pt.modulus;
  j["counts"] = pt.counts;
  return j;
}

void write_graph6(const FieldTable& field, const ConnectionSet& D, std::ostream& os,
                  bool with_header) {
  u64 n = field.q();
  if (n > 65536) throw Error(Errc::TooLargeForFormat, "graph6 limited to v <= 2^16");
  if (with_header) os << ">>graph6<<";
  std::string out;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else {
    out.push_back((char)126);
    out.push_back((char)(((n >> 12) & 63) + 63));
    out.push_back((char)(((n >> 6) & 63) + 63));
    out.push_back((char)((n & 63) + 63));
  }
  int bit = 5;
  unsigned char cur = 0;
  for (u64 j = 1; j < n; ++j) {
    for (u64 i = 0; i < j; ++i) {
      if (D.member[field.sub((u64)i, (u64)j)]) cur |= (unsigned char)(1u << bit);
      if (bit == 0) {
        out.push_back((char)(cur + 63));
        cur = 0;
        bit = 5;
      } else {
        --bit;
      }
    }
  }
  if (bit != 5) out.push_back((char)(cur + 63));
  os << out << "\n";
}

void write_edges(const FieldTable& field, const ConnectionSet& D, std::ostream& os) {
  u64 n = field.q();
  for (u64 j = 1; j < n; ++j)
    for (u64 i = 0; i < j; ++i)
      if (D.member[field.sub(i, j)]) os << i << " " << j << "\n";
}

RunResult run_verify_a(u64 p, u64 p1, u64 p2, u64 m, u64 n, const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  ordered_json rep = base_report("A");
  ordered_json timings;
  ConditionReport cond = check_conditions_A(p, p1, p2, m, n);
  rep["conditions"] = conditions_json(cond);
  timings["conditions"] = ms_since(t0);
  if (!cond.all() && !opt.force) {
    rep["verified"] = false;
    rep["reason"] = "conditions failed";
    if (!opt.no_timings) rep["timings_ms"] = timings;
    return {2, rep};
  }
  IndexTwoParams params;
  try {
    params = make_params_A(p, p1, p2, m, n);
  } catch (const Error& e) {
    rep["verified"] = false;
    rep["error"] = error_json(e);
    return {2, rep};
  }
  rep["parameters"] = params_json(params);
  if (opt.conditions_only) {
    rep["verified"] = cond.all();
    rep["materialized"] = false;
    try {
      SrgParams pred = predicted_spectrum_A(params);
      ordered_json pj;
      pj["v"] = to_string_i128(pred.v);
      pj["k"] = to_string_i128(pred.k);
      pj["lambda"] = to_string_i128(pred.lambda);
      pj["mu"] = to_string_i128(pred.mu);
      pj["r"] = to_string_i128(pred.r);
      pj["s"] = to_string_i128(pred.s);
      rep["predicted"] = pj;
    } catch (const Error&) {
      // q beyond 128-bit range: conditions are the whole story
    }
    if (!opt.no_timings) rep["timings_ms"] = timings;
    return {cond.all() ? 0 : 2, rep};
  }
  if (!materializable(p, params.f))
    throw Error(Errc::SizeExceeded, "q = p^f exceeds 2^31; use conditions-only mode");
  auto t1 = std::chrono::steady_clock::now();
  FieldTable field = obtain_field(p, params.f, opt);
  rep["field_modulus"] = field.spec.modulus;
  timings["field"] = ms_since(t1);
  auto t2 = std::chrono::steady_clock::now();
  PeriodTable pt = build_period_table(field, params.N, opt.threads);
  timings["period_table"] = ms_since(t2);
  ConnectionSet D = build_D_A(field, params);
  rep["index_set"] = D.I;
  auto t3 = std::chrono::steady_clock::now();
  int status = 0;
  try {
    SrgCertificate cert = verify_srg(pt, D);
    rep["certificate"] = cert_json(cert);
    SrgParams pred = predicted_spectrum_A(params);
    ordered_json pj;
    pj["r"] = to_string_i128(pred.r);
    pj["s"] = to_string_i128(pred.s);
    pj["k"] = to_string_i128(pred.k);
    pj["lambda"] = to_string_i128(pred.lambda);
    pj["mu"] = to_string_i128(pred.mu);
    rep["predicted"] = pj;
    bool match = cert.rational && (i128)cert.r == pred.r && (i128)cert.s == pred.s &&
                 (i128)cert.k == pred.k && (i128)cert.lambda == pred.lambda &&
                 (i128)cert.mu == pred.mu;
    rep["prediction_matches"] = match;
    if (!match) status = 1;
  } catch (const Error& e) {
    rep["error"] = error_json(e);
    status = 1;
  }
  rep["spectrum"] = spectrum_json(restricted_spectrum(pt, D), p, params.f);
  timings["verify"] = ms_since(t3);
  rep["verified"] = status == 0;
  if (!opt.no_timings) rep["timings_ms"] = timings;
  return {status, rep};
}

RunResult run_verify_b(u64 p, u64 p1, u64 m, const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  ordered_json rep = base_report("B");
  ordered_json timings;
  ConditionReport cond = check_conditions_B(p, p1, m);
  rep["conditions"] = conditions_json(cond);
  timings["conditions"] = ms_since(t0);
  if (!cond.all() && !opt.force) {
    rep["verified"] = false;
    rep["reason"] = "conditions failed";
    if (!opt.no_timings) rep["timings_ms"] = timings;
    return {2, rep};
  }
  IndexTwoParams params;
  try {
    params = make_params_B(p, p1, m);
  } catch (const Error& e) {
    rep["verified"] = false;
    rep["error"] = error_json(e);
    return {2, rep};
  }
  rep["parameters"] = params_json(params);
  if (opt.conditions_only) {
    rep["verified"] = cond.all();
    rep["materialized"] = false;
    if (!opt.no_timings) rep["timings_ms"] = timings;
    return {cond.all() ? 0 : 2, rep};
  }
  if (!materializable(p, params.f))
    throw Error(Errc::SizeExceeded, "q = p^f exceeds 2^31; use conditions-only mode");
  auto t1 = std::chrono::steady_clock::now();
  FieldTable field = obtain_field(p, params.f, opt);
  rep["field_modulus"] = field.spec.modulus;
  timings["field"] = ms_since(t1);
  auto t2 = std::chrono::steady_clock::now();
  PeriodTable pt = build_period_table(field, params.N, opt.threads);
  timings["period_table"] = ms_since(t2);
  auto t3 = std::chrono::steady_clock::now();
  bool skew = p % 4 == 3;
  int status = 1;
  ordered_json attempts = ordered_json::array();
  for (int coset : {0, 1}) {
    ordered_json att;
    att["coset"] = coset;
    try {
      ConnectionSet D = build_D_B(field, params, coset);
      if (skew) {
        SkewVerdict v = verify_skew_hds(field, pt, D);
        att["type"] = "skew_hadamard_difference_set";
        att["v"] = v.v;
        att["k"] = v.k;
        att["lambda"] = v.census_value;
        att["census_ran"] = v.census_ran;
        att["values"] = ordered_json::array({v.value_plus, v.value_minus});
      } else {
        PaleyVerdict v = verify_paley_pds(field, pt, D);
        att["type"] = "paley_partial_difference_set";
        att["v"] = v.v;
        att["k"] = v.k;
        att["values"] = ordered_json::array({v.value_plus, v.value_minus});
      }
      att["verified"] = true;
      att["spectrum"] = spectrum_json(restricted_spectrum(pt, D), p, params.f);
      att["index_set"] = D.I;
      attempts.push_back(std::move(att));
      rep["selected_coset"] = coset;
      status = 0;
      break;
    } catch (const Error& e) {
      att["verified"] = false;
      att["error"] = error_json(e);
      attempts.push_back(std::move(att));
    }
  }
  rep["attempts"] = attempts;
  timings["verify"] = ms_since(t3);
  rep["verified"] = status == 0;
  if (!opt.no_timings) rep["timings_ms"] = timings;
  return {status, rep};
}

RunResult run_scan(char kind, u64 bound) {
  ordered_json rep = base_report("scan");
  rep["kind"] = std::string(1, kind);
  rep["bound"] = bound;
  ordered_json rows = ordered_json::array();
  if (kind == 'A' || kind == 'a') {
    for (const auto& r : scan_A(bound)) {
      ordered_json row;
      row["p"] = r.p;
      row["p1"] = r.p1;
      row["p2"] = r.p2;
      row["h"] = r.h;
      row["b"] = r.b;
      rows.push_back(std::move(row));
    }
  } else if (kind == 'B' || kind == 'b') {
    for (const auto& r : scan_B(bound)) {
      ordered_json row;
      row["p"] = r.p;
      row["p1"] = r.p1;
      row["h"] = r.h;
      row["b"] = r.b;
      rows.push_back(std::move(row));
    }
  } else {
    throw Error(Errc::Usage, "scan kind must be A or B");
  }
  rep["rows"] = rows;
  return {0, rep};
}

RunResult run_gauss(u64 p, u64 p1, u64 p2, u64 m, u64 n, const RunOptions& opt) {
  ordered_json rep = base_report("gauss");
  IndexTwoParams params;
  try {
    params = p2 ? make_params_A(p, p1, p2, m, n) : make_params_B(p, p1, m);
  } catch (const Error& e) {
    rep["verified"] = false;
    rep["error"] = error_json(e);
    return {2, rep};
  }
  rep["parameters"] = params_json(params);
  if (!materializable(p, params.f))
    throw Error(Errc::SizeExceeded, "q = p^f exceeds 2^31");
  FieldTable field = obtain_field(p, params.f, opt);
  rep["field_modulus"] = field.spec.modulus;
  PeriodTable pt = build_period_table(field, params.N, opt.threads);
  if (opt.include_periods) rep["period_table"] = period_table_json(pt);
  int status = 0;
  try {
    GaussCompareReport cmp = compare_gauss(pt, params);
    rep["c_sign"] = cmp.csign;
    rep["tolerance"] = cmp.tolerance;
    rep["max_deviation"] = cmp.max_deviation;
    rep["max_modulus_deviation"] = cmp.max_modulus_deviation;
    ordered_json rows = ordered_json::array();
    for (const auto& r : cmp.rows) {
      ordered_json row;
      row["k"] = r.k;
      row["case"] = r.case_label;
      row["direct"] = complex_json(r.direct);
      row["predicted"] = complex_json(r.predicted);
      row["deviation"] = r.deviation;
      rows.push_back(std::move(row));
    }
    rep["exponents"] = rows;
  } catch (const Error& e) {
    rep["error"] = error_json(e);
    status = 1;
  }
  rep["verified"] = status == 0;
  return {status, rep};
}

RunResult run_scheme(u64 p, u64 p1, u64 p2, u64 m, u64 n, const RunOptions& opt) {
  ordered_json rep = base_report("scheme");
  IndexTwoParams params;
  try {
    params = make_params_A(p, p1, p2, m, n);
  } catch (const Error& e) {
    rep["verified"] = false;
    rep["error"] = error_json(e);
    return {2, rep};
  }
  rep["parameters"] = params_json(params);
  if (!materializable(p, params.f))
    throw Error(Errc::SizeExceeded, "q = p^f exceeds 2^31");
  FieldTable field = obtain_field(p, params.f, opt);
  rep["field_modulus"] = field.spec.modulus;
  PeriodTable pt = build_period_table(field, params.N, opt.threads);
  int status = 0;
  try {
    std::vector<ConnectionSet> rels = build_scheme_relations(field, params);
    SchemeReport sr = verify_scheme(field, pt, rels);
    rep["classes"] = sr.classes;
    rep["valency"] = sr.valency;
    rep["valencies_equal"] = sr.valencies_equal;
    rep["pseudocyclic"] = sr.pseudocyclic;
    rep["multiplicity"] = sr.multiplicity;
    rep["intersection_numbers_checked"] = sr.intersection_checked;
    if (sr.witness) {
      ordered_json w;
      w["i"] = sr.witness->first;
      w["j"] = sr.witness->second;
      w["fused_value_count"] = sr.witness_value_count;
      rep["non_amorphy_witness"] = w;
    }
    ordered_json certs = ordered_json::array();
    for (const auto& c : sr.certificates) certs.push_back(cert_json(c));
    rep["certificates"] = certs;
  } catch (const Error& e) {
    rep["error"] = error_json(e);
    status = 1;
  }
  rep["verified"] = status == 0;
  return {status, rep};
}

RunResult run_export(u64 p, u64 p1, u64 p2, u64 m, u64 n, const std::string& format,
                     const std::string& path, const RunOptions& opt) {
  ordered_json rep = base_report("export");
  IndexTwoParams params = p2 ? make_params_A(p, p1, p2, m, n) : make_params_B(p, p1, m);
  if (!materializable(p, params.f))
    throw Error(Errc::SizeExceeded, "q = p^f exceeds 2^31");
  FieldTable field = obtain_field(p, params.f, opt);
  PeriodTable pt = build_period_table(field, params.N, opt.threads);
  ConnectionSet D;
  if (p2) {
    D = build_D_A(field, params);
  } else {
    // pick the coset whose spectrum is two-valued
    D = build_D_B(field, params, 0);
    if (restricted_spectrum(pt, D).size() != 2) D = build_D_B(field, params, 1);
  }
  rep["parameters"] = params_json(params);
  rep["format"] = format;
  rep["path"] = path;
  rep["v"] = field.q();
  rep["k"] = D.size;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(Errc::Io, "cannot open " + path);
  if (format == "graph6") {
    write_graph6(field, D, os, false);
  } else if (format == "edges") {
    write_edges(field, D, os);
  } else if (format == "json") {
    ordered_json j = rep;
    j["index_set"] = D.I;
    j["spectrum"] = spectrum_json(restricted_spectrum(pt, D), p, params.f);
    os << j.dump(2) << "\n";
  } else {
    throw Error(Errc::Usage, "format must be graph6, edges, or json");
  }
  return {0, rep};
}

}  // namespace cyclotome
