#ifndef CYCLOTOME_REPORT_HPP
#define CYCLOTOME_REPORT_HPP

#include <iosfwd>

#include "json.hpp"

#include "cyclotome/verify.hpp"

namespace cyclotome {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cyclotome/1";
inline constexpr const char* kVersion = "1.0.0";

ordered_json conditions_json(const ConditionReport& rep);
ordered_json params_json(const IndexTwoParams& params);
ordered_json cert_json(const SrgCertificate& cert);
ordered_json spectrum_json(const std::vector<SpectrumValue>& spec, u64 p, u64 f);
ordered_json period_table_json(const PeriodTable& pt);

// graph6 per the standard bit-packed format; v <= 2^16 enforced by callers.
void write_graph6(const FieldTable& field, const ConnectionSet& D, std::ostream& os,
                  bool with_header);
void write_edges(const FieldTable& field, const ConnectionSet& D, std::ostream& os);

struct RunOptions {
  bool conditions_only = false;
  bool force = false;
  int threads = 1;
  bool no_timings = false;
  bool include_periods = false;
  std::string cache_dir;
};

// status: 0 verified, 1 verification failed, 2 conditions failed.
// Usage/size problems surface as thrown Error.
struct RunResult {
  int status = 0;
  ordered_json report;
};

RunResult run_verify_a(u64 p, u64 p1, u64 p2, u64 m, u64 n, const RunOptions& opt);
RunResult run_verify_b(u64 p, u64 p1, u64 m, const RunOptions& opt);
RunResult run_scan(char kind, u64 bound);
// p2 = 0 selects the 2p1^m family.
RunResult run_gauss(u64 p, u64 p1, u64 p2, u64 m, u64 n, const RunOptions& opt);
RunResult run_scheme(u64 p, u64 p1, u64 p2, u64 m, u64 n, const RunOptions& opt);
RunResult run_export(u64 p, u64 p1, u64 p2, u64 m, u64 n, const std::string& format,
                     const std::string& path, const RunOptions& opt);

}  // namespace cyclotome

#endif
