/* C interface for the cyclotome library: exact verification of cyclotomic
 * strongly regular graphs, difference sets, and index-2 Gauss sum closed
 * forms. All report-producing calls return a malloc'd JSON string through
 * json_out (free with cy_string_free) and a status code. */
#ifndef CYCLOTOME_H
#define CYCLOTOME_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum cy_status {
  CY_OK = 0,
  CY_VERIFY_FAILED = 1,
  CY_CONDITIONS_FAILED = 2,
  CY_USAGE_ERROR = 3
};

const char* cy_status_name(int status);

/* Thread-local description of the most recent failure. */
const char* cy_last_error(void);

void cy_string_free(char* s);

/* Opaque GF(p^f) handle with full exp/log/trace tables. */
typedef struct cy_field cy_field;

/* cache_dir may be NULL (no disk cache). Returns CY_OK or CY_USAGE_ERROR. */
int cy_field_build(uint64_t p, uint32_t f, const char* cache_dir, int threads,
                   cy_field** out);
void cy_field_free(cy_field* field);
uint64_t cy_field_order(const cy_field* field);
/* Trace of the packed element x, or -1 if x is out of range. */
int cy_field_trace(const cy_field* field, uint64_t x);
/* Packed element gamma^a. Requires 0 <= a < q-1; returns (uint64_t)-1 otherwise. */
uint64_t cy_field_exp(const cy_field* field, uint64_t a);
int cy_field_save(const cy_field* field, const char* path);

typedef struct cy_options {
  int conditions_only;
  int force;
  int threads;
  int no_timings;
  int include_periods;
  const char* cache_dir; /* may be NULL */
} cy_options;

/* Strongly regular Cayley graph from the p1^m p2^n construction. */
int cy_verify_a(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
                const cy_options* opt, char** json_out);

/* Skew Hadamard difference set / Paley-type partial difference set from the
 * 2 p1^m construction. */
int cy_verify_b(uint64_t p, uint64_t p1, uint64_t m, const cy_options* opt,
                char** json_out);

/* kind is 'A' or 'B'. */
int cy_scan(char kind, uint64_t bound, char** json_out);

/* Gauss sum closed-form cross-check; pass p2 = 0 for the 2 p1^m family. */
int cy_gauss(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
             const cy_options* opt, char** json_out);

/* Association scheme verification (p1^m p2^n family). */
int cy_scheme(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
              const cy_options* opt, char** json_out);

/* format: "graph6", "edges", or "json"; pass p2 = 0 for the 2 p1^m family. */
int cy_export_graph(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
                    const char* format, const char* path, const cy_options* opt,
                    char** json_out);

#ifdef __cplusplus
}
#endif

#endif
