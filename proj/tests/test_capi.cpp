/* Exercises the shared-library C interface exactly as an external consumer
 * would: opaque handles, malloc'd JSON strings, and integer status codes. */
#include <cstdio>
#include <cstring>
#include <string>

#include "cyclotome.h"

static int failures = 0;

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static bool contains(const char* hay, const char* needle) {
  return hay && std::strstr(hay, needle) != nullptr;
}

int main() {
  CHECK(std::strcmp(cy_status_name(CY_OK), "ok") == 0);
  CHECK(std::strcmp(cy_status_name(CY_VERIFY_FAILED), "verification-failed") == 0);
  CHECK(std::strcmp(cy_status_name(CY_CONDITIONS_FAILED), "conditions-failed") == 0);
  CHECK(std::strcmp(cy_status_name(CY_USAGE_ERROR), "usage-error") == 0);
  CHECK(std::strcmp(cy_status_name(99), "unknown") == 0);

  /* Field handle lifecycle. */
  cy_field* field = nullptr;
  CHECK(cy_field_build(2, 4, nullptr, 1, &field) == CY_OK);
  CHECK(field != nullptr);
  CHECK(cy_field_order(field) == 16);
  CHECK(cy_field_exp(field, 0) == 1);
  CHECK(cy_field_exp(field, 16) == (uint64_t)-1); /* out of range */
  int zeros = 0;
  for (uint64_t x = 0; x < 16; ++x) {
    int t = cy_field_trace(field, x);
    CHECK(t == 0 || t == 1);
    if (t == 0) ++zeros;
  }
  CHECK(zeros == 8);
  CHECK(cy_field_trace(field, 99) == -1);
  CHECK(cy_field_save(field, "/tmp/capi_field.bin") == CY_OK);
  std::remove("/tmp/capi_field.bin");
  CHECK(cy_field_save(field, nullptr) == CY_USAGE_ERROR);
  cy_field_free(field);
  cy_field_free(nullptr); /* must be a no-op */

  /* Unbuildable field reports through cy_last_error. */
  cy_field* bad = nullptr;
  CHECK(cy_field_build(4, 2, nullptr, 1, &bad) == CY_USAGE_ERROR);
  CHECK(bad == nullptr);
  CHECK(cy_last_error()[0] != '\0');

  /* Full verification through the JSON interface. */
  cy_options opt = {};
  opt.threads = 2;
  opt.no_timings = 1;
  char* json = nullptr;
  CHECK(cy_verify_a(2, 5, 3, 1, 2, &opt, &json) == CY_OK);
  CHECK(contains(json, "\"verified\": true"));
  CHECK(contains(json, "\"k\": 273"));
  CHECK(contains(json, "\"schema\": \"cyclotome/1\""));
  cy_string_free(json);
  json = nullptr;

  /* Hypothesis failure is a distinct status with the failing item named. */
  CHECK(cy_verify_a(2, 13, 3, 1, 1, &opt, &json) == CY_CONDITIONS_FAILED);
  CHECK(contains(json, "\"holds\": false"));
  cy_string_free(json);
  json = nullptr;

  /* conditions_only skips materialization but still reports parameters. */
  cy_options cond_only = opt;
  cond_only.conditions_only = 1;
  CHECK(cy_verify_a(3, 5, 7, 2, 1, &cond_only, &json) == CY_OK); /* q = 3^60 */
  CHECK(contains(json, "\"conditions\""));
  CHECK(!contains(json, "\"certificate\""));
  cy_string_free(json);
  json = nullptr;

  CHECK(cy_verify_b(3, 11, 1, &opt, &json) == CY_OK);
  CHECK(contains(json, "skew_hadamard_difference_set"));
  cy_string_free(json);
  json = nullptr;

  CHECK(cy_scan('A', 100, &json) == CY_OK);
  CHECK(contains(json, "\"p1\": 17"));
  cy_string_free(json);
  json = nullptr;
  CHECK(cy_scan('X', 100, &json) == CY_USAGE_ERROR);
  CHECK(json == nullptr);

  CHECK(cy_gauss(2, 5, 3, 1, 1, &opt, &json) == CY_OK);
  CHECK(contains(json, "\"max_deviation\""));
  cy_string_free(json);
  json = nullptr;
  CHECK(cy_gauss(3, 11, 0, 1, 0, &opt, &json) == CY_OK); /* p2 = 0: 2 p1^m family */
  CHECK(contains(json, "\"kind\": \"2 p1^m\""));
  cy_string_free(json);
  json = nullptr;

  CHECK(cy_scheme(2, 5, 3, 1, 2, &opt, &json) == CY_OK);
  CHECK(contains(json, "\"pseudocyclic\": true"));
  cy_string_free(json);
  json = nullptr;

  CHECK(cy_export_graph(2, 5, 3, 1, 1, "edges", "/tmp/capi_graph.txt", &opt, &json) == CY_OK);
  cy_string_free(json);
  json = nullptr;
  FILE* fh = std::fopen("/tmp/capi_graph.txt", "r");
  CHECK(fh != nullptr);
  if (fh) std::fclose(fh);
  std::remove("/tmp/capi_graph.txt");
  CHECK(cy_export_graph(2, 5, 3, 1, 1, nullptr, "/tmp/x", &opt, &json) == CY_USAGE_ERROR);

  /* Null options pointer falls back to defaults. */
  CHECK(cy_scan('B', 20, &json) == CY_OK);
  cy_string_free(json);

  if (failures == 0) std::printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
