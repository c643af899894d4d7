/* engelrad - finite group Engel/radical classification, C API.
 *
 * All handles are opaque; every fallible call returns an engelrad_status and
 * leaves a human-readable message in engelrad_last_error() (thread-local).
 * JSON reports are heap strings released with engelrad_string_free().
 */
#ifndef ENGELRAD_H
#define ENGELRAD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ENGELRAD_API __declspec(dllexport)
#else
#define ENGELRAD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum engelrad_status {
  ENGELRAD_OK = 0,
  ENGELRAD_ERR_INVALID_ARGUMENT = 1,
  ENGELRAD_ERR_PARSE = 2,
  ENGELRAD_ERR_ORDER_CAP = 3,
  ENGELRAD_ERR_BAD_INPUT = 4,
  ENGELRAD_ERR_INTERNAL = 5
} engelrad_status;

typedef struct engelrad_group engelrad_group; /* opaque */

typedef struct engelrad_options {
  uint32_t kmax;      /* quasi-nil search bound; 0 = ceil(log2 |G|) + 1 */
  uint64_t seed;      /* RNG seed for sampled checks */
  uint32_t threads;   /* worker count; 0 = available parallelism */
  int include_timing; /* nonzero adds timing fields to reports */
  uint32_t max_order; /* construction cap; 0 = 20000 */
} engelrad_options;

ENGELRAD_API void engelrad_options_init(engelrad_options* opts);

ENGELRAD_API const char* engelrad_version(void);

/* Message for the most recent failing call on this thread. */
ENGELRAD_API const char* engelrad_last_error(void);

/* Construction. spec: catalog syntax ("s4", "cyclic,12", "a4xa5", ...).
 * format: "perm" | "table" | "matrix" | NULL to infer. */
ENGELRAD_API engelrad_status engelrad_group_from_catalog(const char* spec, uint32_t max_order,
                                                         engelrad_group** out);
ENGELRAD_API engelrad_status engelrad_group_from_text(const char* text, const char* format,
                                                      uint32_t max_order, engelrad_group** out);
ENGELRAD_API engelrad_status engelrad_group_from_file(const char* path, const char* format,
                                                      uint32_t max_order, engelrad_group** out);
ENGELRAD_API void engelrad_group_free(engelrad_group* g);

/* Element access. Elements are dense indices; 0 is the identity. */
ENGELRAD_API uint32_t engelrad_group_order(const engelrad_group* g);
ENGELRAD_API engelrad_status engelrad_group_mul(const engelrad_group* g, uint32_t a, uint32_t b,
                                                uint32_t* out);
ENGELRAD_API engelrad_status engelrad_group_inv(const engelrad_group* g, uint32_t a,
                                                uint32_t* out);
ENGELRAD_API engelrad_status engelrad_group_element_label(const engelrad_group* g, uint32_t a,
                                                          char** out);

/* Reports (JSON). holds / all_passed may be NULL when not needed. */
ENGELRAD_API engelrad_status engelrad_info_json(const engelrad_group* g,
                                                const engelrad_options* opts, char** out_json);
ENGELRAD_API engelrad_status engelrad_classify_json(const engelrad_group* g,
                                                    const engelrad_options* opts,
                                                    char** out_json, int* all_passed);
ENGELRAD_API engelrad_status engelrad_radical_json(const engelrad_group* g,
                                                   const engelrad_options* opts,
                                                   char** out_json, int* oracles_agree);
ENGELRAD_API engelrad_status engelrad_check_engel_json(const engelrad_group* g, uint32_t n,
                                                       const engelrad_options* opts,
                                                       char** out_json, int* holds);
ENGELRAD_API engelrad_status engelrad_check_tower_json(const engelrad_group* g,
                                                       const uint32_t* idx, size_t k,
                                                       const engelrad_options* opts,
                                                       char** out_json, int* holds);
ENGELRAD_API engelrad_status engelrad_check_word_json(const engelrad_group* g, const char* expr,
                                                      const engelrad_options* opts,
                                                      char** out_json, int* holds);
ENGELRAD_API engelrad_status engelrad_check_sequence_json(const engelrad_group* g,
                                                          const char* sequence_text,
                                                          uint32_t index,
                                                          const engelrad_options* opts,
                                                          char** out_json, int* holds);
ENGELRAD_API engelrad_status engelrad_verify_group_json(const engelrad_group* g,
                                                        const engelrad_options* opts,
                                                        char** out_json, int* all_passed);
/* suite: currently only "catalog". */
ENGELRAD_API engelrad_status engelrad_verify_suite_json(const char* suite,
                                                        const engelrad_options* opts,
                                                        char** out_json, int* all_passed);

ENGELRAD_API void engelrad_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ENGELRAD_H */
