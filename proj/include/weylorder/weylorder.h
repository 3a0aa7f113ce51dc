/* C interface to the weylorder library.
 *
 * Weights and tuples cross the boundary in wire form: omega coordinates
 * separated by commas ("2,1"), tuple parts separated by '/' ("2,1/0,0").
 * Root systems are named "A2", "C3", "B4", "D5".
 *
 * Every function returning wo_status leaves a message for wo_last_error() on
 * failure (per thread). Strings returned through char** are owned by the
 * caller and released with wo_string_free().
 */
#ifndef WEYLORDER_WEYLORDER_H
#define WEYLORDER_WEYLORDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WEYLORDER_BUILDING)
#    define WO_API __declspec(dllexport)
#  else
#    define WO_API __declspec(dllimport)
#  endif
#else
#  define WO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wo_status {
  WO_OK = 0,
  WO_ERR_INVALID_ARGUMENT = 1,
  WO_ERR_RANK_MISMATCH = 2,
  WO_ERR_NOT_DOMINANT = 3,
  WO_ERR_NOT_ADMISSIBLE = 4,
  WO_ERR_GUARD_EXCEEDED = 5,
  WO_ERR_PARSE = 6,
  WO_ERR_NULL_ARGUMENT = 7,
  WO_ERR_INTERNAL = 8
} wo_status;

typedef enum wo_verdict {
  WO_LESS = 0,
  WO_EQUIVALENT = 1,
  WO_GREATER = 2,
  WO_INCOMPARABLE = 3
} wo_verdict;

/* Default cap on the number of ordered tuples a single poset may enumerate. */
#define WO_DEFAULT_GUARD UINT64_C(1000000)

WO_API const char* wo_version(void);
WO_API const char* wo_status_string(wo_status status);
WO_API const char* wo_verdict_string(wo_verdict verdict);
/* Message of the last failure on this thread; "" if none. */
WO_API const char* wo_last_error(void);
WO_API void wo_string_free(char* s);

/* ---- posets ------------------------------------------------------------- */

typedef struct wo_poset wo_poset;

/* guard == 0 selects WO_DEFAULT_GUARD; jobs == 0 uses all cores. */
WO_API wo_status wo_poset_build(const char* lambda, size_t k, uint64_t guard, unsigned jobs, wo_poset** out);
WO_API void wo_poset_free(wo_poset* poset);

WO_API size_t wo_poset_class_count(const wo_poset* poset);
WO_API size_t wo_poset_edge_count(const wo_poset* poset);
WO_API wo_status wo_poset_class_wire(const wo_poset* poset, size_t index, char** out);
WO_API wo_status wo_poset_verdict(const wo_poset* poset, size_t a, size_t b, wo_verdict* out);

/* Poset JSON: lambda, k, classes, hasse edges (with cover kinds for k = 2). */
WO_API wo_status wo_poset_to_json(const wo_poset* poset, char** out);
WO_API wo_status wo_poset_to_dot(const wo_poset* poset, char** out);
/* Array of classified cover edges with witnesses. */
WO_API wo_status wo_poset_covers_json(const wo_poset* poset, char** out);

/* ---- single queries ----------------------------------------------------- */

WO_API wo_status wo_maximal_element(const char* lambda, size_t k, char** out_tuple);
WO_API wo_status wo_minimal_element(const char* lambda, size_t k, char** out_tuple);
WO_API wo_status wo_poset_size_k2(const char* lambda, uint64_t* out);

/* Decimal dimension of V(weight) for a full-rank weight of the root system. */
WO_API wo_status wo_weyl_dim(const char* root_system, const char* weight, char** out_decimal);
/* Decimal dimension of the tensor product of the embedded tuple parts. */
WO_API wo_status wo_tensor_dim(const char* root_system, const char* tuple, char** out_decimal);

WO_API wo_status wo_compare(const char* tuple_a, const char* tuple_b, wo_verdict* out);
WO_API wo_status wo_compare_prec(const char* root_system, const char* tuple_a, const char* tuple_b, wo_verdict* out);

/* Comparison of the built-in coroot list with the Cartan-matrix closure. */
WO_API wo_status wo_coroot_table_json(const char* root_system, char** out);

/* Dimension report for one (lambda, k, root system): class dimensions and,
 * for k = 2, monotonicity pairs and the coroot ledger; max-dim for any k. */
WO_API wo_status wo_dimension_report_json(const char* root_system, const char* lambda, size_t k, uint64_t guard,
                                          char** out);

/* ---- verification sweeps ------------------------------------------------ */

typedef struct wo_report wo_report;

/* config_json keys: rank_min, rank_max, m_max, k_min, k_max, families,
 * guard, jobs, out_dir, corrupt_coroots. NULL or "" uses the defaults. */
WO_API wo_status wo_verify_run(const char* config_json, wo_report** out);
WO_API void wo_report_free(wo_report* report);

WO_API size_t wo_report_row_count(const wo_report* report);
WO_API size_t wo_report_violation_count(const wo_report* report);
WO_API size_t wo_report_skipped_count(const wo_report* report);
WO_API wo_status wo_report_to_json(const wo_report* report, char** out);
WO_API wo_status wo_report_to_csv(const wo_report* report, char** out);
WO_API wo_status wo_report_summary(const wo_report* report, char** out);
/* Newline-separated violation messages. */
WO_API wo_status wo_report_violations(const wo_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WEYLORDER_WEYLORDER_H */
