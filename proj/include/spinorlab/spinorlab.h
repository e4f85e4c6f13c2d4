#ifndef SPINORLAB_SPINORLAB_H
#define SPINORLAB_SPINORLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SPINORLAB_BUILDING_LIBRARY)
#    define SPL_API __declspec(dllexport)
#  else
#    define SPL_API __declspec(dllimport)
#  endif
#else
#  define SPL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spl_status {
    SPL_OK = 0,
    SPL_VERIFY_FAILED = 1, /* a verification check failed; output is still produced */
    SPL_USAGE = 2,         /* invalid parameters */
    SPL_INPUT = 3,         /* malformed input document */
    SPL_PRECONDITION = 4,  /* operation precondition violated */
    SPL_INTERNAL = 5
} spl_status;

/* Owned, NUL-terminated output buffer. */
typedef struct spl_text spl_text;
typedef struct spl_descriptor spl_descriptor;
typedef struct spl_solution spl_solution;

SPL_API const char* spl_version(void);
/* Message of the last failing call on this thread ("" if none). */
SPL_API const char* spl_last_error(void);

SPL_API const char* spl_text_data(const spl_text* text);
SPL_API size_t spl_text_size(const spl_text* text);
SPL_API void spl_text_free(spl_text* text);

/* format: "json", "csv" or "text". j == 0 selects the Dirac spectrum
 * (levels 0..lmax), otherwise the higher spin operator with 0 < j < n/2
 * (levels 1..lmax). */
SPL_API spl_status spl_spectra(int n, int j, int lmax, const char* format, spl_text** out);
/* Parses a CSV or JSON spectrum table and re-emits it in `format`. */
SPL_API spl_status spl_spectra_convert(const char* table, const char* input_format, const char* format, spl_text** out);

/* kind: "monogenic" or "rs". Degree caps can be raised with the
 * SPINORLAB_MAX_DEGREE environment variable. */
SPL_API spl_status spl_solution_create(int m, int k, const char* kind, spl_solution** out);
SPL_API spl_status spl_solution_dim(const spl_solution* sol, size_t* out);
/* decompose: for kind "rs", add the M1/M2/M3 splitting and direct-sum
 * verdict. dump_basis: include every basis element. */
SPL_API spl_status spl_solution_report(spl_solution* sol, int decompose, int dump_basis, const char* format, spl_text** out);
SPL_API void spl_solution_free(spl_solution* sol);

SPL_API spl_status spl_descriptor_parse(const char* json, spl_descriptor** out);
SPL_API spl_status spl_descriptor_dim(const spl_descriptor* desc, int* out);
SPL_API void spl_descriptor_free(spl_descriptor* desc);

/* op: "D_1/2", "D_T", "D_3/2" or "D_j" (j used for D_j only). Writes the
 * JSON index report. */
SPL_API spl_status spl_index(const spl_descriptor* desc, const char* op, int j, spl_text** out);
/* Evaluated index as "num/den" or "num". */
SPL_API spl_status spl_index_value(const spl_descriptor* desc, const char* op, int j, spl_text** out);
/* Canonical string of the top-degree integrand. */
SPL_API spl_status spl_symbolic_class(int dim, const char* op, int j, spl_text** out);
SPL_API spl_status spl_dim8_audit(spl_text** out);

/* only: comma separated check names, NULL or "" for all. Returns
 * SPL_VERIFY_FAILED when a check fails (out is set either way). */
SPL_API spl_status spl_verify(const char* only, int quick, const char* format, spl_text** out);
/* Comma separated list of check names. */
SPL_API spl_status spl_verify_checks(spl_text** out);

#ifdef __cplusplus
}
#endif

#endif
