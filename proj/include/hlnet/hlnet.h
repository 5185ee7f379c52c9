#ifndef HLNET_H
#define HLNET_H

/*
 * C interface to the hlnet library: topology construction, g-extra
 * connectivity certificates and claim verification.
 *
 * Handles are opaque. Every fallible call returns an hlnet_status; on
 * failure hlnet_last_error() describes the problem (per thread). Strings
 * returned through `char **out` are owned by the caller and released with
 * hlnet_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HLNET_BUILDING_LIBRARY)
#define HLNET_API __declspec(dllexport)
#else
#define HLNET_API __declspec(dllimport)
#endif
#else
#define HLNET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hlnet_status {
  HLNET_OK = 0,
  HLNET_REFUTED = 1,
  HLNET_INVALID_ARGUMENT = 2,
  HLNET_IO_ERROR = 3,
  HLNET_BOUNDED = 4,
  HLNET_NOT_INDEX_TWO = 5,
  HLNET_INTERNAL = 6
} hlnet_status;

typedef enum hlnet_format {
  HLNET_FORMAT_JSON = 0,
  HLNET_FORMAT_DOT = 1,
  HLNET_FORMAT_EDGELIST = 2,
  HLNET_FORMAT_TABLE = 3
} hlnet_format;

typedef enum hlnet_kappa_mode {
  HLNET_KAPPA_EXACT = 0,
  HLNET_KAPPA_UPPER = 1,
  HLNET_KAPPA_STAR_UPPER = 2
} hlnet_kappa_mode;

typedef struct hlnet_graph hlnet_graph;

typedef struct hlnet_kappa_options {
  int g;
  hlnet_kappa_mode mode;
  size_t max_cardinality; /* exact mode; 0 = no limit */
  size_t size_cap;        /* upper mode; 0 = g+1 */
  int force;              /* allow exact search above 64 vertices */
  unsigned threads;       /* 0 = available parallelism */
  int include_timing;
  hlnet_format format; /* json or table */
} hlnet_kappa_options;

typedef struct hlnet_run_options {
  unsigned threads;
  int include_timing;
  hlnet_format format; /* json or table */
} hlnet_run_options;

typedef void (*hlnet_progress_fn)(const char *message, void *user);

HLNET_API const char *hlnet_version(void);
HLNET_API const char *hlnet_last_error(void);
HLNET_API const char *hlnet_status_name(hlnet_status status);
HLNET_API void hlnet_string_free(char *text);
HLNET_API void hlnet_set_progress_callback(hlnet_progress_fn callback, void *user);

/* Graphs */
HLNET_API hlnet_status hlnet_graph_from_spec(const char *spec, hlnet_graph **out);
HLNET_API hlnet_status hlnet_graph_from_json(const char *document, hlnet_graph **out);
HLNET_API void hlnet_graph_free(hlnet_graph *graph);
HLNET_API size_t hlnet_graph_order(const hlnet_graph *graph);
HLNET_API size_t hlnet_graph_edge_count(const hlnet_graph *graph);
/* Canonical spec string, or "file" for graphs loaded from JSON without one. */
HLNET_API const char *hlnet_graph_spec(const hlnet_graph *graph);
/* Girth in *out, 0 for forests. */
HLNET_API hlnet_status hlnet_graph_girth(const hlnet_graph *graph, size_t *out);
HLNET_API hlnet_status hlnet_graph_neighborhood_size(const hlnet_graph *graph, const uint32_t *vertices,
                                                     size_t count, size_t *out);
HLNET_API hlnet_status hlnet_graph_serialize(const hlnet_graph *graph, hlnet_format format, char **out);

/* f_n(g) = n(g+1) - g(g+3)/2 */
HLNET_API hlnet_status hlnet_f_value(int64_t n, int64_t g, int64_t *out);

/* Certificates. Returns HLNET_OK for definitive answers, HLNET_BOUNDED when
 * the search budget ran out; the document is written in both cases. */
HLNET_API void hlnet_kappa_options_init(hlnet_kappa_options *options);
HLNET_API hlnet_status hlnet_kappa(const hlnet_graph *graph, const hlnet_kappa_options *options, char **out);

/* Claims. `params_json` is a JSON object of key -> string|integer, or NULL.
 * Returns HLNET_OK (verified), HLNET_REFUTED or HLNET_BOUNDED with the
 * report in *out. */
HLNET_API void hlnet_run_options_init(hlnet_run_options *options);
HLNET_API hlnet_status hlnet_verify(const char *claim, const char *params_json, const hlnet_run_options *options,
                                    char **out);
HLNET_API hlnet_status hlnet_decompose(int k, int l, const hlnet_run_options *options, char **out);
HLNET_API size_t hlnet_claim_count(void);
HLNET_API const char *hlnet_claim_id(size_t index);
HLNET_API const char *hlnet_claim_summary(size_t index);
HLNET_API const char *hlnet_claim_parameters(size_t index);

#ifdef __cplusplus
}
#endif

#endif
