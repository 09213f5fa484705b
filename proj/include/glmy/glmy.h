#ifndef GLMY_GLMY_H
#define GLMY_GLMY_H

/* C interface to the glmy library. Objects are opaque handles; every call
 * returns a status code and leaves a message for glmy_last_error() on
 * failure. Strings returned through char** are owned by the caller and must
 * be released with glmy_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GLMY_BUILDING_LIBRARY)
#    define GLMY_API __declspec(dllexport)
#  else
#    define GLMY_API __declspec(dllimport)
#  endif
#else
#  define GLMY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glmy_status {
  GLMY_OK = 0,
  GLMY_ERR_VERIFICATION = 1,
  GLMY_ERR_PARSE = 2,
  GLMY_ERR_BOUND = 3,
  GLMY_ERR_SUBDIGRAPH = 4,
  GLMY_ERR_GRIDMAP = 5,
  GLMY_ERR_INVALID_ARGUMENT = 6,
  GLMY_ERR_INTERNAL = 7
} glmy_status;

typedef enum glmy_theory { GLMY_THEORY_PATH = 0, GLMY_THEORY_CUBICAL = 1 } glmy_theory;

typedef struct glmy_digraph glmy_digraph;
typedef struct glmy_gridmap glmy_gridmap;

GLMY_API const char* glmy_version(void);
/* Message of the last failed call on this thread, or "". */
GLMY_API const char* glmy_last_error(void);
GLMY_API void glmy_string_free(char* s);

/* Digraphs: {"vertices": [...], "arrows": [[s, t], ...], "base": label?} */
GLMY_API glmy_status glmy_digraph_from_json(const char* json, glmy_digraph** out);
GLMY_API glmy_status glmy_digraph_load(const char* path, glmy_digraph** out);
GLMY_API glmy_status glmy_digraph_to_json(const glmy_digraph* g, char** out);
GLMY_API void glmy_digraph_free(glmy_digraph* g);
GLMY_API size_t glmy_digraph_vertex_count(const glmy_digraph* g);
GLMY_API size_t glmy_digraph_arrow_count(const glmy_digraph* g);

/* Reads {"ambient": digraph, "sub": digraph}. */
GLMY_API glmy_status glmy_pair_load(const char* path, glmy_digraph** ambient, glmy_digraph** sub);

GLMY_API glmy_status glmy_cone(const glmy_digraph* g, const char* apex, glmy_digraph** out);
GLMY_API glmy_status glmy_suspension(const glmy_digraph* g, const char* a, const char* b, glmy_digraph** out);
GLMY_API glmy_status glmy_box_product(const glmy_digraph* g, const glmy_digraph* h, glmy_digraph** out);

/* H_n as {"degree": n, "rank": r, "torsion": [...], "group": "Z ⊕ Z/2"}.
 * sub may be NULL; otherwise the relative group H_n(g, sub). Degrees above
 * max_degree fail with GLMY_ERR_BOUND. */
GLMY_API glmy_status glmy_homology(const glmy_digraph* g, const glmy_digraph* sub, glmy_theory theory, int n,
                                   int reduced, int max_degree, char** out_json);

/* Homology of {"dims": [...], "differentials": [...]} in degree n. */
GLMY_API glmy_status glmy_complex_homology(const char* complex_json, int n, char** out_json);

/* The comparison map L_n as {"degree", "cubical", "path", "matrix"}. */
GLMY_API glmy_status glmy_comparison(const glmy_digraph* g, int n, int reduced, int max_degree, char** out_json);

/* Grid maps. Relative target paths resolve against base_dir. */
GLMY_API glmy_status glmy_gridmap_from_json(const char* json, const char* base_dir, glmy_gridmap** out);
GLMY_API glmy_status glmy_gridmap_load(const char* path, glmy_gridmap** out);
GLMY_API glmy_status glmy_gridmap_to_json(const glmy_gridmap* f, char** out);
GLMY_API void glmy_gridmap_free(glmy_gridmap* f);
/* GLMY_ERR_GRIDMAP with the first violation when f is not a valid map. */
GLMY_API glmy_status glmy_gridmap_validate(const glmy_gridmap* f);

/* Hurewicz classes of a pair or triple grid map:
 * {"degree", "mode", "chain"?, "cubical": {"group", "class"}, "path": {"group", "class"}}. */
GLMY_API glmy_status glmy_hurewicz(const glmy_gridmap* f, int show_chain, int max_degree, char** out_json);

/* Checks a certificate of F-homotopy from f to g. Returns
 * GLMY_ERR_VERIFICATION with a report when it does not verify. */
GLMY_API glmy_status glmy_verify_certificate(const glmy_gridmap* f, const glmy_gridmap* g,
                                             const char* certificate_json, char** report_json);

/* Exactness of the long exact sequence of (ambient, sub) through max_degree.
 * With sub NULL, both (C+X, X) and (SX, C-X) for X = ambient are checked. */
GLMY_API glmy_status glmy_verify_exactness(const glmy_digraph* ambient, const glmy_digraph* sub, glmy_theory theory,
                                           int max_degree, char** report_json);

/* Acceptance suite. */
GLMY_API int glmy_suite_criterion_count(void);
/* {"id", "title", "pass", "detail", "seconds"}; GLMY_ERR_VERIFICATION on failure. */
GLMY_API glmy_status glmy_suite_run_criterion(int id, uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
