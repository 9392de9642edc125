/* C interface to the splitcomp library.
 *
 * Objects cross the boundary as single-line text: graph6 for split graphs,
 * JSON lines for covers, XY-graphs and posets. Results are JSON or plain
 * text in strings allocated by the library; release them with
 * sc_string_free. Every call returns an sc_status; on failure the session
 * keeps a message retrievable with sc_session_last_error.
 *
 * A session may be used by one thread at a time. Distinct sessions are
 * independent.
 */
#ifndef SPLITCOMP_H
#define SPLITCOMP_H

#include <stddef.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1,
  SC_ERR_PARSE = 2,
  SC_ERR_VALIDATION = 3,
  SC_ERR_DOMAIN = 4,
  SC_ERR_RESOURCE = 5,
  SC_ERR_INTERNAL = 6
} sc_status;

/* Balance of a census entry. */
enum {
  SC_BALANCED = 0,
  SC_UNBALANCED = 1,
  SC_OUT_OF_DOMAIN = 2
};

typedef struct sc_session sc_session;
typedef struct sc_census sc_census;

SC_API const char* sc_version(void);
SC_API const char* sc_status_name(sc_status status);

/* workers <= 0 uses the hardware concurrency. */
SC_API sc_status sc_session_create(int workers, sc_session** out);
SC_API void sc_session_destroy(sc_session* session);
/* Message of the last failed call; "" when there is none. */
SC_API const char* sc_session_last_error(const sc_session* session);

SC_API void sc_string_free(char* s);

/* class_name: "split", "cover", "xy" or "poset". no_y_isolates only affects
 * "xy"; the other classes are always enumerated on their own domain. */
SC_API sc_status sc_census_create(sc_session* session, const char* class_name, int n, int no_y_isolates,
                                  sc_census** out);
SC_API void sc_census_destroy(sc_census* census);
SC_API size_t sc_census_size(const sc_census* census);
SC_API void sc_census_counts(const sc_census* census, size_t* balanced, size_t* unbalanced, size_t* out_of_domain);
/* "# class=<tag> n=<n> count=<c> balanced=<b> unbalanced=<u>" */
SC_API sc_status sc_census_header(const sc_census* census, char** out);
/* Entry i in key order. Any output pointer may be NULL. */
SC_API sc_status sc_census_entry(const sc_census* census, size_t index, char** key_hex, char** object_line,
                                 int* balance);

/* Return nonzero to continue. Strings are valid only during the call. */
typedef int (*sc_visit_fn)(void* user, const char* key_hex, const char* object_line, int balance);
/* Streams a census in generation order, one object at a time. */
SC_API sc_status sc_census_visit(sc_session* session, const char* class_name, int n, int no_y_isolates,
                                 sc_visit_fn fn, void* user);

SC_API sc_status sc_canonical_key(sc_session* session, const char* object_line, char** key_hex);
/* Canonically relabeled copy of the object, same format as the input. */
SC_API sc_status sc_canonical_form(sc_session* session, const char* object_line, char** out_line);
SC_API sc_status sc_is_isomorphic(sc_session* session, const char* a, const char* b, int* result);

/* {"class","key","balance","witness"} plus "omega", "alpha" and "case" for
 * split graphs. */
SC_API sc_status sc_classify(sc_session* session, const char* object_line, char** out_json);

/* map_name as in "split->cover", "xy->split-shift", "compile-poset-up".
 * target_n is the order built by the compilation up-maps, ignored otherwise.
 * {"map","from","to","input","output","choices":[...],"object"} */
SC_API sc_status sc_map(sc_session* session, const char* map_name, const char* object_line, int target_n,
                        char** out_json);
/* Name of the map's inverse. Static string. */
SC_API sc_status sc_map_inverse(const char* map_name, const char** inverse_name);

/* One JSON report per line. *passed is 1 iff every asserting suite passed. */
SC_API sc_status sc_verify(sc_session* session, const char* suite, int max_n, char** report, int* passed);

SC_API sc_status sc_gallery(sc_session* session, int n, char** out_text);

/* JSON array of rows n = 0..max_n. */
SC_API sc_status sc_count_table(sc_session* session, int max_n, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
