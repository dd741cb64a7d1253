#ifndef K3WALLS_H
#define K3WALLS_H

/* C interface to the wall/chain engine. All strings returned through `out`
 * are heap allocated and must be released with k3w_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define K3W_API __declspec(dllexport)
#else
#define K3W_API __attribute__((visibility("default")))
#endif

typedef struct k3w_session k3w_session;

typedef enum k3w_status {
  K3W_OK = 0,
  K3W_INVALID_ARGUMENT = 1,
  K3W_DEGENERATE_VECTOR = 2,
  K3W_GAMMA_UNDEFINED = 3,
  K3W_OUT_OF_RANGE = 4,
  K3W_LINE_MISSES_WALL = 5,
  K3W_RANK_UNDETERMINED = 6,
  K3W_NOT_BUNDLE_WALL = 7,
  K3W_INCOMPLETE = 8,
  K3W_CHECK_FAILED = 9, /* verify ran, some check failed; output is still set */
  K3W_INTERNAL = 10
} k3w_status;

typedef enum k3w_frame { K3W_FRAME_HILBERT = 0, K3W_FRAME_BM = 1 } k3w_frame;

typedef enum k3w_format {
  K3W_FORMAT_TABLE = 0,
  K3W_FORMAT_JSON = 1,
  K3W_FORMAT_SVG = 2,
  K3W_FORMAT_DOT = 3
} k3w_format;

/* n >= 1, d >= 1. */
K3W_API k3w_status k3w_session_create(long n, long d, k3w_session** out);
K3W_API void k3w_session_destroy(k3w_session* s);

K3W_API k3w_status k3w_set_frame(k3w_session* s, k3w_frame frame);
/* Required before chain/plot when n >= 3. */
K3W_API k3w_status k3w_set_allow_incomplete(k3w_session* s, int allow);
/* Restricts walls/plot to lo < Gamma < hi. Either bound may be NULL. */
K3W_API k3w_status k3w_set_gamma_window(k3w_session* s, const char* lo, const char* hi);

K3W_API k3w_status k3w_walls(k3w_session* s, k3w_format fmt, char** out);
K3W_API k3w_status k3w_chain(k3w_session* s, k3w_format fmt, char** out);
K3W_API k3w_status k3w_plot(k3w_session* s, char** out);
/* vector as "r,c,s" in the session frame; tss_bound <= 0 selects 50. */
K3W_API k3w_status k3w_classify(k3w_session* s, const char* vector, long tss_bound, k3w_format fmt, char** out);
/* d runs over d_lo..d_hi. bound <= 0 selects the default oracle box. */
K3W_API k3w_status k3w_verify(long n, long d_lo, long d_hi, int oracle, long bound, k3w_format fmt, char** out);

/* Message for the last failure on this thread; never NULL. */
K3W_API const char* k3w_last_error(void);
K3W_API const char* k3w_status_string(k3w_status st);
K3W_API void k3w_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif
