/*
 * vincular -- C API for the vincular/barred pattern toolkit.
 *
 * All functions return VINC_OK on success.  Verification outcomes are NOT
 * errors: a completed check hands back a vinc_report whose pass flag and
 * JSON body describe the result.  On any non-OK status, vinc_last_error()
 * holds a thread-local message.
 *
 * Handles returned through out-parameters are owned by the caller and must
 * be released with the matching *_free function.
 */

#ifndef VINCULAR_H
#define VINCULAR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vinc_status {
  VINC_OK = 0,
  VINC_EINVAL = 1,   /* bad argument (domain error, range, unknown name) */
  VINC_EPARSE = 2,   /* malformed pattern or statistic text */
  VINC_EINTERNAL = 3 /* unexpected failure */
} vinc_status;

const char* vinc_version(void);
const char* vinc_last_error(void);

/* ---- patterns --------------------------------------------------------- */

/* Either a vincular pattern ("124-3", "1-2-43", "2341") or a barred pattern
 * ("25~134": '~' bars the following letter). */
typedef struct vinc_pattern vinc_pattern;

vinc_status vinc_pattern_parse(const char* text, vinc_pattern** out);
void vinc_pattern_free(vinc_pattern* p);
int vinc_pattern_is_barred(const vinc_pattern* p);
int vinc_pattern_length(const vinc_pattern* p);
/* Round-trip serialization; fails with VINC_EINVAL when buf is too small. */
vinc_status vinc_pattern_format(const vinc_pattern* p, char* buf, size_t buflen);
/* kind: "reverse", "complement" or "reverse_complement"; vincular only. */
vinc_status vinc_pattern_symmetry(const vinc_pattern* p, const char* kind, vinc_pattern** out);

/* ---- reports ---------------------------------------------------------- */

typedef struct vinc_report vinc_report;

/* JSON body; the pointer stays valid until the report is freed. */
const char* vinc_report_json(const vinc_report* r);
int vinc_report_passed(const vinc_report* r);
void vinc_report_free(vinc_report* r);

/* ---- computations ------------------------------------------------------ */
/* threads <= 0 selects the THREADS environment variable, then a hardware
 * default.  Results never depend on the thread count. */

vinc_status vinc_count(const char* pattern, int n, int threads, uint64_t* out);
/* stat_kind: first_letter | last_letter | lr_min_positions | lr_min_values |
 * descent_set | num_descents */
vinc_status vinc_stat(const char* pattern, int n, const char* stat_kind, int threads,
                      vinc_report** out);
/* Per-n count (and table, when stat_kind is non-NULL) comparison. */
vinc_status vinc_equiv(const char* pattern_a, const char* pattern_b, int n_max,
                       const char* stat_kind, int threads, vinc_report** out);
/* map_name: f-1423 | block-1342 | slide-3124 | g-4123 */
vinc_status vinc_bijection(const char* map_name, int n, vinc_report** out);
/* family: F1_124_134 | F2_132_142 | F3_231_241 (or "1" | "2" | "3").
 * The report carries the coefficient table; with check_bruteforce != 0 it
 * also carries the comparison against enumeration. */
vinc_status vinc_series(const char* family, int order, int check_bruteforce, int threads,
                        vinc_report** out);
/* Certify d_R : S_n[B;p;w] -> S_{n-|R|}[B;..] bijective for n <= n_max.
 * prefix is a digit string; set holds 1-based positions. */
vinc_status vinc_revdel(const char* pattern, const char* prefix, const int* set, size_t set_len,
                        int n_max, vinc_report** out);
/* Set equality of the vincular and barred avoidance classes, n <= n_max. */
vinc_status vinc_barred(const char* vincular_pattern, const char* barred_pattern, int n_max,
                        vinc_report** out);
vinc_status vinc_conjecture(int n_max, int threads, vinc_report** out);
/* The full acceptance suite; one entry per criterion in the report. */
vinc_status vinc_suite(int threads, vinc_report** out);

#ifdef __cplusplus
}
#endif

#endif /* VINCULAR_H */
