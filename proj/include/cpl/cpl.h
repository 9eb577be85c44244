/* cpl — colored partition identity laboratory.
 *
 * C interface to the verification engine: registry access, series-based
 * identity verification, tuple-counting oracles, and exhaustive bijection
 * certificates.  All functions return a cpl_status; results are returned as
 * JSON strings allocated by the library and released with cpl_string_free.
 * Handles are opaque and must be closed with their matching close function.
 * Counts are serialized as decimal strings since they exceed native widths.
 */

#ifndef CPL_H
#define CPL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cpl_registry cpl_registry;

typedef enum cpl_status {
    CPL_OK = 0,
    CPL_ERR_PARSE = 1,     /* malformed registry or JSON input */
    CPL_ERR_DOMAIN = 2,    /* coefficient / hypothesis violation */
    CPL_ERR_RANGE = 3,     /* argument outside the supported range */
    CPL_ERR_NOT_FOUND = 4, /* unknown spec name or lemma tag */
    CPL_ERR_BOUND = 5,     /* enumeration bound exceeded */
    CPL_ERR_IO = 6,        /* file access failure */
    CPL_ERR_INTERNAL = 7
} cpl_status;

const char* cpl_version(void);

/* Thread-local message for the most recent failing call. */
const char* cpl_last_error(void);

void cpl_string_free(char* s);

/* --- registry ----------------------------------------------------------- */

/* Load a registry from a canonical JSON file. */
cpl_status cpl_registry_open(const char* path, cpl_registry** out);
/* The registry shipped with the library (12 proven + 30 conjectured). */
cpl_status cpl_registry_open_builtin(cpl_registry** out);
void cpl_registry_close(cpl_registry* reg);

int cpl_registry_size(const cpl_registry* reg);
/* status_filter: "proven", "conjectured", or NULL for everything. */
cpl_status cpl_registry_catalog_json(const cpl_registry* reg, const char* status_filter,
                                     char** out_json);

/* --- verification ------------------------------------------------------- */

/* Verify D_S(N) = 2^p D_T(N-m) for N0 <= N <= n_max (exact arithmetic).
 * holds_out receives 1/0.  n_max <= 0 selects the per-status default
 * (1000 proven, 2000 conjectured). */
cpl_status cpl_verify(const cpl_registry* reg, const char* name, long n_max,
                      int* holds_out, char** report_json);

/* Verify every entry (optionally filtered by status), jobs-way parallel with
 * deterministic, registry-ordered output. */
cpl_status cpl_verify_all(const cpl_registry* reg, const char* status_filter,
                          long n_max, int jobs, int* all_hold, char** reports_json);

/* --- tuple oracle -------------------------------------------------------- */

/* Cross-check the tuple-counting side: left/right tuple counts on
 * [N0, n_max], the U/V counting identity, and (brute_n_max >= 0) the
 * exhaustive enumeration against the convolution counts. */
cpl_status cpl_oracle(const cpl_registry* reg, const char* name, long n_max,
                      long brute_n_max, int* ok_out, char** report_json);

/* --- bijection certificates ---------------------------------------------- */

/* lemma_tag: lemma3_1, lemma3_3, lemma3_4, lemma3_5, lemma3_6, lemma3_7. */
cpl_status cpl_bijection(const char* lemma_tag, long value_max, int* pass_out,
                         char** report_json);

/* --- candidate search ----------------------------------------------------- */

/* Probe coefficient pairs for identities holding up to n_probe.  a_csv/b_csv
 * are comma-separated 12-coefficient lists. */
cpl_status cpl_search_pair(long C, long m_min, long m_max, const char* a_csv,
                           const char* b_csv, long n_probe, char** result_json);

/* Enumerate both coefficient vectors over a comma-separated alphabet,
 * capped at max_pairs generated pairs. */
cpl_status cpl_search_alphabet(long C, long m_min, long m_max, const char* alphabet_csv,
                               long n_probe, long max_pairs, char** result_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CPL_H */
