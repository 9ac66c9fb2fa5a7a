/*
 * tabkit C API: row insertion on decreasing tableaux, the compatible-pair
 * correspondence, and desk-scale verification of the symmetric-function
 * expansion identities it proves.
 *
 * All compound results are returned as JSON documents in freshly allocated
 * strings; release them with tk_string_free.  Tableaux passed between calls
 * travel as opaque handles.  Every function reports a tk_status; on failure
 * tk_last_error() describes the problem for the calling thread.
 */

#ifndef TABKIT_H
#define TABKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
    TK_OK = 0,
    TK_E_PARSE,
    TK_E_LENGTH_MISMATCH,
    TK_E_NOT_WEAKLY_DECREASING,
    TK_E_EQUAL_LABEL_NOT_INCREASING,
    TK_E_LETTER_OUT_OF_RANGE,
    TK_E_NOT_A_PERMUTATION,
    TK_E_NOT_A_PARTITION_SHAPE,
    TK_E_ROW_NOT_DECREASING,
    TK_E_COLUMN_NOT_DECREASING,
    TK_E_EMPTY_CELL,
    TK_E_ROW_ORDER_VIOLATION,
    TK_E_COLUMN_ORDER_VIOLATION,
    TK_E_ENTRY_EXCEEDS_BOUND,
    TK_E_NOT_REMOVABLE,
    TK_E_INVALID_ALPHA,
    TK_E_NON_POSITIVE_VALUE,
    TK_E_DUPLICATE_LABEL_AT_CELL,
    TK_E_SHAPE_MISMATCH,
    TK_E_CELL_NOT_REMOVABLE,
    TK_E_NOT_REDUCED,
    TK_E_NOT_SEMISTANDARD,
    TK_E_OVERFLOW,
    TK_E_INVALID_ARGUMENT,
    TK_E_VERIFY_FAILED,
    TK_E_INTERNAL
} tk_status;

/* Opaque decreasing tableau. */
typedef struct tk_tableau tk_tableau;

/* Name of a status code, e.g. "NotRemovable". */
const char* tk_status_name(tk_status status);

/* Detail message for the most recent failure on this thread. */
const char* tk_last_error(void);

void tk_string_free(char* text);

/* --- decreasing tableaux ------------------------------------------------ */

/* Parses {"rows":[[...],...]}; validates the decreasing conditions. */
tk_status tk_tableau_from_json(const char* json, tk_tableau** out);
tk_status tk_tableau_to_json(const tk_tableau* tableau, char** json_out);
void tk_tableau_free(tk_tableau* tableau);

/* --- insertion ----------------------------------------------------------- */

/* Inserts a positive value; outcome document carries the new tableau, the
 * terminal cell, the alpha bit and (optionally) the case trace. */
tk_status tk_insert(const tk_tableau* tableau, int value, int with_trace,
                    char** outcome_json);

/* Reverse insertion at a removable cell (1-based row/col) with alpha 0/1;
 * outcome carries the new tableau, the ejected value and the alpha bits. */
tk_status tk_reverse_insert(const tk_tableau* tableau, int row, int col, int alpha,
                            int with_trace, char** outcome_json);

/* Bumping path of a removable cell as a JSON array, bottom row first. */
tk_status tk_bumping_path(const tk_tableau* tableau, int row, int col, char** path_json);

/* --- full correspondence -------------------------------------------------- */

/* {"a":[...],"i":[...]} -> {"P":...,"Q":...}.  increasing=0 is the
 * decreasing/set-valued flavor, increasing=1 the order-reversed one. */
tk_status tk_rsk(const char* pair_json, int increasing, char** tableaux_json);

/* {"P":...,"Q":...} -> {"a":[...],"i":[...]}; inverse of tk_rsk. */
tk_status tk_unrsk(const char* tableaux_json, int increasing, char** pair_json);

/* --- verification and enumeration ---------------------------------------- */

/* Expansion identity for one permutation (one-line JSON array), identity
 * 'G' or 'F'.  The report includes both truncated polynomials.  Returns
 * TK_E_VERIFY_FAILED when the sides differ. */
tk_status tk_verify_expansion(const char* w_json, int vars, int max_deg, char identity,
                              char** report_json);

/* Runs a named suite (examples|roundtrip|pieri|eg|expansion) with a JSON
 * config ({"sn":4,"vars":3,"max_deg":6,"max_len":6,"seed":...,"jobs":1,...});
 * returns TK_E_VERIFY_FAILED when any check fails. */
tk_status tk_verify_suite(const char* suite, const char* config_json, char** report_json);

/* Bijection sweep for one permutation with bounded length and labels. */
tk_status tk_verify_bijection(const char* w_json, int max_len, int labels,
                              char** report_json);

/* Streams an enumeration (hecke-words|dec-tableaux|svt) as JSON lines.
 * Config keys: w (one-line array), max_len, max_cells, shape, vars,
 * max_weight. */
tk_status tk_enumerate(const char* what, const char* config_json, char** jsonl_out);

#ifdef __cplusplus
}
#endif

#endif /* TABKIT_H */
