/* multikit C API: computational algebra for finite structures with
 * multivalued addition and multiplication.
 *
 * All functions return mk_status; output parameters are only written on
 * MK_OK. Strings returned through char** are heap-allocated and must be
 * released with mk_string_free; structure handles with mk_structure_free.
 * mk_last_error() describes the most recent failure on this thread.
 */

#ifndef MULTIKIT_H
#define MULTIKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mk_structure mk_structure;

typedef enum mk_status {
    MK_OK = 0,
    MK_ERR_USAGE = 1,   /* bad argument: unknown name, format, mode, ... */
    MK_ERR_PARSE = 2,   /* malformed table file, polynomial or map text */
    MK_ERR_DOMAIN = 3,  /* precondition violated (not a superfield, ...) */
    MK_ERR_LIMIT = 4,   /* configured search or size bound exceeded */
    MK_ERR_INTERNAL = 5
} mk_status;

const char* mk_version(void);

/* Most recent error message on the calling thread ("" when none). */
const char* mk_last_error(void);

void mk_string_free(char* s);
void mk_structure_free(mk_structure* s);

/* Builtin structures: krasner, q2, hN (N prime), xN, fQ (small orders), l9. */
mk_status mk_structure_builtin(const char* name, mk_structure** out);
/* Parse the line-oriented table format. */
mk_status mk_structure_parse(const char* text, mk_structure** out);
mk_status mk_structure_serialize(const mk_structure* s, char** out_text);

mk_status mk_structure_size(const mk_structure* s, unsigned* out);
mk_status mk_structure_name(const mk_structure* s, char** out_text);

/* Classification report / characteristic / ideal enumeration. */
mk_status mk_validate_json(const mk_structure* s, char** out_json);
mk_status mk_characteristic(const mk_structure* s, unsigned* out);
mk_status mk_ideals_json(const mk_structure* s, unsigned max_carrier, char** out_json);

/* Candidate map "a:b,c:d,..." between two structures. */
mk_status mk_classify_map_json(const mk_structure* dom, const mk_structure* cod,
                               const char* map_text, char** out_json);
/* found is 0/1; out_map (optional) receives the map text when found. */
mk_status mk_find_isomorphism(const mk_structure* a, const mk_structure* b, int* found,
                              char** out_map);

/* Polynomials in the term syntax "c*X^k" joined by '+'. */
mk_status mk_poly_eval_json(const mk_structure* s, const char* poly, const char* point,
                            char** out_json);
mk_status mk_poly_mul_json(const mk_structure* s, const char* f, const char* g, char** out_json);
mk_status mk_poly_div_json(const mk_structure* s, const char* f, const char* g, char** out_json);
mk_status mk_poly_roots_json(const mk_structure* s, const char* f, char** out_json);
mk_status mk_irreducible_json(const mk_structure* s, const char* p, char** out_json);

/* Quotient by an irreducible polynomial; mode "strict" or "saturated",
 * sat_degree 0 for the default. */
mk_status mk_quotient(const mk_structure* s, const char* p, const char* mode,
                      unsigned sat_degree, mk_structure** out);
mk_status mk_quotient_json(const mk_structure* s, const char* p, const char* mode,
                           unsigned sat_degree, char** out_json);
mk_status mk_extend_json(const mk_structure* s, const char* p, const char* mode,
                         char** out_json);

/* Bounded closure tower; optionally returns the top structure. */
mk_status mk_closure_json(const mk_structure* s, unsigned max_degree, unsigned max_steps,
                          char** out_json, mk_structure** out_top);

/* Re-derive the registered worked-example claims. all_expected is 0/1. */
mk_status mk_conformance_json(char** out_json, int* all_expected);
mk_status mk_conformance_text(char** out_text, int* all_expected);

/* Command-shaped entry points mirroring the CLI: ref is "builtin:<name>"
 * or a file path; format "text" or "json". exit_code follows the CLI
 * convention (0 ok, 1 check failure, 2 usage). Output goes to out_text. */
mk_status mk_run_validate(const char* ref, const char* format, char** out_text, int* exit_code);
mk_status mk_run_char(const char* ref, const char* format, char** out_text, int* exit_code);
mk_status mk_run_table(const char* ref, const char* format, char** out_text, int* exit_code);
mk_status mk_run_ideals(const char* ref, unsigned max_carrier, const char* format,
                        char** out_text, int* exit_code);
mk_status mk_run_morphism(const char* dom_ref, const char* cod_ref, const char* map_text,
                          const char* format, char** out_text, int* exit_code);
mk_status mk_run_iso(const char* a_ref, const char* b_ref, const char* format, char** out_text,
                     int* exit_code);
mk_status mk_run_poly_eval(const char* ref, const char* poly, const char* point,
                           const char* format, char** out_text, int* exit_code);
mk_status mk_run_poly_mul(const char* ref, const char* f, const char* g, const char* format,
                          char** out_text, int* exit_code);
mk_status mk_run_poly_div(const char* ref, const char* f, const char* g, const char* format,
                          char** out_text, int* exit_code);
mk_status mk_run_poly_roots(const char* ref, const char* f, const char* format, char** out_text,
                            int* exit_code);
mk_status mk_run_irred(const char* ref, const char* p, const char* format, char** out_text,
                       int* exit_code);
mk_status mk_run_quotient(const char* ref, const char* p, const char* mode, unsigned sat_degree,
                          const char* format, char** out_text, int* exit_code);
mk_status mk_run_extend(const char* ref, const char* p, const char* mode, const char* format,
                        char** out_text, int* exit_code);
mk_status mk_run_closure(const char* ref, unsigned max_degree, unsigned max_steps,
                         const char* format, const char* manifest_dir, char** out_text,
                         int* exit_code);
mk_status mk_run_conformance(const char* format, char** out_text, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* MULTIKIT_H */
