/* msokit — monadic second-order logic on finite words, as a C library.
 *
 * All functions return a status code; boolean answers arrive through out
 * parameters. Strings returned through char** are heap-allocated and must
 * be released with msokit_string_free. Handles are opaque and freed with
 * their matching _free function. msokit_last_error() describes the most
 * recent failure on the calling thread.
 */
#ifndef MSOKIT_H
#define MSOKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msokit_status {
  MSOKIT_OK = 0,
  MSOKIT_ERR_INPUT = 2,    /* malformed input or violated precondition */
  MSOKIT_ERR_RESOURCE = 3, /* a configured cap would be exceeded */
  MSOKIT_ERR_INTERNAL = 4
} msokit_status;

typedef struct msokit_dfa msokit_dfa;
typedef struct msokit_monoid msokit_monoid;

const char* msokit_version(void);
const char* msokit_last_error(void);
void msokit_string_free(char* s);

/* Overrides resource caps, e.g. "pos2=8,eval2=8,dfa=100000,monoid=10000".
 * Keys: pos0..pos3 (type depth position caps), eval1/eval2 (evaluator),
 * struct (enumerated structures), dfa, monoid, tracks, sk1/sk2 (closure
 * depth for 1- and 2-letter alphabets). NULL restores the defaults. */
msokit_status msokit_set_caps(const char* spec);

/* Alphabets are strings of distinct single-character symbols ("ab");
 * words are strings over them, "" being the empty word. */

/* Model checking: truth of a sentence in the structure of a word. */
msokit_status msokit_eval(const char* alphabet, const char* word, const char* formula,
                          int* result);

/* Evaluates the axiom set plus the bundled comprehension instances in the
 * word's structure. The report has one line per sentence. */
msokit_status msokit_check_axioms(const char* alphabet, const char* word, int json_format,
                                  int* all_pass, char** report);

/* Sentence to automaton over the base alphabet. */
msokit_status msokit_compile(const char* alphabet, const char* formula, int minimize,
                             msokit_dfa** out);
msokit_status msokit_dfa_from_json(const char* json, msokit_dfa** out);
msokit_status msokit_dfa_to_json(const msokit_dfa* dfa, char** json);
msokit_status msokit_dfa_accepts(const msokit_dfa* dfa, const char* word, int* result);
msokit_status msokit_dfa_states(const msokit_dfa* dfa, unsigned* states);
/* A depth at which word equivalence refines the syntactic congruence of
 * the automaton's language (sound bound from the run encoding). */
msokit_status msokit_cofinal_k(const msokit_dfa* dfa, unsigned* k);
void msokit_dfa_free(msokit_dfa* dfa);

/* Agreement of two words on all sentences of quantifier depth <= k. */
msokit_status msokit_equiv(const char* alphabet, unsigned k, const char* w1, const char* w2,
                           int* result);
/* Rendered spoiler strategy when the words differ at depth k; *rendered is
 * set to NULL when they are equivalent. */
msokit_status msokit_witness(const char* alphabet, unsigned k, const char* w1, const char* w2,
                             char** rendered);

/* The monoid of depth-k word classes. */
msokit_status msokit_monoid_build(const char* alphabet, unsigned k, msokit_monoid** out);
msokit_status msokit_monoid_to_json(const msokit_monoid* monoid, char** json);
msokit_status msokit_monoid_size(const msokit_monoid* monoid, unsigned* size);
void msokit_monoid_free(msokit_monoid* monoid);

/* Level-k value of an omega-term such as "(ab)^w a"; also returns the
 * representative word of the class. */
msokit_status msokit_omega_eval(const char* alphabet, unsigned k, const char* term,
                                unsigned* element, char** representative);
/* Whether the profinite point named by the term lies in the closure of
 * the automaton's language. */
msokit_status msokit_member_closure(const msokit_dfa* dfa, const char* term, int* result);

/* Dual-space check for the level-k algebra: point count, functionality of
 * the dual relation, and whether it is the graph of the product. */
msokit_status msokit_duality_check(const char* alphabet, unsigned k, unsigned* points,
                                   int* functional, int* graph);

/* The full property suite; one line per criterion in the report. */
msokit_status msokit_selftest(unsigned seed, int json_format, int* all_pass, char** report);

#ifdef __cplusplus
}
#endif

#endif /* MSOKIT_H */
