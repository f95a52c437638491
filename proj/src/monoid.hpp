#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "dfa.hpp"

namespace msokit {

// Finite monoid with one representative word per element. Instances come
// from build_sk (depth-k type classes under concatenation) and from
// syntactic_monoid (transition monoid of a minimal automaton).
struct FiniteMonoid {
  Alphabet alphabet;
  std::uint32_t size = 0;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> table;  // row-major: table[a*size+b]
  std::vector<Word> reps;
  std::vector<std::uint32_t> letter_image;
  int level = -1;  // k for S_k instances, -1 otherwise

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * size + b]; }
};

// Checks associativity and the identity laws; the full table for sizes up
// to 200, seeded samples beyond. Returns false with a witness in err.
bool monoid_check_laws(const FiniteMonoid& m, std::string& err);

// The monoid of depth-k equivalence classes of words: breadth-first
// closure from the empty word and the letters, multiplying representatives
// by generators on the right and deduplicating by type. Element order is
// discovery order, so tables and representatives are reproducible.
FiniteMonoid build_sk(const Alphabet& alphabet, int k);

// Fold of letter images; equals the class of the word's type.
std::uint32_t hom_eval(const FiniteMonoid& m, const Word& w);

// Projection S_{k+1} -> S_k: evaluate the representative one level down.
std::uint32_t parent_map(const FiniteMonoid& upper, const FiniteMonoid& lower, std::uint32_t e);

// The unique idempotent in {x, x^2, ...}, by cycle detection.
std::uint32_t idempotent_power(const FiniteMonoid& m, std::uint32_t x);

// Transition monoid of the minimal automaton; the induced congruence is
// the syntactic congruence of the language.
FiniteMonoid syntactic_monoid(const Dfa& a);

// {"size":n,"identity":i,"table":[[...]],"reps":["","a",...]}
std::string monoid_to_json(const FiniteMonoid& m);

// Formal term over the alphabet built from letters, concatenation and
// omega-power, denoting a point of the profinite completion.
struct OmegaTerm;
using OmegaTermPtr = std::shared_ptr<const OmegaTerm>;
struct OmegaTerm {
  enum class Kind { letter, concat, omega };
  Kind kind;
  int letter = -1;
  OmegaTermPtr left, right;  // concat
  OmegaTermPtr body;         // omega
};

OmegaTermPtr omega_letter(int symbol);
OmegaTermPtr omega_concat(OmegaTermPtr l, OmegaTermPtr r);
OmegaTermPtr omega_power(OmegaTermPtr body);
// term := SYM | term term | '(' term ')' | term '^w'
OmegaTermPtr parse_omega_term(const std::string& text, const Alphabet& alphabet);
std::string render_omega_term(const OmegaTermPtr& t, const Alphabet& alphabet);
// A term with no omega-powers denotes a finite word.
bool omega_term_is_word(const OmegaTermPtr& t);
Word omega_term_word(const OmegaTermPtr& t, const Alphabet& alphabet);

// Level-k value: letters through letter images, concatenation through the
// monoid, omega-power through the finite idempotent.
std::uint32_t omega_eval(const OmegaTermPtr& t, const FiniteMonoid& m);
std::uint32_t omega_eval(const OmegaTermPtr& t, const Alphabet& alphabet, int k);

// The level-wise values of a term, computed on demand; levels agree with
// the parent maps. Concurrent fills of the same level yield the same value.
class CoherentSequence {
 public:
  CoherentSequence(OmegaTermPtr term, Alphabet alphabet);
  std::uint32_t at(int k);
  const FiniteMonoid& monoid(int k);

 private:
  const FiniteMonoid& fill(int k);
  OmegaTermPtr term_;
  Alphabet alphabet_;
  std::mutex mutex_;
  std::map<int, std::pair<FiniteMonoid, std::uint32_t>> levels_;
};

// Whether the profinite point named by the term lies in the topological
// closure of the automaton's language: finds the smallest level within the
// build caps whose classes refine the language (verified by language
// inclusion of every class automaton) and tests the representative of the
// term's value there. For finite-word terms this is plain membership.
// ResourceError when no refining level is feasible, naming the sound bound.
bool member_closure(const Dfa& a, const OmegaTermPtr& t);

}  // namespace msokit
