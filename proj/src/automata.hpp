#pragma once

#include <string>
#include <vector>

#include "dfa.hpp"
#include "formula.hpp"

namespace msokit {

// Compiles a formula to a DFA over base x {0,1}^|free_order| accepting
// exactly the tracked words whose valuation satisfies it. Track j carries
// free_order[j]; free variables of the formula must appear in free_order.
// Atom-sorted free variables are constrained to singleton tracks. The
// construction is structural: small automata for the atomic relations,
// complement and products for the connectives, and track projection with
// determinization and immediate minimization for the quantifiers.
Dfa compile(const Formula& f, const Alphabet& alphabet,
            const std::vector<std::string>& free_order = {});

struct SentenceEncoding {
  Formula sentence;
  int depth;  // quantifier depth of the sentence
};

// The run encoding of an automaton as a sentence: existential state
// colourings, constraints at the first position, successor-respecting
// transitions (successor defined from <), and acceptance at the last
// position; an explicit empty-word disjunct when the start state accepts.
// For every word, the sentence holds in its structure iff the automaton
// accepts the word.
SentenceEncoding dfa_to_sentence(const Dfa& a);

// qd of the run encoding: a depth k at which equivalence of words refines
// the syntactic congruence of the automaton's language. Sound, not
// claimed minimal.
int cofinal_k(const Dfa& a);

}  // namespace msokit
