#pragma once

#include <string>

#include "alphabet.hpp"
#include "formula.hpp"

namespace msokit {

// Grammar (UTF-8 text):
//   formula := 'true' | 'false' | term '=' term | term '<=' term
//            | term '<' term | 'at' '(' term ')' | 'P_' SYM '(' term ')'
//            | VAR '(' term ')'              -- sugar for term <= VAR
//            | '!' formula
//            | formula '&' formula | formula '|' formula
//            | formula '->' formula | formula '<->' formula
//            | 'ex' VAR '.' formula | 'all' VAR '.' formula | '(' formula ')'
//   term := VAR | 'empty'
// Precedence ! > & > | > -> > <->; '&','|' associate left, '->','<->'
// right; quantifier scope extends maximally to the right. Leading
// uppercase identifiers are set variables, lowercase atom variables.
Formula parse_formula(const std::string& text, const Alphabet& alphabet);

// Inverse of parse_formula up to structural equality. Parentheses are
// inserted exactly where precedence requires them.
std::string render_formula(const Formula& f);

}  // namespace msokit
