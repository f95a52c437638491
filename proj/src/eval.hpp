#pragma once

#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "structure.hpp"

namespace msokit {

// Partial map variable name -> element, scanned back to front so inner
// bindings shadow outer ones.
using Assignment = std::vector<std::pair<std::string, Elem>>;

// Tarskian truth by structural recursion: set quantifiers range over the
// whole universe, atom quantifiers over the atoms, connectives short
// circuit. No memoisation across calls; this is the reference oracle the
// compiler is checked against.
bool evaluate(const Structure& s, const Formula& f, const Assignment& assignment = {});

struct AxiomReport {
  struct Line {
    std::string name;
    bool pass;
  };
  std::vector<Line> lines;
  bool all_pass = true;
  std::string str() const;
};

// Evaluates every axiom (plus comprehension instances for the corpus) in
// the structure of the given word.
AxiomReport check_axioms(const Word& word, const std::vector<ComprehensionPattern>& corpus);
AxiomReport check_axioms(const Word& word);

}  // namespace msokit
