#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alphabet.hpp"

namespace msokit {

// A base word together with m parallel 0/1 tracks of the same length,
// encoding a valuation of m set variables.
struct TrackedWord {
  Word word;
  std::vector<std::vector<char>> tracks;

  TrackedWord(Word w, std::vector<std::vector<char>> t);
};

// Total deterministic automaton over the base alphabet extended by
// `tracks` binary tracks. Letters are encoded (symbol << tracks) | bits,
// with track j at bit j; columns of `delta` follow that letter order.
struct Dfa {
  Alphabet base;
  int tracks = 0;
  std::uint32_t states = 0;
  std::uint32_t start = 0;
  std::vector<char> accepting;       // indexed by state
  std::vector<std::uint32_t> delta;  // states x letters, row-major

  std::uint32_t letters() const {
    return static_cast<std::uint32_t>(base.size()) << tracks;
  }
  std::uint32_t step(std::uint32_t state, std::uint32_t letter) const {
    return delta[state * letters() + letter];
  }
  bool is_accepting(std::uint32_t state) const { return accepting[state] != 0; }
  void validate() const;
};

Dfa dfa_const(const Alphabet& base, int tracks, bool accept_all);

bool dfa_accepts(const Dfa& a, const Word& w);
bool dfa_accepts(const Dfa& a, const TrackedWord& w);

Dfa dfa_complement(Dfa a);
// Boolean product; `combine` merges acceptance of the two factors.
Dfa dfa_product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& combine);
// Removes the highest track, determinizes (canonical sorted subsets) and
// minimizes.
Dfa dfa_project_last_track(const Dfa& a);
// Partition refinement; states renumbered breadth-first from the start so
// output is canonical. Keeps the automaton total.
Dfa dfa_minimize(const Dfa& a);
// Language concatenation via nondeterministic splicing, then subset
// construction and minimization. Base alphabets must agree, tracks 0.
Dfa dfa_concat(const Dfa& a, const Dfa& b);

bool dfa_is_empty(const Dfa& a);
// Shortest word accepted by exactly one of the two automata, if any.
std::optional<Word> dfa_difference_witness(const Dfa& a, const Dfa& b);
bool dfa_equivalent(const Dfa& a, const Dfa& b);

// {"alphabet":[...],"states":N,"start":s,"accepting":[...],"delta":[[...]]}
// Only track-free automata have a file form.
std::string dfa_to_json(const Dfa& a);
Dfa dfa_from_json(const std::string& text);

}  // namespace msokit
