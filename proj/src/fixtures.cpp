#include "fixtures.hpp"

namespace msokit {
namespace fixtures {

namespace {

Dfa build(const Alphabet& alphabet, std::uint32_t states, std::uint32_t start,
          std::vector<char> accepting, std::vector<std::uint32_t> delta) {
  Dfa a;
  a.base = alphabet;
  a.tracks = 0;
  a.states = states;
  a.start = start;
  a.accepting = std::move(accepting);
  a.delta = std::move(delta);
  a.validate();
  return a;
}

const Alphabet& ab() {
  static Alphabet alphabet = Alphabet::from_chars("ab");
  return alphabet;
}

const Alphabet& unary() {
  static Alphabet alphabet = Alphabet::from_chars("a");
  return alphabet;
}

}  // namespace

Dfa sigma_star(const Alphabet& alphabet) {
  std::vector<std::uint32_t> delta(alphabet.size(), 0);
  return build(alphabet, 1, 0, {1}, std::move(delta));
}

Dfa even_length_unary() { return build(unary(), 2, 0, {1, 0}, {1, 0}); }

Dfa at_least_two_unary() { return build(unary(), 3, 0, {0, 0, 1}, {1, 2, 2}); }

Dfa contains_ab() {
  // 0: no a pending, 1: a pending, 2: seen ab
  return build(ab(), 3, 0, {0, 0, 1},
               {
                   1, 0,  // from 0 on a,b
                   1, 2,  // from 1
                   2, 2,  // from 2
               });
}

Dfa contains_b() {
  return build(ab(), 2, 0, {0, 1},
               {
                   0, 1,
                   1, 1,
               });
}

Dfa length_mod_three() {
  return build(ab(), 3, 0, {1, 0, 0},
               {
                   1, 1,
                   2, 2,
                   0, 0,
               });
}

Dfa ends_in_b() {
  return build(ab(), 2, 0, {0, 1},
               {
                   0, 1,
                   0, 1,
               });
}

}  // namespace fixtures
}  // namespace msokit
