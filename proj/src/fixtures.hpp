#pragma once

#include "dfa.hpp"

namespace msokit {
namespace fixtures {

// All words over the alphabet.
Dfa sigma_star(const Alphabet& alphabet);
// Even powers of a, over {a}.
Dfa even_length_unary();
// At least two letters, over {a}.
Dfa at_least_two_unary();
// Words containing the factor ab, over {a,b}.
Dfa contains_ab();
// Words containing at least one b, over {a,b}.
Dfa contains_b();
// Length divisible by three, over {a,b}.
Dfa length_mod_three();
// Words ending in b, over {a,b}.
Dfa ends_in_b();

}  // namespace fixtures
}  // namespace msokit
