#pragma once

#include <random>
#include <vector>

#include "alphabet.hpp"
#include "formula.hpp"

namespace msokit {

// Deterministic random sentences for property checks: closed, quantifier
// depth <= max_qd, at most max_set_vars distinct set variables. Uses raw
// mt19937 draws (no distribution objects) so output is identical across
// standard libraries.
std::vector<Formula> generate_corpus(const Alphabet& alphabet, std::size_t count, unsigned seed,
                                     int max_qd = 3, int max_set_vars = 2);

}  // namespace msokit
