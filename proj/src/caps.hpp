#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace msokit {

// Resource limits for operations whose cost is exponential in structure
// size or type depth. Exceeding a cap raises ResourceError.
struct Caps {
  // Max word positions for depth-k type computation, indexed by k.
  std::array<int, 4> type_positions{16, 12, 8, 6};
  int max_type_depth = 3;
  // Max positions for brute-force evaluation, by quantifier depth.
  int eval_positions_shallow = 12;  // qd <= 1
  int eval_positions_deep = 8;      // qd >= 2
  // Max positions for any structure whose full universe gets enumerated.
  int structure_positions = 12;
  std::uint32_t dfa_states = 100000;
  std::uint32_t monoid_size = 10000;
  int tracks = 6;
  // build_sk feasibility: max k by alphabet size.
  int sk_max_k_unary = 2;
  int sk_max_k_binary = 1;

  int type_cap(int k) const {
    if (k < 0) return 0;
    return k < static_cast<int>(type_positions.size())
               ? type_positions[static_cast<std::size_t>(k)]
               : 0;
  }
  int sk_max_k(std::size_t alphabet_size) const {
    if (alphabet_size <= 1) return sk_max_k_unary;
    if (alphabet_size == 2) return sk_max_k_binary;
    return 0;
  }
};

Caps& caps();
void set_caps(const Caps& c);

// Parses a spec like "pos0=16,pos1=12,pos2=8,pos3=6,eval1=12,eval2=8,
// struct=12,dfa=100000,monoid=10000,tracks=6,sk1=2,sk2=1" into `into`.
// Unknown keys or non-numeric values return false with a message in `err`.
bool parse_caps(const std::string& spec, Caps& into, std::string& err);

// Applies the MSOKIT_CAPS environment variable, if set. Returns false and
// leaves caps untouched when the variable is present but malformed.
bool apply_env_caps(std::string& err);

}  // namespace msokit
