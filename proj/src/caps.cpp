#include "caps.hpp"

#include <cstdlib>

namespace msokit {

namespace {
Caps g_caps;
}

Caps& caps() { return g_caps; }

void set_caps(const Caps& c) { g_caps = c; }

bool parse_caps(const std::string& spec, Caps& into, std::string& err) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      err = "expected key=value, got '" + item + "'";
      return false;
    }
    std::string key = item.substr(0, eq);
    long value = 0;
    try {
      value = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      err = "non-numeric value in '" + item + "'";
      return false;
    }
    if (value < 0) {
      err = "negative value in '" + item + "'";
      return false;
    }
    if (key == "pos0") into.type_positions[0] = static_cast<int>(value);
    else if (key == "pos1") into.type_positions[1] = static_cast<int>(value);
    else if (key == "pos2") into.type_positions[2] = static_cast<int>(value);
    else if (key == "pos3") into.type_positions[3] = static_cast<int>(value);
    else if (key == "eval1") into.eval_positions_shallow = static_cast<int>(value);
    else if (key == "eval2") into.eval_positions_deep = static_cast<int>(value);
    else if (key == "struct") into.structure_positions = static_cast<int>(value);
    else if (key == "dfa") into.dfa_states = static_cast<std::uint32_t>(value);
    else if (key == "monoid") into.monoid_size = static_cast<std::uint32_t>(value);
    else if (key == "tracks") into.tracks = static_cast<int>(value);
    else if (key == "sk1") into.sk_max_k_unary = static_cast<int>(value);
    else if (key == "sk2") into.sk_max_k_binary = static_cast<int>(value);
    else {
      err = "unknown cap key '" + key + "'";
      return false;
    }
  }
  return true;
}

bool apply_env_caps(std::string& err) {
  const char* env = std::getenv("MSOKIT_CAPS");
  if (env == nullptr) return true;
  Caps next = g_caps;
  if (!parse_caps(env, next, err)) return false;
  g_caps = next;
  return true;
}

}  // namespace msokit
