#include "dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "caps.hpp"
#include "errors.hpp"

namespace msokit {

TrackedWord::TrackedWord(Word w, std::vector<std::vector<char>> t)
    : word(std::move(w)), tracks(std::move(t)) {
  for (const auto& track : tracks) {
    if (track.size() != word.size()) {
      throw InputError("tracked word: track length differs from word length");
    }
  }
}

void Dfa::validate() const {
  if (states == 0) throw InputError("dfa: no states");
  if (start >= states) throw InputError("dfa: start state out of range");
  if (accepting.size() != states) throw InputError("dfa: accepting vector size mismatch");
  if (delta.size() != static_cast<std::size_t>(states) * letters()) {
    throw InputError("dfa: transition table size mismatch");
  }
  for (std::uint32_t t : delta) {
    if (t >= states) throw InputError("dfa: transition target out of range");
  }
}

Dfa dfa_const(const Alphabet& base, int tracks, bool accept_all) {
  Dfa a;
  a.base = base;
  a.tracks = tracks;
  a.states = 1;
  a.start = 0;
  a.accepting = {accept_all ? char(1) : char(0)};
  a.delta.assign(a.letters(), 0);
  return a;
}

namespace {

void check_state_cap(std::size_t n, const char* stage) {
  if (n > caps().dfa_states) {
    throw ResourceError(std::string("dfa: state count exceeds cap during ") + stage);
  }
}

}  // namespace

bool dfa_accepts(const Dfa& a, const Word& w) {
  if (a.tracks != 0) throw InputError("accepts: automaton expects tracked words");
  if (!(w.alphabet() == a.base)) throw InputError("accepts: alphabet mismatch");
  std::uint32_t state = a.start;
  for (int letter : w.letters()) state = a.step(state, static_cast<std::uint32_t>(letter));
  return a.is_accepting(state);
}

bool dfa_accepts(const Dfa& a, const TrackedWord& w) {
  if (static_cast<int>(w.tracks.size()) != a.tracks) {
    throw InputError("accepts: track count mismatch");
  }
  if (!(w.word.alphabet() == a.base)) throw InputError("accepts: alphabet mismatch");
  std::uint32_t state = a.start;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    std::uint32_t bits = 0;
    for (std::size_t t = 0; t < w.tracks.size(); ++t) {
      if (w.tracks[t][i]) bits |= 1u << t;
    }
    std::uint32_t letter = (static_cast<std::uint32_t>(w.word.letter(i)) << a.tracks) | bits;
    state = a.step(state, letter);
  }
  return a.is_accepting(state);
}

Dfa dfa_complement(Dfa a) {
  for (auto& acc : a.accepting) acc = acc ? 0 : 1;
  return a;
}

Dfa dfa_product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& combine) {
  if (!(a.base == b.base) || a.tracks != b.tracks) {
    throw InputError("product: alphabet mismatch");
  }
  std::uint32_t letters = a.letters();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::deque<std::uint32_t> queue;
  auto intern = [&](std::uint32_t qa, std::uint32_t qb) {
    auto [it, inserted] = index.try_emplace({qa, qb}, static_cast<std::uint32_t>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(qa, qb);
      check_state_cap(pairs.size(), "product");
      queue.push_back(it->second);
    }
    return it->second;
  };
  Dfa out;
  out.base = a.base;
  out.tracks = a.tracks;
  out.start = intern(a.start, b.start);
  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    auto [qa, qb] = pairs[id];
    out.delta.resize((static_cast<std::size_t>(id) + 1) * letters);
    for (std::uint32_t l = 0; l < letters; ++l) {
      out.delta[static_cast<std::size_t>(id) * letters + l] = intern(a.step(qa, l), b.step(qb, l));
    }
  }
  out.states = static_cast<std::uint32_t>(pairs.size());
  out.delta.resize(static_cast<std::size_t>(out.states) * letters);
  out.accepting.resize(out.states);
  for (std::uint32_t id = 0; id < out.states; ++id) {
    out.accepting[id] =
        combine(a.is_accepting(pairs[id].first), b.is_accepting(pairs[id].second)) ? 1 : 0;
  }
  return out;
}

namespace {

// Subset construction over an NFA given as a move function on canonical
// sorted state sets.
Dfa determinize(const Alphabet& base, int tracks, std::uint32_t letters,
                std::vector<std::uint32_t> start_set,
                const std::function<std::vector<std::uint32_t>(const std::vector<std::uint32_t>&,
                                                               std::uint32_t)>& move,
                const std::function<bool(const std::vector<std::uint32_t>&)>& accepting) {
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> sets;
  std::deque<std::uint32_t> queue;
  auto intern = [&](std::vector<std::uint32_t> set) {
    auto [it, inserted] = index.try_emplace(set, static_cast<std::uint32_t>(sets.size()));
    if (inserted) {
      sets.push_back(std::move(set));
      check_state_cap(sets.size(), "determinization");
      queue.push_back(it->second);
    }
    return it->second;
  };
  Dfa out;
  out.base = base;
  out.tracks = tracks;
  out.start = intern(std::move(start_set));
  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    out.delta.resize((static_cast<std::size_t>(id) + 1) * letters);
    for (std::uint32_t l = 0; l < letters; ++l) {
      std::vector<std::uint32_t> next = move(sets[id], l);
      out.delta[static_cast<std::size_t>(id) * letters + l] = intern(std::move(next));
    }
  }
  out.states = static_cast<std::uint32_t>(sets.size());
  out.delta.resize(static_cast<std::size_t>(out.states) * letters);
  out.accepting.resize(out.states);
  for (std::uint32_t id = 0; id < out.states; ++id) {
    out.accepting[id] = accepting(sets[id]) ? 1 : 0;
  }
  return out;
}

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Dfa dfa_project_last_track(const Dfa& a) {
  if (a.tracks == 0) throw InputError("project: automaton has no tracks");
  int tracks = a.tracks - 1;
  std::uint32_t high = 1u << tracks;
  std::uint32_t letters = static_cast<std::uint32_t>(a.base.size()) << tracks;
  auto expand = [&](std::uint32_t letter) {
    std::uint32_t sym = letter >> tracks;
    std::uint32_t bits = letter & (high - 1);
    std::uint32_t base_letter = (sym << a.tracks) | bits;
    return std::pair<std::uint32_t, std::uint32_t>(base_letter, base_letter | high);
  };
  auto move = [&](const std::vector<std::uint32_t>& set, std::uint32_t letter) {
    auto [zero, one] = expand(letter);
    std::vector<std::uint32_t> next;
    next.reserve(set.size() * 2);
    for (std::uint32_t q : set) {
      next.push_back(a.step(q, zero));
      next.push_back(a.step(q, one));
    }
    return sorted_unique(std::move(next));
  };
  auto accepting = [&](const std::vector<std::uint32_t>& set) {
    return std::any_of(set.begin(), set.end(), [&](std::uint32_t q) { return a.is_accepting(q); });
  };
  Dfa out = determinize(a.base, tracks, letters, {a.start}, move, accepting);
  return dfa_minimize(out);
}

Dfa dfa_minimize(const Dfa& a) {
  std::uint32_t letters = a.letters();
  // reachable states first
  std::vector<std::uint32_t> order;
  std::vector<std::int32_t> reach(a.states, -1);
  order.push_back(a.start);
  reach[a.start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::uint32_t l = 0; l < letters; ++l) {
      std::uint32_t next = a.step(order[i], l);
      if (reach[next] < 0) {
        reach[next] = static_cast<std::int32_t>(order.size());
        order.push_back(next);
      }
    }
  }
  // Moore partition refinement on the reachable part
  std::vector<std::uint32_t> block(a.states, 0);
  for (std::uint32_t q : order) block[q] = a.is_accepting(q) ? 1 : 0;
  std::uint32_t block_count = 2;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_index;
    std::vector<std::uint32_t> next_block(a.states, 0);
    for (std::uint32_t q : order) {
      std::vector<std::uint32_t> signature;
      signature.reserve(letters + 1);
      signature.push_back(block[q]);
      for (std::uint32_t l = 0; l < letters; ++l) signature.push_back(block[a.step(q, l)]);
      auto [it, inserted] =
          signature_index.try_emplace(std::move(signature),
                                      static_cast<std::uint32_t>(signature_index.size()));
      (void)inserted;
      next_block[q] = it->second;
    }
    std::uint32_t next_count = static_cast<std::uint32_t>(signature_index.size());
    block = std::move(next_block);
    if (next_count == block_count) break;
    block_count = next_count;
  }
  // canonical renumbering: breadth-first over blocks from the start
  std::vector<std::int32_t> renumber(block_count, -1);
  std::vector<std::uint32_t> representative;
  std::deque<std::uint32_t> queue;
  auto visit = [&](std::uint32_t q) {
    if (renumber[block[q]] < 0) {
      renumber[block[q]] = static_cast<std::int32_t>(representative.size());
      representative.push_back(q);
      queue.push_back(q);
    }
  };
  visit(a.start);
  while (!queue.empty()) {
    std::uint32_t q = queue.front();
    queue.pop_front();
    for (std::uint32_t l = 0; l < letters; ++l) visit(a.step(q, l));
  }
  Dfa out;
  out.base = a.base;
  out.tracks = a.tracks;
  out.states = static_cast<std::uint32_t>(representative.size());
  out.start = static_cast<std::uint32_t>(renumber[block[a.start]]);
  out.accepting.resize(out.states);
  out.delta.resize(static_cast<std::size_t>(out.states) * letters);
  for (std::uint32_t id = 0; id < out.states; ++id) {
    std::uint32_t q = representative[id];
    out.accepting[id] = a.is_accepting(q) ? 1 : 0;
    for (std::uint32_t l = 0; l < letters; ++l) {
      out.delta[static_cast<std::size_t>(id) * letters + l] =
          static_cast<std::uint32_t>(renumber[block[a.step(q, l)]]);
    }
  }
  return out;
}

Dfa dfa_concat(const Dfa& a, const Dfa& b) {
  if (!(a.base == b.base)) throw InputError("concat: alphabet mismatch");
  if (a.tracks != 0 || b.tracks != 0) throw InputError("concat: tracked automata unsupported");
  std::uint32_t letters = a.letters();
  // NFA states: a-state q, or b-state q + a.states. Epsilon from accepting
  // a-states into b's start is folded into the closure.
  std::uint32_t b_offset = a.states;
  auto close = [&](std::vector<std::uint32_t> set) {
    bool add_b_start = false;
    for (std::uint32_t q : set) {
      if (q < b_offset && a.is_accepting(q)) add_b_start = true;
    }
    if (add_b_start) set.push_back(b_offset + b.start);
    return sorted_unique(std::move(set));
  };
  auto move = [&](const std::vector<std::uint32_t>& set, std::uint32_t letter) {
    std::vector<std::uint32_t> next;
    next.reserve(set.size());
    for (std::uint32_t q : set) {
      if (q < b_offset) {
        next.push_back(a.step(q, letter));
      } else {
        next.push_back(b_offset + b.step(q - b_offset, letter));
      }
    }
    return close(std::move(next));
  };
  auto accepting = [&](const std::vector<std::uint32_t>& set) {
    return std::any_of(set.begin(), set.end(), [&](std::uint32_t q) {
      return q >= b_offset && b.is_accepting(q - b_offset);
    });
  };
  Dfa out = determinize(a.base, 0, letters, close({a.start}), move, accepting);
  return dfa_minimize(out);
}

bool dfa_is_empty(const Dfa& a) {
  std::vector<char> seen(a.states, 0);
  std::deque<std::uint32_t> queue{a.start};
  seen[a.start] = 1;
  while (!queue.empty()) {
    std::uint32_t q = queue.front();
    queue.pop_front();
    if (a.is_accepting(q)) return false;
    for (std::uint32_t l = 0; l < a.letters(); ++l) {
      std::uint32_t next = a.step(q, l);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return true;
}

std::optional<Word> dfa_difference_witness(const Dfa& a, const Dfa& b) {
  if (!(a.base == b.base) || a.tracks != 0 || b.tracks != 0) {
    throw InputError("difference: automata not comparable");
  }
  std::uint32_t letters = a.letters();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::pair<std::uint32_t, std::uint32_t>, int>>
      parent;  // pair -> (predecessor pair, letter)
  std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
  auto start = std::make_pair(a.start, b.start);
  parent[start] = {start, -1};
  queue.push_back(start);
  while (!queue.empty()) {
    auto pair = queue.front();
    queue.pop_front();
    if (a.is_accepting(pair.first) != b.is_accepting(pair.second)) {
      std::vector<int> letters_rev;
      auto cursor = pair;
      while (parent[cursor].second >= 0) {
        letters_rev.push_back(parent[cursor].second);
        cursor = parent[cursor].first;
      }
      std::reverse(letters_rev.begin(), letters_rev.end());
      return Word(a.base, std::move(letters_rev));
    }
    for (std::uint32_t l = 0; l < letters; ++l) {
      auto next = std::make_pair(a.step(pair.first, l), b.step(pair.second, l));
      if (parent.find(next) == parent.end()) {
        parent[next] = {pair, static_cast<int>(l)};
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

bool dfa_equivalent(const Dfa& a, const Dfa& b) { return !dfa_difference_witness(a, b).has_value(); }

std::string dfa_to_json(const Dfa& a) {
  if (a.tracks != 0) throw InputError("dfa json: only track-free automata are serialisable");
  nlohmann::ordered_json j;
  j["alphabet"] = a.base.symbols();
  j["states"] = a.states;
  j["start"] = a.start;
  std::vector<std::uint32_t> accepting;
  for (std::uint32_t q = 0; q < a.states; ++q) {
    if (a.is_accepting(q)) accepting.push_back(q);
  }
  j["accepting"] = accepting;
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(a.states);
  for (std::uint32_t q = 0; q < a.states; ++q) {
    std::vector<std::uint32_t> row;
    row.reserve(a.letters());
    for (std::uint32_t l = 0; l < a.letters(); ++l) row.push_back(a.step(q, l));
    rows.push_back(std::move(row));
  }
  j["delta"] = rows;
  return j.dump();
}

Dfa dfa_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("dfa json: ") + e.what());
  }
  try {
    Dfa a;
    a.base = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    a.tracks = 0;
    a.states = j.at("states").get<std::uint32_t>();
    a.start = j.at("start").get<std::uint32_t>();
    a.accepting.assign(a.states, 0);
    for (std::uint32_t q : j.at("accepting").get<std::vector<std::uint32_t>>()) {
      if (q >= a.states) throw InputError("dfa json: accepting state out of range");
      a.accepting[q] = 1;
    }
    auto rows = j.at("delta").get<std::vector<std::vector<std::uint32_t>>>();
    if (rows.size() != a.states) throw InputError("dfa json: delta row count mismatch");
    for (const auto& row : rows) {
      if (row.size() != a.letters()) throw InputError("dfa json: delta column count mismatch");
      a.delta.insert(a.delta.end(), row.begin(), row.end());
    }
    a.validate();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("dfa json: ") + e.what());
  }
}

}  // namespace msokit
