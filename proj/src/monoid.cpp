#include "monoid.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "automata.hpp"
#include "caps.hpp"
#include "errors.hpp"
#include "ktype.hpp"
#include "structure.hpp"

namespace msokit {

bool monoid_check_laws(const FiniteMonoid& m, std::string& err) {
  for (std::uint32_t a = 0; a < m.size; ++a) {
    if (m.mul(m.identity, a) != a || m.mul(a, m.identity) != a) {
      err = "identity law fails at element " + std::to_string(a);
      return false;
    }
  }
  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
      err = "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
            std::to_string(c) + ")";
      return false;
    }
    return true;
  };
  if (m.size <= 200) {
    for (std::uint32_t a = 0; a < m.size; ++a) {
      for (std::uint32_t b = 0; b < m.size; ++b) {
        for (std::uint32_t c = 0; c < m.size; ++c) {
          if (!check_triple(a, b, c)) return false;
        }
      }
    }
  } else {
    std::mt19937 rng(0);
    for (int i = 0; i < 200000; ++i) {
      if (!check_triple(rng() % m.size, rng() % m.size, rng() % m.size)) return false;
    }
  }
  return true;
}

FiniteMonoid build_sk(const Alphabet& alphabet, int k) {
  if (k < 0 || k > caps().sk_max_k(alphabet.size())) {
    throw ResourceError("build_sk: k = " + std::to_string(k) + " is beyond the cap for a " +
                        std::to_string(alphabet.size()) + "-letter alphabet");
  }
  TypeStore store;
  auto type_of = [&](const Word& w) { return tp(*mso(w), {}, k, store); };

  FiniteMonoid m;
  m.alphabet = alphabet;
  m.level = k;

  std::unordered_map<TypeId, std::uint32_t> index;
  std::deque<std::uint32_t> queue;
  auto intern = [&](const Word& w) {
    TypeId t;
    try {
      t = type_of(w);
    } catch (const ResourceError& e) {
      throw ResourceError("build_sk: representative '" + w.str() +
                          "' exceeds the type cap before closure (" +
                          std::to_string(index.size()) + " classes found so far): " + e.what());
    }
    auto [it, inserted] = index.try_emplace(t, static_cast<std::uint32_t>(m.reps.size()));
    if (inserted) {
      if (m.reps.size() >= caps().monoid_size) {
        throw ResourceError("build_sk: monoid size cap exceeded");
      }
      m.reps.push_back(w);
      queue.push_back(it->second);
    }
    return it->second;
  };

  m.identity = intern(Word(alphabet));
  m.letter_image.reserve(alphabet.size());
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    m.letter_image.push_back(intern(Word(alphabet, {static_cast<int>(s)})));
  }
  // letter edges discovered during the closure; rows appended as classes appear
  std::vector<std::vector<std::uint32_t>> step;
  while (!queue.empty()) {
    std::uint32_t e = queue.front();
    queue.pop_front();
    while (step.size() <= e) step.emplace_back(alphabet.size(), 0);
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
      Word extended = concat(m.reps[e], Word(alphabet, {static_cast<int>(s)}));
      step[e][s] = intern(extended);
    }
  }
  while (step.size() < m.reps.size()) step.emplace_back(alphabet.size(), 0);

  m.size = static_cast<std::uint32_t>(m.reps.size());
  // The product of two classes is the class of the concatenated
  // representatives; fold the right factor letter by letter so no word
  // longer than rep+1 is ever typed.
  m.table.resize(static_cast<std::size_t>(m.size) * m.size);
  for (std::uint32_t a = 0; a < m.size; ++a) {
    for (std::uint32_t b = 0; b < m.size; ++b) {
      std::uint32_t cur = a;
      for (int letter : m.reps[b].letters()) {
        cur = step[cur][static_cast<std::size_t>(letter)];
      }
      m.table[static_cast<std::size_t>(a) * m.size + b] = cur;
    }
  }
  return m;
}

std::uint32_t hom_eval(const FiniteMonoid& m, const Word& w) {
  if (!(w.alphabet() == m.alphabet)) throw InputError("hom_eval: alphabet mismatch");
  std::uint32_t cur = m.identity;
  for (int letter : w.letters()) {
    cur = m.mul(cur, m.letter_image[static_cast<std::size_t>(letter)]);
  }
  return cur;
}

std::uint32_t parent_map(const FiniteMonoid& upper, const FiniteMonoid& lower, std::uint32_t e) {
  if (!(upper.alphabet == lower.alphabet)) throw InputError("parent: alphabet mismatch");
  return hom_eval(lower, upper.reps[e]);
}

std::uint32_t idempotent_power(const FiniteMonoid& m, std::uint32_t x) {
  // walk x, x^2, ... until the cycle closes
  std::unordered_map<std::uint32_t, std::uint32_t> first_seen;
  std::uint32_t cur = x;
  std::uint32_t step_index = 1;
  while (first_seen.find(cur) == first_seen.end()) {
    first_seen.emplace(cur, step_index);
    cur = m.mul(cur, x);
    ++step_index;
  }
  std::uint32_t tail = first_seen[cur];
  std::uint32_t cycle = step_index - tail;
  std::uint32_t exponent = cycle;
  while (exponent < tail) exponent += cycle;
  std::uint32_t out = x;
  for (std::uint32_t i = 1; i < exponent; ++i) out = m.mul(out, x);
  return out;
}

FiniteMonoid syntactic_monoid(const Dfa& input) {
  if (input.tracks != 0) throw InputError("syntactic_monoid: tracked automata unsupported");
  Dfa a = dfa_minimize(input);
  std::uint32_t n = a.states;

  FiniteMonoid m;
  m.alphabet = a.base;

  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> transforms;
  std::deque<std::uint32_t> queue;
  auto intern = [&](std::vector<std::uint32_t> t, const Word& w) {
    auto [it, inserted] = index.try_emplace(t, static_cast<std::uint32_t>(transforms.size()));
    if (inserted) {
      if (transforms.size() >= caps().monoid_size) {
        throw ResourceError("syntactic_monoid: size cap exceeded");
      }
      transforms.push_back(std::move(t));
      m.reps.push_back(w);
      queue.push_back(it->second);
    }
    return it->second;
  };

  std::vector<std::uint32_t> id_transform(n);
  for (std::uint32_t q = 0; q < n; ++q) id_transform[q] = q;
  m.identity = intern(id_transform, Word(a.base));
  for (std::size_t s = 0; s < a.base.size(); ++s) {
    std::vector<std::uint32_t> t(n);
    for (std::uint32_t q = 0; q < n; ++q) t[q] = a.step(q, static_cast<std::uint32_t>(s));
    m.letter_image.push_back(intern(std::move(t), Word(a.base, {static_cast<int>(s)})));
  }
  while (!queue.empty()) {
    std::uint32_t e = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < a.base.size(); ++s) {
      std::vector<std::uint32_t> next(n);
      for (std::uint32_t q = 0; q < n; ++q) {
        next[q] = a.step(transforms[e][q], static_cast<std::uint32_t>(s));
      }
      intern(std::move(next), concat(m.reps[e], Word(a.base, {static_cast<int>(s)})));
    }
  }

  m.size = static_cast<std::uint32_t>(transforms.size());
  m.table.resize(static_cast<std::size_t>(m.size) * m.size);
  for (std::uint32_t x = 0; x < m.size; ++x) {
    for (std::uint32_t y = 0; y < m.size; ++y) {
      std::vector<std::uint32_t> composed(n);
      for (std::uint32_t q = 0; q < n; ++q) composed[q] = transforms[y][transforms[x][q]];
      auto it = index.find(composed);
      if (it == index.end()) throw InputError("syntactic_monoid: closure is not closed");
      m.table[static_cast<std::size_t>(x) * m.size + y] = it->second;
    }
  }
  return m;
}

std::string monoid_to_json(const FiniteMonoid& m) {
  nlohmann::ordered_json j;
  j["size"] = m.size;
  j["identity"] = m.identity;
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint32_t a = 0; a < m.size; ++a) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t b = 0; b < m.size; ++b) row.push_back(m.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = rows;
  std::vector<std::string> reps;
  for (const auto& w : m.reps) reps.push_back(w.str());
  j["reps"] = reps;
  return j.dump();
}

OmegaTermPtr omega_letter(int symbol) {
  auto t = std::make_shared<OmegaTerm>();
  t->kind = OmegaTerm::Kind::letter;
  t->letter = symbol;
  return t;
}

OmegaTermPtr omega_concat(OmegaTermPtr l, OmegaTermPtr r) {
  auto t = std::make_shared<OmegaTerm>();
  t->kind = OmegaTerm::Kind::concat;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

OmegaTermPtr omega_power(OmegaTermPtr body) {
  auto t = std::make_shared<OmegaTerm>();
  t->kind = OmegaTerm::Kind::omega;
  t->body = std::move(body);
  return t;
}

namespace {

struct OmegaParser {
  const std::string& text;
  const Alphabet& alphabet;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw InputError("omega term: " + message + " at position " + std::to_string(pos));
  }

  OmegaTermPtr parse_term() {
    OmegaTermPtr out;
    for (;;) {
      skip_space();
      if (pos >= text.size() || text[pos] == ')') break;
      OmegaTermPtr factor = parse_factor();
      out = out ? omega_concat(std::move(out), std::move(factor)) : std::move(factor);
    }
    if (!out) fail("empty term");
    return out;
  }

  OmegaTermPtr parse_factor() {
    OmegaTermPtr primary;
    skip_space();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      primary = parse_term();
      skip_space();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
    } else {
      int symbol = alphabet.index_of(std::string(1, text[pos]));
      if (symbol < 0) fail(std::string("unknown symbol '") + text[pos] + "'");
      ++pos;
      primary = omega_letter(symbol);
    }
    for (;;) {
      skip_space();
      if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == 'w') {
        pos += 2;
        primary = omega_power(std::move(primary));
      } else {
        break;
      }
    }
    return primary;
  }
};

}  // namespace

OmegaTermPtr parse_omega_term(const std::string& text, const Alphabet& alphabet) {
  OmegaParser parser{text, alphabet};
  OmegaTermPtr t = parser.parse_term();
  parser.skip_space();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return t;
}

std::string render_omega_term(const OmegaTermPtr& t, const Alphabet& alphabet) {
  switch (t->kind) {
    case OmegaTerm::Kind::letter:
      return alphabet.symbol(static_cast<std::size_t>(t->letter));
    case OmegaTerm::Kind::concat:
      return render_omega_term(t->left, alphabet) + render_omega_term(t->right, alphabet);
    case OmegaTerm::Kind::omega:
      return "(" + render_omega_term(t->body, alphabet) + ")^w";
  }
  return "";
}

bool omega_term_is_word(const OmegaTermPtr& t) {
  switch (t->kind) {
    case OmegaTerm::Kind::letter:
      return true;
    case OmegaTerm::Kind::concat:
      return omega_term_is_word(t->left) && omega_term_is_word(t->right);
    case OmegaTerm::Kind::omega:
      return false;
  }
  return false;
}

namespace {

void collect_letters(const OmegaTermPtr& t, std::vector<int>& out) {
  switch (t->kind) {
    case OmegaTerm::Kind::letter:
      out.push_back(t->letter);
      return;
    case OmegaTerm::Kind::concat:
      collect_letters(t->left, out);
      collect_letters(t->right, out);
      return;
    case OmegaTerm::Kind::omega:
      throw InputError("omega term does not denote a finite word");
  }
}

}  // namespace

Word omega_term_word(const OmegaTermPtr& t, const Alphabet& alphabet) {
  std::vector<int> letters;
  collect_letters(t, letters);
  return Word(alphabet, std::move(letters));
}

std::uint32_t omega_eval(const OmegaTermPtr& t, const FiniteMonoid& m) {
  switch (t->kind) {
    case OmegaTerm::Kind::letter:
      return m.letter_image[static_cast<std::size_t>(t->letter)];
    case OmegaTerm::Kind::concat:
      return m.mul(omega_eval(t->left, m), omega_eval(t->right, m));
    case OmegaTerm::Kind::omega:
      return idempotent_power(m, omega_eval(t->body, m));
  }
  throw InputError("omega_eval: unreachable");
}

std::uint32_t omega_eval(const OmegaTermPtr& t, const Alphabet& alphabet, int k) {
  FiniteMonoid m = build_sk(alphabet, k);
  return omega_eval(t, m);
}

CoherentSequence::CoherentSequence(OmegaTermPtr term, Alphabet alphabet)
    : term_(std::move(term)), alphabet_(std::move(alphabet)) {}

const FiniteMonoid& CoherentSequence::fill(int k) {
  auto it = levels_.find(k);
  if (it == levels_.end()) {
    FiniteMonoid m = build_sk(alphabet_, k);
    std::uint32_t value = omega_eval(term_, m);
    it = levels_.emplace(k, std::make_pair(std::move(m), value)).first;
  }
  return it->second.first;
}

std::uint32_t CoherentSequence::at(int k) {
  std::lock_guard<std::mutex> lock(mutex_);
  fill(k);
  return levels_.at(k).second;
}

const FiniteMonoid& CoherentSequence::monoid(int k) {
  std::lock_guard<std::mutex> lock(mutex_);
  return fill(k);
}

namespace {

// The language of one class: states are the monoid elements acting on the
// left, so the word w lands in hom_eval(w).
Dfa class_automaton(const FiniteMonoid& m, std::uint32_t target) {
  Dfa a;
  a.base = m.alphabet;
  a.tracks = 0;
  a.states = m.size;
  a.start = m.identity;
  a.accepting.assign(m.size, 0);
  a.accepting[target] = 1;
  a.delta.resize(static_cast<std::size_t>(m.size) * m.alphabet.size());
  for (std::uint32_t q = 0; q < m.size; ++q) {
    for (std::size_t s = 0; s < m.alphabet.size(); ++s) {
      a.delta[static_cast<std::size_t>(q) * m.alphabet.size() + s] =
          m.mul(q, m.letter_image[s]);
    }
  }
  return a;
}

bool classes_refine_language(const FiniteMonoid& m, const Dfa& a) {
  Dfa complement = dfa_complement(a);
  auto both = [](bool x, bool y) { return x && y; };
  for (std::uint32_t e = 0; e < m.size; ++e) {
    Dfa cls = class_automaton(m, e);
    bool meets_language = !dfa_is_empty(dfa_product(cls, a, both));
    bool meets_complement = !dfa_is_empty(dfa_product(cls, complement, both));
    if (meets_language && meets_complement) return false;
  }
  return true;
}

}  // namespace

bool member_closure(const Dfa& input, const OmegaTermPtr& t) {
  Dfa a = dfa_minimize(input);
  int max_k = std::min(caps().sk_max_k(a.base.size()), caps().max_type_depth);
  for (int k = 0; k <= max_k; ++k) {
    FiniteMonoid m;
    try {
      m = build_sk(a.base, k);
    } catch (const ResourceError&) {
      break;
    }
    if (!classes_refine_language(m, a)) continue;
    std::uint32_t value = omega_eval(t, m);
    return dfa_accepts(a, m.reps[value]);
  }
  throw ResourceError(
      "member_closure: no level within the build caps refines the language; the sound bound "
      "from the run encoding is k = " +
      std::to_string(cofinal_k(a)));
}

}  // namespace msokit
