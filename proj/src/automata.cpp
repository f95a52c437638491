#include "automata.hpp"

#include <algorithm>
#include <functional>

#include "caps.hpp"
#include "errors.hpp"

namespace msokit {

namespace {

struct Compiler {
  const Alphabet& alphabet;
  int sigma;

  Dfa small(int tracks, std::uint32_t states, std::uint32_t start,
            std::vector<char> accepting,
            const std::function<std::uint32_t(std::uint32_t, std::uint32_t, std::uint32_t)>&
                step) const {
    Dfa a;
    a.base = alphabet;
    a.tracks = tracks;
    a.states = states;
    a.start = start;
    a.accepting = std::move(accepting);
    a.delta.resize(static_cast<std::size_t>(states) * a.letters());
    for (std::uint32_t q = 0; q < states; ++q) {
      for (std::uint32_t l = 0; l < a.letters(); ++l) {
        std::uint32_t sym = l >> tracks;
        std::uint32_t bits = l & ((1u << tracks) - 1);
        a.delta[static_cast<std::size_t>(q) * a.letters() + l] = step(q, sym, bits);
      }
    }
    return a;
  }

  // -1 encodes the bottom term.
  int track_of(const Term& t, const std::vector<std::string>& scope) const {
    if (t.is_bottom()) return -1;
    for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i) {
      if (scope[static_cast<std::size_t>(i)] == t.name()) return i;
    }
    throw InputError("compile: variable '" + t.name() + "' is not in scope");
  }

  // Accepts words whose `track` is all zeroes.
  Dfa all_zero(int tracks, int track) const {
    return small(tracks, 2, 0, {1, 0}, [&](std::uint32_t q, std::uint32_t, std::uint32_t bits) {
      bool bit = (bits >> track) & 1;
      return (q == 1 || bit) ? 1u : 0u;
    });
  }

  Dfa subset_dfa(int tracks, int t1, int t2) const {
    if (t1 < 0) return dfa_const(alphabet, tracks, true);  // empty <= anything
    if (t2 < 0) return all_zero(tracks, t1);
    if (t1 == t2) return dfa_const(alphabet, tracks, true);
    return small(tracks, 2, 0, {1, 0}, [&](std::uint32_t q, std::uint32_t, std::uint32_t bits) {
      bool violation = ((bits >> t1) & 1) && !((bits >> t2) & 1);
      return (q == 1 || violation) ? 1u : 0u;
    });
  }

  Dfa equal_dfa(int tracks, int t1, int t2) const {
    if (t1 < 0 && t2 < 0) return dfa_const(alphabet, tracks, true);
    if (t1 < 0) return all_zero(tracks, t2);
    if (t2 < 0) return all_zero(tracks, t1);
    if (t1 == t2) return dfa_const(alphabet, tracks, true);
    return small(tracks, 2, 0, {1, 0}, [&](std::uint32_t q, std::uint32_t, std::uint32_t bits) {
      bool differ = ((bits >> t1) & 1) != ((bits >> t2) & 1);
      return (q == 1 || differ) ? 1u : 0u;
    });
  }

  // A one on t1 strictly before a one on t2.
  Dfa before_dfa(int tracks, int t1, int t2) const {
    if (t1 < 0 || t2 < 0) return dfa_const(alphabet, tracks, false);
    return small(tracks, 3, 0, {0, 0, 1}, [&](std::uint32_t q, std::uint32_t, std::uint32_t bits) {
      bool b1 = (bits >> t1) & 1;
      bool b2 = (bits >> t2) & 1;
      if (q == 2) return 2u;
      if (q == 1) return b2 ? 2u : 1u;
      return b1 ? 1u : 0u;
    });
  }

  // Exactly one one on the track.
  Dfa atom_dfa(int tracks, int t) const {
    if (t < 0) return dfa_const(alphabet, tracks, false);
    return small(tracks, 3, 0, {0, 1, 0}, [&](std::uint32_t q, std::uint32_t, std::uint32_t bits) {
      bool bit = (bits >> t) & 1;
      if (!bit) return q;
      return q == 0 ? 1u : 2u;
    });
  }

  // Exactly one one, sitting at a position with the given symbol.
  Dfa label_dfa(int tracks, int symbol, int t) const {
    if (t < 0) return dfa_const(alphabet, tracks, false);
    return small(tracks, 3, 0, {0, 1, 0}, [&](std::uint32_t q, std::uint32_t sym, std::uint32_t bits) {
      bool bit = (bits >> t) & 1;
      if (!bit) return q;
      if (q != 0) return 2u;
      return sym == static_cast<std::uint32_t>(symbol) ? 1u : 2u;
    });
  }

  Dfa rec(const Formula& f, std::vector<std::string>& scope) const {
    int tracks = static_cast<int>(scope.size());
    switch (f->kind) {
      case Kind::constant:
        return dfa_const(alphabet, tracks, f->truth);
      case Kind::equal:
        return equal_dfa(tracks, track_of(f->lhs, scope), track_of(f->rhs, scope));
      case Kind::subset:
        return subset_dfa(tracks, track_of(f->lhs, scope), track_of(f->rhs, scope));
      case Kind::before:
        return before_dfa(tracks, track_of(f->lhs, scope), track_of(f->rhs, scope));
      case Kind::atom:
        return atom_dfa(tracks, track_of(f->lhs, scope));
      case Kind::label: {
        int symbol = alphabet.index_of(f->symbol);
        if (symbol < 0) throw InputError("compile: unknown symbol '" + f->symbol + "'");
        return label_dfa(tracks, symbol, track_of(f->lhs, scope));
      }
      case Kind::negation:
        return dfa_complement(rec(f->left, scope));
      // binary products are minimized immediately, like projections
      case Kind::conjunction:
        return dfa_minimize(dfa_product(rec(f->left, scope), rec(f->right, scope),
                                        [](bool x, bool y) { return x && y; }));
      case Kind::disjunction:
        return dfa_minimize(dfa_product(rec(f->left, scope), rec(f->right, scope),
                                        [](bool x, bool y) { return x || y; }));
      case Kind::implication:
        return dfa_minimize(dfa_product(rec(f->left, scope), rec(f->right, scope),
                                        [](bool x, bool y) { return !x || y; }));
      case Kind::equivalence:
        return dfa_minimize(dfa_product(rec(f->left, scope), rec(f->right, scope),
                                        [](bool x, bool y) { return x == y; }));
      case Kind::exists:
      case Kind::forall: {
        if (tracks + 1 > caps().tracks) {
          throw ResourceError("compile: track count exceeds cap of " +
                              std::to_string(caps().tracks));
        }
        scope.push_back(f->var);
        Dfa body = rec(f->body, scope);
        scope.pop_back();
        if (f->kind == Kind::exists) return dfa_project_last_track(body);
        return dfa_complement(dfa_project_last_track(dfa_complement(std::move(body))));
      }
    }
    throw InputError("compile: unreachable");
  }
};

}  // namespace

Dfa compile(const Formula& f, const Alphabet& alphabet, const std::vector<std::string>& free_order) {
  Formula body = desugar(f);
  auto frees = free_vars(body);
  for (const auto& name : frees) {
    if (std::find(free_order.begin(), free_order.end(), name) == free_order.end()) {
      throw InputError("compile: free variable '" + name + "' missing from track order");
    }
  }
  if (static_cast<int>(free_order.size()) > caps().tracks) {
    throw ResourceError("compile: track count exceeds cap of " + std::to_string(caps().tracks));
  }
  Compiler compiler{alphabet, static_cast<int>(alphabet.size())};
  std::vector<std::string> scope = free_order;
  Dfa out = compiler.rec(body, scope);
  // Atom-sorted free variables denote atoms, so their tracks must be
  // singletons.
  for (std::size_t i = 0; i < free_order.size(); ++i) {
    if (sort_of(free_order[i]) == Sort::atom_var) {
      Dfa guard = compiler.atom_dfa(static_cast<int>(free_order.size()), static_cast<int>(i));
      out = dfa_minimize(dfa_product(out, guard, [](bool x, bool y) { return x && y; }));
    }
  }
  return out;
}

SentenceEncoding dfa_to_sentence(const Dfa& input) {
  if (input.tracks != 0) throw InputError("dfa_to_sentence: tracked automata unsupported");
  Dfa a = dfa_minimize(input);
  const Alphabet& alphabet = a.base;
  std::uint32_t n = a.states;

  auto state_var = [&](std::uint32_t q) { return "Q" + std::to_string(q); };
  auto in_state = [&](const std::string& atom_var, std::uint32_t q) {
    return f_sub(Term::var(atom_var), Term::var(state_var(q)));
  };
  Term x = Term::var("x");
  Term y = Term::var("y");
  Term z = Term::var("z");

  Formula first_x = f_not(f_exists("y", f_before(y, x)));
  Formula last_x = f_not(f_exists("y", f_before(x, y)));
  Formula succ_xy =
      f_and(f_before(x, y), f_not(f_exists("z", f_and(f_before(x, z), f_before(z, y)))));

  // each position lies in exactly one state colour
  std::vector<Formula> exactly;
  for (std::uint32_t q = 0; q < n; ++q) {
    std::vector<Formula> parts{in_state("x", q)};
    for (std::uint32_t p = 0; p < n; ++p) {
      if (p != q) parts.push_back(f_not(in_state("x", p)));
    }
    exactly.push_back(f_conj(parts));
  }
  Formula coherent = f_forall("x", f_disj(exactly));

  // the first position is coloured by the step out of the start state
  std::vector<Formula> first_parts;
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    first_parts.push_back(f_implies(f_label(alphabet.symbol(s), x),
                                    in_state("x", a.step(a.start, static_cast<std::uint32_t>(s)))));
  }
  Formula first_clause = f_forall("x", f_implies(first_x, f_conj(first_parts)));

  // colours respect transitions along the successor relation
  std::vector<Formula> trans_parts;
  for (std::uint32_t q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
      trans_parts.push_back(
          f_implies(f_and(in_state("x", q), f_label(alphabet.symbol(s), y)),
                    in_state("y", a.step(q, static_cast<std::uint32_t>(s)))));
    }
  }
  Formula trans_clause = f_forall("x", f_forall("y", f_implies(succ_xy, f_conj(trans_parts))));

  // the last position is coloured by an accepting state
  std::vector<Formula> accept_parts;
  for (std::uint32_t q = 0; q < n; ++q) {
    if (a.is_accepting(q)) accept_parts.push_back(in_state("x", q));
  }
  Formula accept_clause = f_exists("x", f_and(last_x, f_disj(accept_parts)));

  Formula body = f_conj({coherent, first_clause, trans_clause, accept_clause});
  Formula main = body;
  for (std::uint32_t q = n; q > 0; --q) {
    main = f_exists(state_var(q - 1), main);
  }
  Formula sentence = main;
  if (a.is_accepting(a.start)) {
    sentence = f_or(f_not(f_exists("x", f_true())), main);
  }
  return {sentence, quantifier_depth(sentence)};
}

int cofinal_k(const Dfa& a) { return dfa_to_sentence(a).depth; }

}  // namespace msokit
