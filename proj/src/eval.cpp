#include "eval.hpp"

#include "caps.hpp"
#include "errors.hpp"

namespace msokit {

namespace {

Elem lookup(const Assignment& assignment, const std::string& name) {
  for (auto it = assignment.rbegin(); it != assignment.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  throw InputError("unbound variable '" + name + "'");
}

Elem term_value(const Structure& s, const Term& t, const Assignment& a) {
  return t.is_bottom() ? s.bottom() : lookup(a, t.name());
}

bool eval_rec(const Structure& s, const FormulaNode& f, Assignment& a) {
  switch (f.kind) {
    case Kind::constant:
      return f.truth;
    case Kind::equal:
      return term_value(s, f.lhs, a) == term_value(s, f.rhs, a);
    case Kind::subset:
      return s.subset(term_value(s, f.lhs, a), term_value(s, f.rhs, a));
    case Kind::before:
      return s.before(term_value(s, f.lhs, a), term_value(s, f.rhs, a));
    case Kind::atom:
      return s.atom(term_value(s, f.lhs, a));
    case Kind::label: {
      int symbol = s.alphabet().index_of(f.symbol);
      if (symbol < 0) throw InputError("unknown symbol '" + f.symbol + "'");
      return s.label(symbol, term_value(s, f.lhs, a));
    }
    case Kind::negation:
      return !eval_rec(s, *f.left, a);
    case Kind::conjunction:
      return eval_rec(s, *f.left, a) && eval_rec(s, *f.right, a);
    case Kind::disjunction:
      return eval_rec(s, *f.left, a) || eval_rec(s, *f.right, a);
    case Kind::implication:
      return !eval_rec(s, *f.left, a) || eval_rec(s, *f.right, a);
    case Kind::equivalence:
      return eval_rec(s, *f.left, a) == eval_rec(s, *f.right, a);
    case Kind::exists:
    case Kind::forall: {
      bool universal = f.kind == Kind::forall;
      bool atoms_only = sort_of(f.var) == Sort::atom_var;
      a.emplace_back(f.var, 0);
      // Enumeration in element-id order keeps counterexamples reproducible.
      for (Elem e = 0; e < s.size(); ++e) {
        if (atoms_only && !s.atom(e)) continue;
        a.back().second = e;
        bool value = eval_rec(s, *f.body, a);
        if (value != universal) {
          a.pop_back();
          return !universal;
        }
      }
      a.pop_back();
      return universal;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const Structure& s, const Formula& f, const Assignment& assignment) {
  int qd = quantifier_depth(f);
  int cap = qd <= 1 ? caps().eval_positions_shallow : caps().eval_positions_deep;
  if (s.positions() > cap) {
    throw ResourceError("evaluate: structure has " + std::to_string(s.positions()) +
                        " positions, cap is " + std::to_string(cap) +
                        " for quantifier depth " + std::to_string(qd));
  }
  for (const auto& name : free_vars(f)) {
    bool found = false;
    for (const auto& [var, elem] : assignment) {
      if (var == name) {
        found = true;
        if (sort_of(name) == Sort::atom_var && !s.atom(elem)) {
          throw InputError("atom variable '" + name + "' bound to a non-atom");
        }
      }
    }
    if (!found) throw InputError("unbound variable '" + name + "'");
  }
  Assignment working = assignment;
  return eval_rec(s, *f, working);
}

std::string AxiomReport::str() const {
  std::string out;
  for (const auto& line : lines) {
    out += (line.pass ? "pass  " : "FAIL  ");
    out += line.name;
    out += "\n";
  }
  out += all_pass ? "all axioms hold\n" : "some axioms fail\n";
  return out;
}

AxiomReport check_axioms(const Word& word, const std::vector<ComprehensionPattern>& corpus) {
  if (word.size() > 5) {
    throw ResourceError("check_axioms: word longer than 5 positions");
  }
  auto s = mso(word);
  AxiomReport report;
  for (const auto& [name, sentence] : word_theory_axioms(word.alphabet(), 1, corpus)) {
    bool pass = evaluate(*s, sentence);
    report.lines.push_back({name, pass});
    report.all_pass = report.all_pass && pass;
  }
  return report;
}

AxiomReport check_axioms(const Word& word) {
  return check_axioms(word, default_comprehension_corpus(word.alphabet()));
}

}  // namespace msokit
