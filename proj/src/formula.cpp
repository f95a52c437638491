#include "formula.hpp"

#include <algorithm>

#include "errors.hpp"

namespace msokit {

Sort sort_of(const std::string& name) {
  if (name.empty()) throw InputError("empty variable name");
  return (name[0] >= 'A' && name[0] <= 'Z') ? Sort::set_var : Sort::atom_var;
}

Term Term::var(std::string name) {
  if (name.empty()) throw InputError("empty variable name");
  Term t;
  t.name_ = std::move(name);
  return t;
}

namespace {

Formula make(FormulaNode node) { return std::make_shared<FormulaNode>(std::move(node)); }

Formula binary(Kind kind, Formula a, Formula b) {
  FormulaNode n;
  n.kind = kind;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}

Formula quantifier(Kind kind, std::string var, Formula body) {
  FormulaNode n;
  n.kind = kind;
  n.var = std::move(var);
  n.body = std::move(body);
  return make(std::move(n));
}

}  // namespace

Formula f_true() {
  FormulaNode n;
  n.kind = Kind::constant;
  n.truth = true;
  return make(std::move(n));
}

Formula f_false() {
  FormulaNode n;
  n.kind = Kind::constant;
  n.truth = false;
  return make(std::move(n));
}

Formula f_eq(Term a, Term b) {
  FormulaNode n;
  n.kind = Kind::equal;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make(std::move(n));
}

Formula f_sub(Term a, Term b) {
  FormulaNode n;
  n.kind = Kind::subset;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make(std::move(n));
}

Formula f_before(Term a, Term b) {
  FormulaNode n;
  n.kind = Kind::before;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make(std::move(n));
}

Formula f_at(Term a) {
  FormulaNode n;
  n.kind = Kind::atom;
  n.lhs = std::move(a);
  return make(std::move(n));
}

Formula f_label(std::string symbol, Term a) {
  FormulaNode n;
  n.kind = Kind::label;
  n.symbol = std::move(symbol);
  n.lhs = std::move(a);
  return make(std::move(n));
}

Formula f_not(Formula a) {
  FormulaNode n;
  n.kind = Kind::negation;
  n.left = std::move(a);
  return make(std::move(n));
}

Formula f_and(Formula a, Formula b) { return binary(Kind::conjunction, std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return binary(Kind::disjunction, std::move(a), std::move(b)); }
Formula f_implies(Formula a, Formula b) { return binary(Kind::implication, std::move(a), std::move(b)); }
Formula f_iff(Formula a, Formula b) { return binary(Kind::equivalence, std::move(a), std::move(b)); }

Formula f_exists(std::string var, Formula body) {
  return quantifier(Kind::exists, std::move(var), std::move(body));
}

Formula f_forall(std::string var, Formula body) {
  return quantifier(Kind::forall, std::move(var), std::move(body));
}

Formula f_conj(const std::vector<Formula>& parts) {
  if (parts.empty()) return f_true();
  Formula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = f_and(out, parts[i]);
  return out;
}

Formula f_disj(const std::vector<Formula>& parts) {
  if (parts.empty()) return f_false();
  Formula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = f_or(out, parts[i]);
  return out;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::constant:
      return a->truth == b->truth;
    case Kind::equal:
    case Kind::subset:
    case Kind::before:
      return a->lhs == b->lhs && a->rhs == b->rhs;
    case Kind::atom:
      return a->lhs == b->lhs;
    case Kind::label:
      return a->symbol == b->symbol && a->lhs == b->lhs;
    case Kind::negation:
      return structurally_equal(a->left, b->left);
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::implication:
    case Kind::equivalence:
      return structurally_equal(a->left, b->left) && structurally_equal(a->right, b->right);
    case Kind::exists:
    case Kind::forall:
      return a->var == b->var && structurally_equal(a->body, b->body);
  }
  return false;
}

int quantifier_depth(const Formula& f) {
  switch (f->kind) {
    case Kind::constant:
    case Kind::equal:
    case Kind::subset:
    case Kind::before:
    case Kind::atom:
    case Kind::label:
      return 0;
    case Kind::negation:
      return quantifier_depth(f->left);
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::implication:
    case Kind::equivalence:
      return std::max(quantifier_depth(f->left), quantifier_depth(f->right));
    case Kind::exists:
    case Kind::forall:
      return quantifier_depth(f->body) + 1;
  }
  return 0;
}

namespace {

void free_vars_rec(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::constant:
      break;
    case Kind::equal:
    case Kind::subset:
    case Kind::before:
    case Kind::atom:
    case Kind::label:
      // atom/label leave rhs at bottom, so one loop covers every atomic kind
      for (const Term* t : {&f->lhs, &f->rhs}) {
        if (!t->is_bottom() && bound.find(t->name()) == bound.end()) out.insert(t->name());
      }
      break;
    case Kind::negation:
      free_vars_rec(f->left, bound, out);
      break;
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::implication:
    case Kind::equivalence:
      free_vars_rec(f->left, bound, out);
      free_vars_rec(f->right, bound, out);
      break;
    case Kind::exists:
    case Kind::forall: {
      bool inserted = bound.insert(f->var).second;
      free_vars_rec(f->body, bound, out);
      if (inserted) bound.erase(f->var);
      break;
    }
  }
}

void all_vars_rec(const Formula& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::constant:
      break;
    case Kind::equal:
    case Kind::subset:
    case Kind::before:
      if (!f->lhs.is_bottom()) out.insert(f->lhs.name());
      if (!f->rhs.is_bottom()) out.insert(f->rhs.name());
      break;
    case Kind::atom:
    case Kind::label:
      if (!f->lhs.is_bottom()) out.insert(f->lhs.name());
      break;
    case Kind::negation:
      all_vars_rec(f->left, out);
      break;
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::implication:
    case Kind::equivalence:
      all_vars_rec(f->left, out);
      all_vars_rec(f->right, out);
      break;
    case Kind::exists:
    case Kind::forall:
      out.insert(f->var);
      all_vars_rec(f->body, out);
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  all_vars_rec(f, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

std::string fresh_name(Sort sort, std::string base, const std::set<std::string>& taken) {
  if (base.empty()) base = (sort == Sort::set_var) ? "X" : "x";
  if (sort_of(base) != sort) throw InputError("fresh_name: base has wrong sort");
  if (taken.find(base) == taken.end()) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (taken.find(candidate) == taken.end()) return candidate;
  }
}

Formula rename_free(const Formula& f, const std::string& from, const std::string& to) {
  auto rename_term = [&](const Term& t) {
    return (!t.is_bottom() && t.name() == from) ? Term::var(to) : t;
  };
  switch (f->kind) {
    case Kind::constant:
      return f;
    case Kind::equal:
      return f_eq(rename_term(f->lhs), rename_term(f->rhs));
    case Kind::subset:
      return f_sub(rename_term(f->lhs), rename_term(f->rhs));
    case Kind::before:
      return f_before(rename_term(f->lhs), rename_term(f->rhs));
    case Kind::atom:
      return f_at(rename_term(f->lhs));
    case Kind::label:
      return f_label(f->symbol, rename_term(f->lhs));
    case Kind::negation:
      return f_not(rename_free(f->left, from, to));
    case Kind::conjunction:
      return f_and(rename_free(f->left, from, to), rename_free(f->right, from, to));
    case Kind::disjunction:
      return f_or(rename_free(f->left, from, to), rename_free(f->right, from, to));
    case Kind::implication:
      return f_implies(rename_free(f->left, from, to), rename_free(f->right, from, to));
    case Kind::equivalence:
      return f_iff(rename_free(f->left, from, to), rename_free(f->right, from, to));
    case Kind::exists:
    case Kind::forall: {
      if (f->var == from) return f;  // shadowed
      Formula body = rename_free(f->body, from, to);
      return f->kind == Kind::exists ? f_exists(f->var, body) : f_forall(f->var, body);
    }
  }
  return f;
}

namespace {

Formula desugar_rec(const Formula& f, std::set<std::string>& taken) {
  switch (f->kind) {
    case Kind::constant:
    case Kind::equal:
    case Kind::subset:
    case Kind::before:
    case Kind::atom:
    case Kind::label:
      return f;
    case Kind::negation:
      return f_not(desugar_rec(f->left, taken));
    case Kind::conjunction:
      return f_and(desugar_rec(f->left, taken), desugar_rec(f->right, taken));
    case Kind::disjunction:
      return f_or(desugar_rec(f->left, taken), desugar_rec(f->right, taken));
    case Kind::implication:
      return f_implies(desugar_rec(f->left, taken), desugar_rec(f->right, taken));
    case Kind::equivalence:
      return f_iff(desugar_rec(f->left, taken), desugar_rec(f->right, taken));
    case Kind::exists:
    case Kind::forall: {
      Formula body = desugar_rec(f->body, taken);
      if (sort_of(f->var) == Sort::set_var) {
        return f->kind == Kind::exists ? f_exists(f->var, body) : f_forall(f->var, body);
      }
      std::string upper = f->var;
      upper[0] = static_cast<char>(upper[0] - 'a' + 'A');
      std::string replacement = fresh_name(Sort::set_var, upper, taken);
      taken.insert(replacement);
      Formula renamed = rename_free(body, f->var, replacement);
      Formula guard = f_at(Term::var(replacement));
      return f->kind == Kind::exists
                 ? f_exists(replacement, f_and(guard, renamed))
                 : f_forall(replacement, f_implies(guard, renamed));
    }
  }
  return f;
}

}  // namespace

Formula desugar(const Formula& f) {
  std::set<std::string> taken = all_vars(f);
  return desugar_rec(f, taken);
}

namespace {

Formula relativize_rec(const Formula& f, const Term& bound) {
  switch (f->kind) {
    case Kind::constant:
    case Kind::equal:
    case Kind::subset:
    case Kind::before:
    case Kind::atom:
    case Kind::label:
      return f;
    case Kind::negation:
      return f_not(relativize_rec(f->left, bound));
    case Kind::conjunction:
      return f_and(relativize_rec(f->left, bound), relativize_rec(f->right, bound));
    case Kind::disjunction:
      return f_or(relativize_rec(f->left, bound), relativize_rec(f->right, bound));
    case Kind::implication:
      return f_implies(relativize_rec(f->left, bound), relativize_rec(f->right, bound));
    case Kind::equivalence:
      return f_iff(relativize_rec(f->left, bound), relativize_rec(f->right, bound));
    case Kind::exists:
      return f_exists(f->var, f_and(f_sub(Term::var(f->var), bound),
                                    relativize_rec(f->body, bound)));
    case Kind::forall:
      return f_forall(f->var, f_implies(f_sub(Term::var(f->var), bound),
                                        relativize_rec(f->body, bound)));
  }
  return f;
}

}  // namespace

Formula relativize(const Formula& f, const std::string& bound) {
  if (free_vars(f).count(bound) != 0) {
    throw InputError("relativize: '" + bound + "' occurs free in the formula");
  }
  if (all_vars(f).count(bound) != 0) {
    throw InputError("relativize: '" + bound + "' is bound inside the formula (capture)");
  }
  return relativize_rec(f, Term::var(bound));
}

Formula plus_sentence(const Formula& phi, const Formula& psi) {
  std::set<std::string> taken = all_vars(phi);
  for (const auto& v : all_vars(psi)) taken.insert(v);

  std::string split = fresh_name(Sort::set_var, "X", taken);
  taken.insert(split);
  std::string compl_var = fresh_name(Sort::set_var, "W", taken);
  taken.insert(compl_var);
  std::string y = fresh_name(Sort::atom_var, "y", taken);
  taken.insert(y);
  std::string z = fresh_name(Sort::atom_var, "z", taken);
  taken.insert(z);
  std::string u = fresh_name(Sort::atom_var, "u", taken);
  taken.insert(u);

  Term X = Term::var(split);
  Term W = Term::var(compl_var);
  // every atom strictly before an atom of X is itself in X
  Formula downward_closed = f_forall(
      y, f_forall(z, f_implies(f_and(f_sub(Term::var(y), X),
                                     f_before(Term::var(z), Term::var(y))),
                               f_sub(Term::var(z), X))));
  Formula atomwise_compl =
      f_forall(u, f_iff(f_sub(Term::var(u), W), f_not(f_sub(Term::var(u), X))));
  Formula right = f_exists(compl_var, f_and(atomwise_compl, relativize(psi, compl_var)));
  return f_exists(split, f_and(f_and(downward_closed, relativize(phi, split)), right));
}

Formula comprehension_instance(const Formula& phi, const std::string& atom_var,
                               const std::vector<std::string>& params) {
  if (sort_of(atom_var) != Sort::atom_var) {
    throw InputError("comprehension: distinguished variable must be atom-sorted");
  }
  std::set<std::string> frees = free_vars(phi);
  if (frees.count(atom_var) == 0) {
    throw InputError("comprehension: '" + atom_var + "' is not free in the body");
  }
  std::set<std::string> taken = all_vars(phi);
  for (const auto& p : params) taken.insert(p);
  std::string z = fresh_name(Sort::set_var, "Z", taken);

  Formula inner = f_forall(
      atom_var, f_iff(f_sub(Term::var(atom_var), Term::var(z)), phi));
  Formula out = f_exists(z, inner);
  for (auto it = params.rbegin(); it != params.rend(); ++it) {
    out = f_forall(*it, out);
  }
  return out;
}

namespace {

Term bot() { return Term::bottom(); }
Term V(const char* name) { return Term::var(name); }

// Atomic Boolean algebra under <=, rendered as a finite axiom block. On
// finite structures these pin the powerset-of-atoms models exactly:
// extensionality makes the atom-set map injective, meets give order
// reflection, and singletons + complements + meets realize every atom set.
void ba_axioms(std::vector<NamedSentence>& out) {
  out.push_back({"ba.reflexive", f_forall("X", f_sub(V("X"), V("X")))});
  out.push_back({"ba.antisymmetric",
                 f_forall("X", f_forall("Y", f_implies(f_and(f_sub(V("X"), V("Y")),
                                                             f_sub(V("Y"), V("X"))),
                                                       f_eq(V("X"), V("Y")))))});
  out.push_back(
      {"ba.transitive",
       f_forall("X", f_forall("Y", f_forall("Z", f_implies(f_and(f_sub(V("X"), V("Y")),
                                                                 f_sub(V("Y"), V("Z"))),
                                                           f_sub(V("X"), V("Z"))))))});
  out.push_back(
      {"ba.atom_characterisation",
       f_forall("X", f_iff(f_at(V("X")),
                           f_and(f_not(f_eq(V("X"), bot())),
                                 f_forall("Y", f_implies(f_sub(V("Y"), V("X")),
                                                         f_or(f_eq(V("Y"), bot()),
                                                              f_eq(V("Y"), V("X"))))))))});
  out.push_back(
      {"ba.atomic_extensional",
       f_forall("X", f_forall("Y", f_implies(f_forall("z", f_iff(f_sub(V("z"), V("X")),
                                                                 f_sub(V("z"), V("Y")))),
                                             f_eq(V("X"), V("Y")))))});
  out.push_back({"ba.top_exists", f_exists("T", f_forall("X", f_sub(V("X"), V("T"))))});
  out.push_back(
      {"ba.meet_exists",
       f_forall("X", f_forall("Y", f_exists("Z", f_and(f_and(f_sub(V("Z"), V("X")),
                                                             f_sub(V("Z"), V("Y"))),
                                                       f_forall("W", f_implies(f_and(f_sub(V("W"), V("X")),
                                                                                     f_sub(V("W"), V("Y"))),
                                                                               f_sub(V("W"), V("Z"))))))))});
  out.push_back(
      {"ba.join_exists",
       f_forall("X", f_forall("Y", f_exists("Z", f_and(f_and(f_sub(V("X"), V("Z")),
                                                             f_sub(V("Y"), V("Z"))),
                                                       f_forall("W", f_implies(f_and(f_sub(V("X"), V("W")),
                                                                                     f_sub(V("Y"), V("W"))),
                                                                               f_sub(V("Z"), V("W"))))))))});
  out.push_back(
      {"ba.complement_exists",
       f_forall("X", f_exists("Y", f_forall("z", f_iff(f_sub(V("z"), V("Y")),
                                                       f_not(f_sub(V("z"), V("X")))))))});
}

Formula partition_axiom(const Alphabet& alphabet) {
  // Each atom carries exactly one label, and labels hold only of atoms.
  std::vector<Formula> exactly_one;
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    std::vector<Formula> parts;
    parts.push_back(f_label(alphabet.symbol(s), V("x")));
    for (std::size_t t = 0; t < alphabet.size(); ++t) {
      if (t == s) continue;
      parts.push_back(f_not(f_label(alphabet.symbol(t), V("x"))));
    }
    exactly_one.push_back(f_conj(parts));
  }
  return f_forall("x", f_disj(exactly_one));
}

Formula labels_only_atoms(const Alphabet& alphabet) {
  std::vector<Formula> any;
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    any.push_back(f_label(alphabet.symbol(s), V("X")));
  }
  return f_forall("X", f_implies(f_disj(any), f_at(V("X"))));
}

}  // namespace

std::vector<NamedSentence> base_theory_axioms(const Alphabet& alphabet) {
  std::vector<NamedSentence> out;
  ba_axioms(out);
  out.push_back({"bottom.least", f_forall("X", f_sub(bot(), V("X")))});
  out.push_back({"atoms.irreflexive", f_forall("x", f_not(f_before(V("x"), V("x"))))});
  out.push_back(
      {"atoms.transitive",
       f_forall("x", f_forall("y", f_forall("z", f_implies(f_and(f_before(V("x"), V("y")),
                                                                 f_before(V("y"), V("z"))),
                                                           f_before(V("x"), V("z"))))))});
  out.push_back(
      {"atoms.total",
       f_forall("x", f_forall("y", f_disj({f_before(V("x"), V("y")), f_before(V("y"), V("x")),
                                           f_eq(V("x"), V("y"))})))});
  out.push_back(
      {"order.bridge",
       f_forall("X", f_forall("Y", f_iff(f_before(V("X"), V("Y")),
                                         f_exists("x", f_exists("y", f_conj({f_sub(V("x"), V("X")),
                                                                             f_sub(V("y"), V("Y")),
                                                                             f_before(V("x"), V("y"))}))))))});
  out.push_back({"labels.partition", partition_axiom(alphabet)});
  out.push_back({"labels.atoms_only", labels_only_atoms(alphabet)});
  return out;
}

std::vector<NamedSentence> word_theory_axioms(const Alphabet& alphabet, int comprehension_qd_cap,
                                       const std::vector<ComprehensionPattern>& corpus) {
  std::vector<NamedSentence> out = base_theory_axioms(alphabet);

  Formula some_atom = f_exists("x", f_true());
  out.push_back(
      {"order.least_endpoint",
       f_implies(some_atom, f_exists("x", f_forall("y", f_or(f_eq(V("x"), V("y")),
                                                             f_before(V("x"), V("y"))))))});
  out.push_back(
      {"order.greatest_endpoint",
       f_implies(some_atom, f_exists("x", f_forall("y", f_or(f_eq(V("x"), V("y")),
                                                             f_before(V("y"), V("x"))))))});
  out.push_back(
      {"order.discrete_succ",
       f_forall("x", f_implies(f_exists("y", f_before(V("x"), V("y"))),
                               f_exists("y", f_and(f_before(V("x"), V("y")),
                                                   f_not(f_exists("z", f_and(f_before(V("x"), V("z")),
                                                                             f_before(V("z"), V("y")))))))))});
  out.push_back(
      {"order.discrete_pred",
       f_forall("x", f_implies(f_exists("y", f_before(V("y"), V("x"))),
                               f_exists("y", f_and(f_before(V("y"), V("x")),
                                                   f_not(f_exists("z", f_and(f_before(V("y"), V("z")),
                                                                             f_before(V("z"), V("x")))))))))});
  out.push_back(
      {"order.least_atom_above",
       f_forall("X", f_implies(f_not(f_eq(V("X"), bot())),
                               f_exists("x", f_and(f_sub(V("x"), V("X")),
                                                   f_forall("y", f_implies(f_sub(V("y"), V("X")),
                                                                           f_or(f_eq(V("x"), V("y")),
                                                                                f_before(V("x"), V("y")))))))))});

  for (const auto& pattern : corpus) {
    if (quantifier_depth(pattern.body) > comprehension_qd_cap) continue;
    out.push_back({"comprehension." + pattern.name,
                   comprehension_instance(pattern.body, pattern.atom_var, pattern.params)});
  }
  return out;
}

std::vector<ComprehensionPattern> default_comprehension_corpus(const Alphabet& alphabet) {
  std::vector<ComprehensionPattern> out;
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    out.push_back({"label_" + alphabet.symbol(s),
                   f_label(alphabet.symbol(s), V("x")), "x", {}});
  }
  // The initial interval [0,a] induced by an atom parameter.
  out.push_back({"initial_interval",
                 f_or(f_before(V("x"), V("a")), f_eq(V("x"), V("a"))), "x", {"a"}});
  out.push_back({"member", f_sub(V("x"), V("Y")), "x", {"Y"}});
  out.push_back({"non_member", f_not(f_sub(V("x"), V("Y"))), "x", {"Y"}});
  out.push_back({"has_predecessor", f_exists("y", f_before(V("y"), V("x"))), "x", {}});
  out.push_back({"least_atom",
                 f_forall("y", f_or(f_eq(V("x"), V("y")), f_before(V("x"), V("y")))), "x", {}});
  out.push_back({"strictly_before", f_before(V("x"), V("y")), "x", {"y"}});
  if (alphabet.size() >= 1) {
    out.push_back({"member_with_label",
                   f_and(f_sub(V("x"), V("Y")), f_label(alphabet.symbol(0), V("x"))),
                   "x",
                   {"Y"}});
  }
  out.push_back({"always", f_eq(V("x"), V("x")), "x", {}});
  out.push_back({"never", f_not(f_eq(V("x"), V("x"))), "x", {}});
  return out;
}

}  // namespace msokit
