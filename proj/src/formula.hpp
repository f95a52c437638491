#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "alphabet.hpp"

namespace msokit {

// Variable sort is carried by the name: leading uppercase = set variable,
// leading lowercase = atom variable (sugar for relativisation to atoms).
enum class Sort { set_var, atom_var };
Sort sort_of(const std::string& name);

// A term is a variable or the constant bottom.
class Term {
 public:
  static Term bottom() { return Term(); }
  static Term var(std::string name);

  bool is_bottom() const { return name_.empty(); }
  const std::string& name() const { return name_; }
  Sort sort() const { return sort_of(name_); }
  bool operator==(const Term& other) const { return name_ == other.name_; }

 private:
  Term() = default;
  std::string name_;
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

enum class Kind {
  constant,   // truth
  equal,      // lhs = rhs
  subset,     // lhs <= rhs
  before,     // lhs < rhs
  atom,       // at(lhs)
  label,      // P_symbol(lhs)
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  exists,
  forall,
};

struct FormulaNode {
  Kind kind;
  bool truth = false;
  Term lhs = Term::bottom();
  Term rhs = Term::bottom();
  std::string symbol;  // label relations
  Formula left, right;  // connectives (right unused for negation)
  std::string var;      // quantifiers
  Formula body;
};

Formula f_true();
Formula f_false();
Formula f_eq(Term a, Term b);
Formula f_sub(Term a, Term b);
Formula f_before(Term a, Term b);
Formula f_at(Term a);
Formula f_label(std::string symbol, Term a);
Formula f_not(Formula a);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_iff(Formula a, Formula b);
Formula f_exists(std::string var, Formula body);
Formula f_forall(std::string var, Formula body);
Formula f_conj(const std::vector<Formula>& parts);  // true when empty
Formula f_disj(const std::vector<Formula>& parts);  // false when empty

bool structurally_equal(const Formula& a, const Formula& b);
int quantifier_depth(const Formula& f);
std::set<std::string> free_vars(const Formula& f);
std::set<std::string> all_vars(const Formula& f);  // free and bound
bool is_sentence(const Formula& f);

// Smallest unused name of the given sort: base, then base1, base2, ...
std::string fresh_name(Sort sort, std::string base, const std::set<std::string>& taken);

// Replaces free occurrences of a variable by another variable.
Formula rename_free(const Formula& f, const std::string& from, const std::string& to);

// Eliminates atom-variable quantifiers: ex x.f becomes ex X.(at(X) & f[X/x]),
// all x.f becomes all X.(at(X) -> f[X/x]). Idempotent; preserves qd.
Formula desugar(const Formula& f);

// f relativised to the elements below `bound`: every quantifier ex Z.p
// becomes ex Z.(Z <= bound & p), all Z.p becomes all Z.(Z <= bound -> p).
// `bound` must not occur in f at all (free or bound).
Formula relativize(const Formula& f, const std::string& bound);

// The sentence ex X (dwcl(X) & phi|X & ex W (W is the atomwise complement
// of X & psi|W)). Adds at most plus_depth_margin to max(qd(phi), qd(psi)).
inline constexpr int plus_depth_margin = 3;
Formula plus_sentence(const Formula& phi, const Formula& psi);

// all params. ex Z. all x. (x <= Z <-> phi); atom_var must occur free in
// phi with atom sort.
Formula comprehension_instance(const Formula& phi, const std::string& atom_var,
                               const std::vector<std::string>& params);

struct NamedSentence {
  std::string name;
  Formula sentence;
};

struct ComprehensionPattern {
  std::string name;
  Formula body;
  std::string atom_var;
  std::vector<std::string> params;
};

// The finite base theory: atomic Boolean algebra under <=, bottom, atoms
// linearly ordered by <, the order bridge, and the label partition.
std::vector<NamedSentence> base_theory_axioms(const Alphabet& alphabet);

// The full axiom set: base theory plus discreteness with endpoints, least
// atoms above nonbottom elements, and comprehension instances for every
// corpus pattern within the qd cap. The endpoint axioms are phrased
// conditionally on an atom existing, so the empty word is a model.
std::vector<NamedSentence> word_theory_axioms(const Alphabet& alphabet, int comprehension_qd_cap,
                                       const std::vector<ComprehensionPattern>& corpus);

std::vector<ComprehensionPattern> default_comprehension_corpus(const Alphabet& alphabet);

}  // namespace msokit
