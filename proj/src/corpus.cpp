#include "corpus.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "parser.hpp"

namespace msokit {

namespace {

struct Generator {
  const Alphabet& alphabet;
  std::mt19937 rng;
  int max_set_vars;

  std::uint32_t pick(std::uint32_t n) { return rng() % n; }

  Term random_term(const std::vector<std::string>& env) {
    std::uint32_t choice = pick(static_cast<std::uint32_t>(env.size()) + 1);
    if (choice == env.size()) return Term::bottom();
    return Term::var(env[choice]);
  }

  Formula atomic(const std::vector<std::string>& env) {
    switch (pick(12)) {
      case 0:
        return f_true();
      case 1:
        return f_false();
      case 2:
      case 3:
        return f_eq(random_term(env), random_term(env));
      case 4:
      case 5:
        return f_sub(random_term(env), random_term(env));
      case 6:
      case 7:
        return f_before(random_term(env), random_term(env));
      case 8:
      case 9:
        return f_at(random_term(env));
      default:
        return f_label(alphabet.symbol(pick(static_cast<std::uint32_t>(alphabet.size()))),
                       random_term(env));
    }
  }

  Formula gen(int qd_budget, std::vector<std::string>& env, int size_budget) {
    if (size_budget <= 1) return atomic(env);
    std::uint32_t roll = pick(10);
    if (roll < 3) return atomic(env);
    if (roll < 4) return f_not(gen(qd_budget, env, size_budget - 1));
    if (roll < 7 && qd_budget > 0) {
      // quantifier: prefer an unused name; set variables are limited
      static const char* set_pool[] = {"X", "Y"};
      static const char* atom_pool[] = {"x", "y", "z"};
      std::vector<std::string> candidates;
      int sets_in_env = 0;
      for (const auto& v : env) {
        if (sort_of(v) == Sort::set_var) ++sets_in_env;
      }
      if (sets_in_env < max_set_vars) {
        for (const char* name : set_pool) {
          if (std::find(env.begin(), env.end(), name) == env.end()) candidates.push_back(name);
        }
      }
      for (const char* name : atom_pool) {
        if (std::find(env.begin(), env.end(), name) == env.end()) candidates.push_back(name);
      }
      if (!candidates.empty()) {
        std::string var = candidates[pick(static_cast<std::uint32_t>(candidates.size()))];
        env.push_back(var);
        Formula body = gen(qd_budget - 1, env, size_budget - 1);
        env.pop_back();
        return pick(2) == 0 ? f_exists(var, body) : f_forall(var, body);
      }
    }
    int left_budget = 1 + static_cast<int>(pick(static_cast<std::uint32_t>(size_budget - 1)));
    Formula left = gen(qd_budget, env, left_budget);
    Formula right = gen(qd_budget, env, size_budget - left_budget);
    switch (pick(4)) {
      case 0:
        return f_and(left, right);
      case 1:
        return f_or(left, right);
      case 2:
        return f_implies(left, right);
      default:
        return f_iff(left, right);
    }
  }

  Formula sentence(int max_qd) {
    int qd_budget = 1 + static_cast<int>(pick(static_cast<std::uint32_t>(max_qd)));
    int size_budget = 3 + static_cast<int>(pick(10));
    std::vector<std::string> env;
    return gen(qd_budget, env, size_budget);
  }
};

}  // namespace

std::vector<Formula> generate_corpus(const Alphabet& alphabet, std::size_t count, unsigned seed,
                                     int max_qd, int max_set_vars) {
  Generator generator{alphabet, std::mt19937(seed), max_set_vars};
  std::vector<Formula> out;
  std::set<std::string> seen;
  while (out.size() < count) {
    Formula f = generator.sentence(max_qd);
    if (quantifier_depth(f) > max_qd) continue;
    if (seen.insert(render_formula(f)).second) out.push_back(f);
  }
  return out;
}

}  // namespace msokit
