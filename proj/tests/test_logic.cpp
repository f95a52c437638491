#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "oracles.hpp"
#include "parser.hpp"
#include "structure.hpp"

using namespace msokit;

namespace {
const Alphabet ab = Alphabet::from_chars("ab");
Formula P(const std::string& text) { return parse_formula(text, ab); }
Word W(const std::string& s) { return Word::parse(ab, s); }
}  // namespace

TEST_CASE("parsing the basics") {
  Formula f = P("ex x. P_a(x)");
  REQUIRE(f->kind == Kind::exists);
  CHECK(f->var == "x");
  CHECK(sort_of(f->var) == Sort::atom_var);
  CHECK(f->body->kind == Kind::label);
  CHECK(f->body->symbol == "a");

  Formula g = P("all X. empty <= X");
  REQUIRE(g->kind == Kind::forall);
  CHECK(sort_of(g->var) == Sort::set_var);
  CHECK(g->body->kind == Kind::subset);
  CHECK(g->body->lhs.is_bottom());
  CHECK(g->body->rhs.name() == "X");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(P("P_c(x)"), doctest::Contains("unknown symbol"), InputError);
  CHECK_THROWS_WITH_AS(P("ex . true"), doctest::Contains("position"), InputError);
  CHECK_THROWS_AS(P("X <="), InputError);
  CHECK_THROWS_AS(P("true true"), InputError);
  CHECK_THROWS_AS(P(""), InputError);
}

TEST_CASE("application sugar normalises to subset") {
  Formula f = P("X(x)");
  REQUIRE(f->kind == Kind::subset);
  CHECK(f->lhs.name() == "x");
  CHECK(f->rhs.name() == "X");
  CHECK(structurally_equal(P("all X. all y. (X(y) <-> y <= X)"),
                           P("all X. all y. (y <= X <-> y <= X)")));
}

TEST_CASE("precedence and associativity") {
  CHECK(structurally_equal(P("at(empty) & true | false"), P("(at(empty) & true) | false")));
  CHECK(structurally_equal(P("!at(empty) & true"), P("(!at(empty)) & true")));
  CHECK(structurally_equal(P("true -> false -> true"), P("true -> (false -> true)")));
  CHECK(structurally_equal(P("ex x. at(x) & P_a(x)"), P("ex x. (at(x) & P_a(x))")));
  CHECK(render_formula(P("empty = empty")) == "empty = empty");
}

TEST_CASE("render round trips structurally") {
  for (const char* text : {"ex x. P_a(x)", "all X. empty <= X", "(true | false) & at(empty)",
                           "ex X. all y. (y <= X -> ex z. z < y)"}) {
    Formula f = P(text);
    CHECK(structurally_equal(parse_formula(render_formula(f), ab), f));
  }
  for (const auto& f : generate_corpus(ab, 250, 7, 3, 2)) {
    Formula reparsed = parse_formula(render_formula(f), ab);
    CHECK(structurally_equal(reparsed, f));
  }
}

TEST_CASE("quantifier depth") {
  CHECK(quantifier_depth(P("X <= Y")) == 0);
  CHECK(quantifier_depth(P("ex X. all y. y <= X")) == 2);
  Formula a = P("ex X. ex Y. X = Y");
  Formula b = P("ex x. at(x)");
  CHECK(quantifier_depth(f_and(a, b)) == 2);
  CHECK(quantifier_depth(f_or(b, b)) == 1);
}

TEST_CASE("desugar introduces guarded set quantifiers") {
  Formula f = desugar(P("ex x. P_a(x)"));
  REQUIRE(f->kind == Kind::exists);
  CHECK(sort_of(f->var) == Sort::set_var);
  REQUIRE(f->body->kind == Kind::conjunction);
  CHECK(f->body->left->kind == Kind::atom);
  CHECK(f->body->right->kind == Kind::label);

  Formula g = P("all x. P_b(x)");
  Formula dg = desugar(g);
  REQUIRE(dg->kind == Kind::forall);
  CHECK(dg->body->kind == Kind::implication);

  Formula pure = P("ex X. all Y. X <= Y");
  CHECK(structurally_equal(desugar(pure), pure));
}

TEST_CASE("desugar is idempotent and preserves depth") {
  for (const auto& f : generate_corpus(ab, 150, 11, 3, 2)) {
    Formula once = desugar(f);
    CHECK(structurally_equal(desugar(once), once));
    CHECK(quantifier_depth(once) == quantifier_depth(f));
  }
}

TEST_CASE("desugar preserves truth") {
  auto corpus = generate_corpus(ab, 80, 13, 2, 2);
  for (const auto& w : words_up_to(ab, 3)) {
    auto s = mso(w);
    for (const auto& f : corpus) {
      CHECK(evaluate(*s, f) == evaluate(*s, desugar(f)));
    }
  }
}

TEST_CASE("relativize leaves atomic formulas alone and guards quantifiers") {
  Formula atomic = P("x <= Y");
  CHECK(structurally_equal(relativize(atomic, "Z"), atomic));

  Formula f = relativize(P("ex Z. at(Z)"), "Y");
  REQUIRE(f->kind == Kind::exists);
  REQUIRE(f->body->kind == Kind::conjunction);
  CHECK(f->body->left->kind == Kind::subset);
  CHECK(f->body->left->rhs.name() == "Y");

  CHECK_THROWS_AS(relativize(P("Y = empty"), "Y"), InputError);        // free occurrence
  CHECK_THROWS_AS(relativize(P("ex Y. at(Y)"), "Y"), InputError);      // capture
}

TEST_CASE("relativization equals evaluation in the substructure") {
  auto corpus = generate_corpus(ab, 40, 17, 2, 1);
  for (const auto& w : words_up_to(ab, 4)) {
    auto s = mso(w);
    for (Elem bound = 0; bound < s->size(); ++bound) {
      auto sub = restrict_below(s, bound);
      for (const auto& f : corpus) {
        if (all_vars(f).count("B") != 0) continue;
        Formula rel = relativize(f, "B");
        CHECK(evaluate(*s, rel, {{"B", bound}}) == evaluate(*sub, f));
      }
    }
  }
}

TEST_CASE("relativizing to the full set changes nothing") {
  auto corpus = generate_corpus(ab, 40, 19, 2, 1);
  for (const auto& w : words_up_to(ab, 3)) {
    auto s = mso(w);
    Elem full = s->size() - 1;
    for (const auto& f : corpus) {
      if (all_vars(f).count("B") != 0) continue;
      CHECK(evaluate(*s, relativize(f, "B"), {{"B", full}}) == evaluate(*s, f));
    }
  }
}

TEST_CASE("relativization adds no quantifier depth") {
  for (const auto& f : generate_corpus(ab, 80, 83, 3, 1)) {
    if (all_vars(f).count("B") != 0) continue;
    CHECK(quantifier_depth(relativize(f, "B")) == quantifier_depth(f));
  }
}

TEST_CASE("plus splits a word into a prefix and a suffix") {
  Formula has_a = P("ex x. P_a(x)");
  Formula has_b = P("ex x. P_b(x)");
  Formula split = plus_sentence(has_a, has_b);
  CHECK(is_sentence(split));
  CHECK(evaluate(*mso(W("ab")), split));
  // no split of ba puts an a in the prefix and a b in the suffix
  CHECK_FALSE(evaluate(*mso(W("ba")), split));
  Formula trivial = plus_sentence(f_true(), f_true());
  for (const auto& w : words_up_to(ab, 3)) {
    CHECK(evaluate(*mso(w), trivial));
  }
}

TEST_CASE("plus depth overhead is the documented constant") {
  auto corpus = generate_corpus(ab, 60, 23, 3, 2);
  CHECK(quantifier_depth(plus_sentence(f_true(), f_true())) == plus_depth_margin);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    int base = std::max(quantifier_depth(corpus[i]), quantifier_depth(corpus[i + 1]));
    CHECK(quantifier_depth(plus_sentence(corpus[i], corpus[i + 1])) <= base + plus_depth_margin);
  }
}

TEST_CASE("plus output is deterministic") {
  Formula a = P("ex x. P_a(x)");
  Formula b = P("ex x. P_b(x)");
  CHECK(render_formula(plus_sentence(a, b)) == render_formula(plus_sentence(a, b)));
  // fresh names steer clear of variables used inside the operands
  Formula clash = P("ex X. ex W. X <= W");
  std::string rendered = render_formula(plus_sentence(clash, clash));
  CHECK(rendered.find("X1") != std::string::npos);
}

TEST_CASE("plus denotes language concatenation (evaluation oracle)") {
  auto corpus = generate_corpus(ab, 120, 29, 1, 2);
  std::mt19937 rng(31);
  int pairs = 0;
  while (pairs < 50) {
    const Formula& phi = corpus[rng() % corpus.size()];
    const Formula& psi = corpus[rng() % corpus.size()];
    ++pairs;
    auto left = oracles::satisfying_words(plus_sentence(phi, psi), ab, 6);
    auto spec_phi = oracles::satisfying_words(phi, ab, 6);
    auto spec_psi = oracles::satisfying_words(psi, ab, 6);
    std::set<std::string> right;
    for (const auto& u : spec_phi) {
      for (const auto& v : spec_psi) {
        if (u.size() + v.size() <= 6) right.insert(u + v);
      }
    }
    CHECK(left == right);
  }
}

TEST_CASE("comprehension instances") {
  Formula inst = comprehension_instance(P("P_a(x)"), "x", {});
  CHECK(is_sentence(inst));
  for (const auto& w : words_up_to(ab, 4)) {
    CHECK(evaluate(*mso(w), inst));
  }
  Formula interval =
      comprehension_instance(parse_formula("x < a | x = a", ab), "x", {"a"});
  for (const auto& w : words_up_to(ab, 4)) {
    CHECK(evaluate(*mso(w), interval));
  }
  CHECK(evaluate(*mso(W("")), interval));
  CHECK_THROWS_AS(comprehension_instance(P("P_a(y)"), "x", {}), InputError);
  CHECK_THROWS_AS(comprehension_instance(P("x <= X"), "X", {}), InputError);
}

TEST_CASE("axiom sentences hold in small models") {
  for (const char* text : {"", "ab", "bba"}) {
    auto s = mso(W(text));
    for (const auto& [name, sentence] :
         word_theory_axioms(ab, 1, default_comprehension_corpus(ab))) {
      INFO(name, " on \"", text, "\"");
      CHECK(evaluate(*s, sentence));
    }
  }
}
