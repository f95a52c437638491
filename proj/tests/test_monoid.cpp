#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "caps.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "ktype.hpp"
#include "monoid.hpp"
#include "structure.hpp"

using namespace msokit;

namespace {
const Alphabet ab = Alphabet::from_chars("ab");
const Alphabet un = Alphabet::from_chars("a");
Word U(const std::string& s) { return Word::parse(un, s); }
}  // namespace

TEST_CASE("level-0 monoids are trivial") {
  CHECK(build_sk(un, 0).size == 1);
  CHECK(build_sk(ab, 0).size == 1);
}

TEST_CASE("unary level 1 is the threshold-two monoid") {
  FiniteMonoid m = build_sk(un, 1);
  CHECK(monoid_to_json(m) ==
        "{\"size\":3,\"identity\":0,\"table\":[[0,1,2],[1,2,2],[2,2,2]],"
        "\"reps\":[\"\",\"a\",\"aa\"]}");
  // oracle: partition unary words by depth-1 equivalence
  std::map<TypeId, std::string> classes;
  TypeStore store;
  for (const auto& w : words_up_to(un, 6)) {
    TypeId t = tp(*mso(w), {}, 1, store);
    classes.emplace(t, w.str());
  }
  CHECK(classes.size() == m.size);
}

TEST_CASE("binary level 1 closure") {
  FiniteMonoid m = build_sk(ab, 1);
  CHECK(m.size == 6);
  std::vector<std::string> reps;
  for (const auto& w : m.reps) reps.push_back(w.str());
  CHECK(reps == std::vector<std::string>{"", "a", "b", "aa", "ab", "bb"});
  std::string err;
  CHECK(monoid_check_laws(m, err));
  // ab and ba fall into the same class
  CHECK(hom_eval(m, Word::parse(ab, "ab")) == hom_eval(m, Word::parse(ab, "ba")));
}

TEST_CASE("unary level 2 closes within the caps") {
  FiniteMonoid m = build_sk(un, 2);
  CHECK(m.size == 7);
  CHECK(m.reps.back().str() == "aaaaaa");
  std::string err;
  CHECK(monoid_check_laws(m, err));
}

TEST_CASE("closure caps fail loudly") {
  CHECK_THROWS_AS(build_sk(ab, 2), ResourceError);
  CHECK_THROWS_AS(build_sk(Alphabet::from_chars("abc"), 1), ResourceError);
  CHECK_THROWS_AS(build_sk(un, 3), ResourceError);
}

TEST_CASE("every element is reached by its own representative") {
  for (const auto& m : {build_sk(un, 1), build_sk(un, 2), build_sk(ab, 1)}) {
    for (std::uint32_t e = 0; e < m.size; ++e) {
      CHECK(hom_eval(m, m.reps[e]) == e);
    }
  }
}

TEST_CASE("evaluation homomorphism") {
  FiniteMonoid m = build_sk(un, 1);
  CHECK(hom_eval(m, U("")) == m.identity);
  CHECK(m.reps[hom_eval(m, U("aaaa"))].str() == "aa");
  for (const auto& u : words_up_to(un, 5)) {
    for (const auto& v : words_up_to(un, 5)) {
      CHECK(hom_eval(m, concat(u, v)) == m.mul(hom_eval(m, u), hom_eval(m, v)));
    }
  }
}

TEST_CASE("parent maps") {
  FiniteMonoid s2 = build_sk(un, 2);
  FiniteMonoid s1 = build_sk(un, 1);
  FiniteMonoid s0 = build_sk(un, 0);
  for (std::uint32_t e = 0; e < s1.size; ++e) {
    CHECK(parent_map(s1, s0, e) == 0);
  }
  CHECK(parent_map(s2, s1, s2.identity) == s1.identity);
  for (const auto& w : words_up_to(un, 6)) {
    CHECK(parent_map(s2, s1, hom_eval(s2, w)) == hom_eval(s1, w));
  }
  for (std::uint32_t a = 0; a < s2.size; ++a) {
    for (std::uint32_t b = 0; b < s2.size; ++b) {
      CHECK(parent_map(s2, s1, s2.mul(a, b)) ==
            s1.mul(parent_map(s2, s1, a), parent_map(s2, s1, b)));
    }
  }
}

TEST_CASE("idempotent powers") {
  FiniteMonoid m = build_sk(un, 1);
  CHECK(idempotent_power(m, m.identity) == m.identity);
  FiniteMonoid parity = syntactic_monoid(fixtures::even_length_unary());
  CHECK(idempotent_power(parity, 1) == 0);
  for (const auto& monoid : {build_sk(ab, 1), build_sk(un, 2)}) {
    for (std::uint32_t x = 0; x < monoid.size; ++x) {
      std::uint32_t e = idempotent_power(monoid, x);
      CHECK(monoid.mul(e, e) == e);
    }
  }
}

TEST_CASE("omega term parsing") {
  OmegaTermPtr t = parse_omega_term("(ab)^w a", ab);
  REQUIRE(t->kind == OmegaTerm::Kind::concat);
  CHECK(t->left->kind == OmegaTerm::Kind::omega);
  CHECK(t->right->kind == OmegaTerm::Kind::letter);
  CHECK(render_omega_term(t, ab) == "(ab)^wa");
  CHECK(omega_term_is_word(parse_omega_term("abba", ab)));
  CHECK_FALSE(omega_term_is_word(t));
  CHECK(omega_term_word(parse_omega_term("abba", ab), ab).str() == "abba");
  CHECK_NOTHROW(parse_omega_term("((a)^w b)^w", ab));
  CHECK_THROWS_AS(parse_omega_term("c", ab), InputError);
  CHECK_THROWS_AS(parse_omega_term("", ab), InputError);
  CHECK_THROWS_AS(parse_omega_term("(a", ab), InputError);
}

TEST_CASE("omega evaluation") {
  FiniteMonoid m = build_sk(un, 1);
  CHECK(omega_eval(parse_omega_term("a", un), m) == hom_eval(m, U("a")));
  std::uint32_t limit = omega_eval(parse_omega_term("(a)^w", un), m);
  CHECK(m.reps[limit].str() == "aa");
  CHECK(m.mul(limit, limit) == limit);
}

TEST_CASE("coherent sequences respect the parent maps") {
  for (const auto& [alphabet_text, term_text, max_level] :
       std::vector<std::tuple<std::string, std::string, int>>{
           {"a", "a", 2}, {"a", "(a)^w", 2}, {"ab", "(ab)^w a", 1}}) {
    Alphabet alphabet = Alphabet::from_chars(alphabet_text);
    CoherentSequence sequence(parse_omega_term(term_text, alphabet), alphabet);
    for (int k = 0; k < max_level; ++k) {
      FiniteMonoid upper = build_sk(alphabet, k + 1);
      FiniteMonoid lower = build_sk(alphabet, k);
      CHECK(parent_map(upper, lower, sequence.at(k + 1)) == sequence.at(k));
    }
  }
}

TEST_CASE("closure membership on finite words is plain membership") {
  for (const auto& fixture :
       {fixtures::sigma_star(ab), fixtures::contains_b(), fixtures::at_least_two_unary()}) {
    for (const auto& w : words_up_to(fixture.base, 5)) {
      if (w.empty()) continue;
      OmegaTermPtr t = parse_omega_term(w.str(), fixture.base);
      CHECK(member_closure(fixture, t) == dfa_accepts(fixture, w));
    }
  }
}

TEST_CASE("closure membership of omega powers") {
  CHECK(member_closure(fixtures::at_least_two_unary(), parse_omega_term("(a)^w", un)));
  CHECK_FALSE(member_closure(fixtures::contains_b(), parse_omega_term("(a)^w", ab)));
  CHECK(member_closure(fixtures::sigma_star(ab), parse_omega_term("(ab)^w a", ab)));
}

TEST_CASE("membership beyond the caps names the sound bound") {
  try {
    member_closure(fixtures::even_length_unary(), parse_omega_term("(a)^w", un));
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    std::string message = e.what();
    CHECK(message.find("k = 5") != std::string::npos);
  }
}

TEST_CASE("build_sk reports partial progress when a representative outgrows the caps") {
  Caps saved = caps();
  Caps tight = saved;
  tight.type_positions[1] = 1;  // nothing beyond single letters can be typed
  set_caps(tight);
  try {
    build_sk(un, 1);
    set_caps(saved);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    set_caps(saved);
    std::string message = e.what();
    CHECK(message.find("classes found so far") != std::string::npos);
  }
}
