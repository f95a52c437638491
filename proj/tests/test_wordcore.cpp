#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "eval.hpp"
#include "oracles.hpp"
#include "structure.hpp"

using namespace msokit;

namespace {
const Alphabet ab = Alphabet::from_chars("ab");
const Alphabet un = Alphabet::from_chars("a");
Word W(const std::string& s) { return Word::parse(ab, s); }
}  // namespace

TEST_CASE("concatenation") {
  CHECK(concat(W("a"), W("b")).str() == "ab");
  CHECK(concat(W(""), W("ba")) == W("ba"));
  CHECK(concat(W("ba"), W("")) == W("ba"));
  CHECK(concat(W("ab"), W("ba")).str() == "abba");
  CHECK_THROWS_AS(concat(W("a"), Word::parse(un, "a")), InputError);
}

TEST_CASE("word parsing rejects foreign symbols") {
  CHECK_THROWS_AS(Word::parse(ab, "abc"), InputError);
  CHECK(Word::parse(ab, "").empty());
}

TEST_CASE("structure of the empty word") {
  auto s = mso(W(""));
  CHECK(s->size() == 1);
  CHECK(s->bottom() == 0);
  CHECK_FALSE(s->atom(0));
}

TEST_CASE("structure of ab") {
  WordStructure s(W("ab"));
  CHECK(s.size() == 4);
  // the only a-labelled element is the singleton {0}, the only b one {1}
  for (Elem e = 0; e < s.size(); ++e) {
    CHECK(s.label(0, e) == (e == 1));
    CHECK(s.label(1, e) == (e == 2));
  }
  CHECK(s.atom(1));
  CHECK(s.atom(2));
  CHECK_FALSE(s.atom(3));
  CHECK(s.describe(3) == "{0,1}");
}

TEST_CASE("a set can precede itself") {
  WordStructure s(W("aa"));
  CHECK(s.before(3, 3));  // {0,1} < {0,1} via 0 < 1
  CHECK_FALSE(s.before(1, 1));
  CHECK_FALSE(s.before(0, 3));
}

TEST_CASE("atoms are linearly ordered like positions") {
  for (const auto& w : words_up_to(ab, 5)) {
    WordStructure s(w);
    std::vector<Elem> atoms;
    for (Elem e = 0; e < s.size(); ++e) {
      if (s.atom(e)) atoms.push_back(e);
    }
    CHECK(atoms.size() == w.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        CHECK(s.before(atoms[i], atoms[j]) == (i < j));
      }
    }
  }
}

TEST_CASE("product atoms come from one side") {
  auto p = std::dynamic_pointer_cast<const ProductStructure>(oplus(mso(W("a")), mso(W("b"))));
  REQUIRE(p);
  std::vector<Elem> atoms;
  for (Elem e = 0; e < p->size(); ++e) {
    if (p->atom(e)) atoms.push_back(e);
  }
  REQUIRE(atoms.size() == 2);
  Elem left_atom = p->pair(1, 0);   // ({0}, empty)
  Elem right_atom = p->pair(0, 1);  // (empty, {0})
  CHECK(atoms == std::vector<Elem>{right_atom, left_atom});
  CHECK(p->label(0, left_atom));
  CHECK_FALSE(p->label(1, left_atom));
  CHECK(p->label(1, right_atom));
  // first order clause: nonbottom left part before nonbottom right part
  CHECK(p->before(left_atom, right_atom));
  CHECK_FALSE(p->before(right_atom, left_atom));
}

TEST_CASE("product with the empty structure is the identity") {
  Word w = W("ab");
  auto p = std::dynamic_pointer_cast<const ProductStructure>(oplus(mso(w), mso(W(""))));
  WordStructure plain(w);
  REQUIRE(p->size() == plain.size());
  auto to_plain = [&](Elem e) { return p->left_part(e); };
  CHECK(to_plain(p->bottom()) == plain.bottom());
  for (Elem x = 0; x < p->size(); ++x) {
    CHECK(p->atom(x) == plain.atom(to_plain(x)));
    for (std::size_t s = 0; s < ab.size(); ++s) {
      CHECK(p->label(static_cast<int>(s), x) == plain.label(static_cast<int>(s), to_plain(x)));
    }
    for (Elem y = 0; y < p->size(); ++y) {
      CHECK(p->subset(x, y) == plain.subset(to_plain(x), to_plain(y)));
      CHECK(p->before(x, y) == plain.before(to_plain(x), to_plain(y)));
    }
  }
}

TEST_CASE("union map is an isomorphism") {
  CHECK(union_iso(W("a"), W("b")));
  CHECK(union_iso(W(""), W("")));
  CHECK(union_iso(W("ab"), W("ba")));
  for (const auto& w : words_up_to(ab, 3)) {
    for (const auto& v : words_up_to(ab, 3)) {
      CHECK(union_iso(w, v));
    }
  }
  CHECK_THROWS_AS(union_iso(W("aaaa"), W("aaaaa")), ResourceError);
}

TEST_CASE("products of base-theory models satisfy the base theory") {
  auto axioms = base_theory_axioms(ab);
  auto words = words_up_to(ab, 3);
  std::size_t checked = 0;
  for (const auto& w : words) {
    for (const auto& v : words) {
      auto p = oplus(mso(w), mso(v));
      for (const auto& [name, sentence] : axioms) {
        INFO(name, " on ", w.str(), " x ", v.str());
        REQUIRE(evaluate(*p, sentence));
      }
      ++checked;
    }
  }
  CHECK(checked == 225);
}

TEST_CASE("substructure below an element") {
  Word w = W("aba");
  auto s = mso(w);
  // restrict below {0,2}: elements are the four subsets of {0,2}
  auto sub = restrict_below(s, 0b101);
  CHECK(sub->size() == 4);
  CHECK(sub->subset(sub->bottom(), 1));
  std::size_t atom_count = 0;
  for (Elem e = 0; e < sub->size(); ++e) atom_count += sub->atom(e) ? 1 : 0;
  CHECK(atom_count == 2);
}
