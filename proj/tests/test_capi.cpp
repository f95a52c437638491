// Black-box checks of the shared-library surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "msokit.h"

namespace {
std::string take(char* s) {
  std::string out = s ? s : "";
  msokit_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("version and error text") {
  CHECK(std::string(msokit_version()) == "0.1.0");
  int result = 0;
  CHECK(msokit_eval("ab", "ab", "ex x. P_a(x", &result) == MSOKIT_ERR_INPUT);
  CHECK(std::string(msokit_last_error()).find("position") != std::string::npos);
}

TEST_CASE("eval through the C surface") {
  int result = -1;
  REQUIRE(msokit_eval("ab", "ab", "ex x. P_a(x)", &result) == MSOKIT_OK);
  CHECK(result == 1);
  REQUIRE(msokit_eval("ab", "", "ex X. !(X = empty)", &result) == MSOKIT_OK);
  CHECK(result == 0);
  CHECK(msokit_eval("ab", "ab", "x <= X", &result) == MSOKIT_ERR_INPUT);
  CHECK(msokit_eval("ab", "abc", "true", &result) == MSOKIT_ERR_INPUT);
}

TEST_CASE("dfa handles") {
  msokit_dfa* dfa = nullptr;
  REQUIRE(msokit_compile("ab", "ex x. P_a(x)", 1, &dfa) == MSOKIT_OK);
  unsigned states = 0;
  CHECK(msokit_dfa_states(dfa, &states) == MSOKIT_OK);
  CHECK(states == 2);
  int result = -1;
  CHECK(msokit_dfa_accepts(dfa, "bbb", &result) == MSOKIT_OK);
  CHECK(result == 0);
  char* json = nullptr;
  REQUIRE(msokit_dfa_to_json(dfa, &json) == MSOKIT_OK);
  std::string text = take(json);
  msokit_dfa* reloaded = nullptr;
  REQUIRE(msokit_dfa_from_json(text.c_str(), &reloaded) == MSOKIT_OK);
  char* json2 = nullptr;
  REQUIRE(msokit_dfa_to_json(reloaded, &json2) == MSOKIT_OK);
  CHECK(take(json2) == text);
  unsigned k = 0;
  CHECK(msokit_cofinal_k(dfa, &k) == MSOKIT_OK);
  CHECK(k >= 1);
  int member = -1;
  CHECK(msokit_member_closure(dfa, "(b)^w", &member) == MSOKIT_OK);
  CHECK(member == 0);
  msokit_dfa_free(dfa);
  msokit_dfa_free(reloaded);
  CHECK(msokit_dfa_from_json("not json", &reloaded) == MSOKIT_ERR_INPUT);
}

TEST_CASE("equivalence, witnesses and caps") {
  int result = -1;
  REQUIRE(msokit_equiv("a", 1, "aa", "aaa", &result) == MSOKIT_OK);
  CHECK(result == 1);
  CHECK(msokit_equiv("a", 9, "aa", "aaa", &result) == MSOKIT_ERR_RESOURCE);
  char* rendered = reinterpret_cast<char*>(1);
  REQUIRE(msokit_witness("a", 1, "aa", "aaa", &rendered) == MSOKIT_OK);
  CHECK(rendered == nullptr);
  REQUIRE(msokit_witness("a", 1, "a", "aa", &rendered) == MSOKIT_OK);
  REQUIRE(rendered != nullptr);
  CHECK(take(rendered).find("spoiler plays {0,1} in second") == 0);
}

TEST_CASE("monoids and omega terms") {
  msokit_monoid* monoid = nullptr;
  REQUIRE(msokit_monoid_build("a", 1, &monoid) == MSOKIT_OK);
  unsigned size = 0;
  CHECK(msokit_monoid_size(monoid, &size) == MSOKIT_OK);
  CHECK(size == 3);
  char* json = nullptr;
  REQUIRE(msokit_monoid_to_json(monoid, &json) == MSOKIT_OK);
  CHECK(take(json).find("\"reps\":[\"\",\"a\",\"aa\"]") != std::string::npos);
  msokit_monoid_free(monoid);
  CHECK(msokit_monoid_build("ab", 2, &monoid) == MSOKIT_ERR_RESOURCE);

  unsigned element = 0;
  char* rep = nullptr;
  REQUIRE(msokit_omega_eval("a", 1, "(a)^w", &element, &rep) == MSOKIT_OK);
  CHECK(element == 2);
  CHECK(take(rep) == "aa");
}

TEST_CASE("duality and axiom reports") {
  unsigned points = 0;
  int functional = 0, graph = 0;
  REQUIRE(msokit_duality_check("a", 1, &points, &functional, &graph) == MSOKIT_OK);
  CHECK(points == 3);
  CHECK(functional == 1);
  CHECK(graph == 1);
  int all_pass = 0;
  char* report = nullptr;
  REQUIRE(msokit_check_axioms("ab", "abba", 0, &all_pass, &report) == MSOKIT_OK);
  CHECK(all_pass == 1);
  CHECK(take(report).find("labels.partition") != std::string::npos);
  REQUIRE(msokit_check_axioms("ab", "ab", 1, &all_pass, &report) == MSOKIT_OK);
  CHECK(take(report).find("\"all_pass\":true") != std::string::npos);
}

TEST_CASE("cap overrides through the C surface") {
  REQUIRE(msokit_set_caps("eval1=2,eval2=2") == MSOKIT_OK);
  int result = -1;
  CHECK(msokit_eval("ab", "aba", "ex x. true", &result) == MSOKIT_ERR_RESOURCE);
  REQUIRE(msokit_set_caps(nullptr) == MSOKIT_OK);
  CHECK(msokit_eval("ab", "aba", "ex x. true", &result) == MSOKIT_OK);
  CHECK(msokit_set_caps("nonsense") == MSOKIT_ERR_INPUT);
}
