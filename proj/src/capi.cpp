#include "msokit.h"

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "automata.hpp"
#include "caps.hpp"
#include "duality.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "ktype.hpp"
#include "monoid.hpp"
#include "parser.hpp"
#include "selftest.hpp"
#include "structure.hpp"

struct msokit_dfa {
  msokit::Dfa value;
};

struct msokit_monoid {
  msokit::FiniteMonoid value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

msokit_status fail(msokit_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <class Body>
msokit_status guarded(Body&& body) {
  try {
    body();
    return MSOKIT_OK;
  } catch (const msokit::InputError& e) {
    return fail(MSOKIT_ERR_INPUT, e.what());
  } catch (const msokit::ResourceError& e) {
    return fail(MSOKIT_ERR_RESOURCE, e.what());
  } catch (const std::exception& e) {
    return fail(MSOKIT_ERR_INTERNAL, e.what());
  }
}

msokit::Alphabet make_alphabet(const char* alphabet) {
  if (alphabet == nullptr) throw msokit::InputError("alphabet is null");
  return msokit::Alphabet::from_chars(alphabet);
}

msokit::Word make_word(const msokit::Alphabet& alphabet, const char* word) {
  if (word == nullptr) throw msokit::InputError("word is null");
  return msokit::Word::parse(alphabet, word);
}

const char* require(const char* value, const char* name) {
  if (value == nullptr) throw msokit::InputError(std::string(name) + " is null");
  return value;
}

}  // namespace

extern "C" {

const char* msokit_version(void) { return "0.1.0"; }

const char* msokit_last_error(void) { return g_last_error.c_str(); }

void msokit_string_free(char* s) { delete[] s; }

msokit_status msokit_set_caps(const char* spec) {
  return guarded([&] {
    if (spec == nullptr) {
      msokit::set_caps(msokit::Caps{});
      return;
    }
    msokit::Caps next = msokit::caps();
    std::string err;
    if (!msokit::parse_caps(spec, next, err)) throw msokit::InputError("caps: " + err);
    msokit::set_caps(next);
  });
}

msokit_status msokit_eval(const char* alphabet, const char* word, const char* formula,
                          int* result) {
  return guarded([&] {
    msokit::Alphabet a = make_alphabet(alphabet);
    msokit::Word w = make_word(a, word);
    msokit::Formula f = msokit::parse_formula(require(formula, "formula"), a);
    if (!msokit::is_sentence(f)) throw msokit::InputError("formula has free variables");
    *result = msokit::evaluate(*msokit::mso(w), f) ? 1 : 0;
  });
}

msokit_status msokit_check_axioms(const char* alphabet, const char* word, int json_format,
                                  int* all_pass, char** report) {
  return guarded([&] {
    msokit::Alphabet a = make_alphabet(alphabet);
    msokit::AxiomReport r = msokit::check_axioms(make_word(a, word));
    *all_pass = r.all_pass ? 1 : 0;
    if (json_format) {
      nlohmann::ordered_json j;
      j["all_pass"] = r.all_pass;
      j["lines"] = nlohmann::ordered_json::array();
      for (const auto& line : r.lines) {
        j["lines"].push_back({{"name", line.name}, {"pass", line.pass}});
      }
      *report = dup_string(j.dump());
    } else {
      *report = dup_string(r.str());
    }
  });
}

msokit_status msokit_compile(const char* alphabet, const char* formula, int minimize,
                             msokit_dfa** out) {
  return guarded([&] {
    msokit::Alphabet a = make_alphabet(alphabet);
    msokit::Formula f = msokit::parse_formula(require(formula, "formula"), a);
    if (!msokit::is_sentence(f)) throw msokit::InputError("formula has free variables");
    msokit::Dfa d = msokit::compile(f, a);
    if (minimize) d = msokit::dfa_minimize(d);
    *out = new msokit_dfa{std::move(d)};
  });
}

msokit_status msokit_dfa_from_json(const char* json, msokit_dfa** out) {
  return guarded([&] { *out = new msokit_dfa{msokit::dfa_from_json(require(json, "json"))}; });
}

msokit_status msokit_dfa_to_json(const msokit_dfa* dfa, char** json) {
  return guarded([&] { *json = dup_string(msokit::dfa_to_json(dfa->value)); });
}

msokit_status msokit_dfa_accepts(const msokit_dfa* dfa, const char* word, int* result) {
  return guarded([&] {
    msokit::Word w = make_word(dfa->value.base, word);
    *result = msokit::dfa_accepts(dfa->value, w) ? 1 : 0;
  });
}

msokit_status msokit_dfa_states(const msokit_dfa* dfa, unsigned* states) {
  return guarded([&] { *states = dfa->value.states; });
}

msokit_status msokit_cofinal_k(const msokit_dfa* dfa, unsigned* k) {
  return guarded([&] { *k = static_cast<unsigned>(msokit::cofinal_k(dfa->value)); });
}

void msokit_dfa_free(msokit_dfa* dfa) { delete dfa; }

msokit_status msokit_equiv(const char* alphabet, unsigned k, const char* w1, const char* w2,
                           int* result) {
  return guarded([&] {
    msokit::Alphabet a = make_alphabet(alphabet);
    *result = msokit::equiv_k(make_word(a, w1), make_word(a, w2), static_cast<int>(k)) ? 1 : 0;
  });
}

msokit_status msokit_witness(const char* alphabet, unsigned k, const char* w1, const char* w2,
                             char** rendered) {
  return guarded([&] {
    msokit::Alphabet a = make_alphabet(alphabet);
    auto strategy = msokit::ef_witness(make_word(a, w1), make_word(a, w2), static_cast<int>(k));
    *rendered = strategy ? dup_string(strategy->str()) : nullptr;
  });
}

msokit_status msokit_monoid_build(const char* alphabet, unsigned k, msokit_monoid** out) {
  return guarded([&] {
    *out = new msokit_monoid{msokit::build_sk(make_alphabet(alphabet), static_cast<int>(k))};
  });
}

msokit_status msokit_monoid_to_json(const msokit_monoid* monoid, char** json) {
  return guarded([&] { *json = dup_string(msokit::monoid_to_json(monoid->value)); });
}

msokit_status msokit_monoid_size(const msokit_monoid* monoid, unsigned* size) {
  return guarded([&] { *size = monoid->value.size; });
}

void msokit_monoid_free(msokit_monoid* monoid) { delete monoid; }

msokit_status msokit_omega_eval(const char* alphabet, unsigned k, const char* term,
                                unsigned* element, char** representative) {
  return guarded([&] {
    msokit::Alphabet a = make_alphabet(alphabet);
    msokit::FiniteMonoid m = msokit::build_sk(a, static_cast<int>(k));
    msokit::OmegaTermPtr t = msokit::parse_omega_term(require(term, "term"), a);
    std::uint32_t value = msokit::omega_eval(t, m);
    *element = value;
    *representative = dup_string(m.reps[value].str());
  });
}

msokit_status msokit_member_closure(const msokit_dfa* dfa, const char* term, int* result) {
  return guarded([&] {
    msokit::OmegaTermPtr t = msokit::parse_omega_term(require(term, "term"), dfa->value.base);
    *result = msokit::member_closure(dfa->value, t) ? 1 : 0;
  });
}

msokit_status msokit_duality_check(const char* alphabet, unsigned k, unsigned* points,
                                   int* functional, int* graph) {
  return guarded([&] {
    msokit::DualityReport report =
        msokit::duality_check(make_alphabet(alphabet), static_cast<int>(k));
    *points = report.points;
    *functional = report.functional ? 1 : 0;
    *graph = report.graph ? 1 : 0;
  });
}

msokit_status msokit_selftest(unsigned seed, int json_format, int* all_pass, char** report) {
  return guarded([&] {
    msokit::SelftestReport r = msokit::run_selftest(seed);
    *all_pass = r.all_pass ? 1 : 0;
    *report = dup_string(json_format ? r.json() : r.str());
  });
}

}  // extern "C"
