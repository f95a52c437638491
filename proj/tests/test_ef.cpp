#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <thread>

#include "corpus.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "ktype.hpp"
#include "monoid.hpp"
#include "oracles.hpp"
#include "parser.hpp"
#include "structure.hpp"

using namespace msokit;

namespace {
const Alphabet ab = Alphabet::from_chars("ab");
const Alphabet un = Alphabet::from_chars("a");
Word U(const std::string& s) { return Word::parse(un, s); }
Word W(const std::string& s) { return Word::parse(ab, s); }

// Every reply is covered and every leaf names a genuine disagreement.
void validate_strategy(const Strategy& node, const Structure& sl, std::vector<Elem>& tl,
                       const Structure& sr, std::vector<Elem>& tr) {
  if (node.side < 0) {
    CHECK_FALSE(node.mismatch.empty());
    CHECK_FALSE(oracles::atomic_agree(sl, tl, sr, tr));
    return;
  }
  const Structure& moved = node.side == 0 ? sl : sr;
  const Structure& replying = node.side == 0 ? sr : sl;
  auto& moved_tuple = node.side == 0 ? tl : tr;
  auto& reply_tuple = node.side == 0 ? tr : tl;
  CHECK(node.move < moved.size());
  CHECK(node.replies.size() == replying.size());
  moved_tuple.push_back(node.move);
  for (const auto& reply : node.replies) {
    reply_tuple.push_back(reply.elem);
    REQUIRE(reply.next != nullptr);
    validate_strategy(*reply.next, sl, tl, sr, tr);
    reply_tuple.pop_back();
  }
  moved_tuple.pop_back();
}
}  // namespace

TEST_CASE("depth-k equivalence basics") {
  CHECK(equiv_k(U("aaa"), U("aaa"), 2));
  CHECK_FALSE(equiv_k(U("a"), U("aa"), 1));
  CHECK(equiv_k(U("aa"), U("aaa"), 1));
  CHECK_FALSE(equiv_k(U("aa"), U("aaa"), 2));
  CHECK_THROWS_AS(equiv_k(U("a"), W("a"), 1), InputError);
}

TEST_CASE("types of isomorphic structures coincide") {
  TypeStore store;
  TypeId empty_word = tp(*mso(W("")), {}, 2, store);
  // the substructure of any word below bottom is a copy of the empty model
  TypeId below_bottom = tp(*restrict_below(mso(W("ab")), 0), {}, 2, store);
  CHECK(empty_word == below_bottom);
}

TEST_CASE("type equality matches the direct game search") {
  auto pool = words_up_to(ab, 3);
  TypeStore store;
  for (int k = 0; k <= 2; ++k) {
    std::vector<TypeId> types;
    for (const auto& w : pool) types.push_back(tp(*mso(w), {}, k, store));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) {
        INFO("k=", k, " \"", pool[i].str(), "\" vs \"", pool[j].str(), "\"");
        CHECK((types[i] == types[j]) == oracles::game_equivalent(pool[i], pool[j], k));
      }
    }
  }
}

TEST_CASE("equivalent words satisfy the same shallow sentences") {
  auto corpus = generate_corpus(ab, 150, 43, 2, 2);
  auto pool = words_up_to(ab, 4);
  TypeStore store;
  for (int k = 1; k <= 2; ++k) {
    std::map<TypeId, std::size_t> first_with_type;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      TypeId t = tp(*mso(pool[i]), {}, k, store);
      auto [it, inserted] = first_with_type.emplace(t, i);
      if (inserted) continue;
      const Word& w = pool[it->second];
      const Word& v = pool[i];
      for (const auto& f : corpus) {
        if (quantifier_depth(f) > k) continue;
        INFO("k=", k, " \"", w.str(), "\" ~ \"", v.str(), "\" on ", render_formula(f));
        CHECK(evaluate(*mso(w), f) == evaluate(*mso(v), f));
      }
    }
  }
}

TEST_CASE("deeper equivalence refines shallower equivalence") {
  auto pool = words_up_to(ab, 4);
  for (int k = 0; k <= 2; ++k) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (equiv_k(pool[i], pool[j], k + 1)) {
          CHECK(equiv_k(pool[i], pool[j], k));
        }
      }
    }
  }
}

TEST_CASE("projection drops one level") {
  TypeStore store;
  for (const auto& w : words_up_to(ab, 4)) {
    for (int k = 1; k <= 2; ++k) {
      TypeId deeper = tp(*mso(w), {}, k, store);
      TypeId shallower = tp(*mso(w), {}, k - 1, store);
      CHECK(project_type(store, deeper) == shallower);
      CHECK(store.depth(deeper) == k);
    }
  }
}

TEST_CASE("canonical serialisation is store independent") {
  TypeStore first, second;
  // visit in different orders so the raw ids differ
  TypeId a1 = tp(*mso(W("ab")), {}, 2, first);
  TypeId b1 = tp(*mso(W("ba")), {}, 2, first);
  TypeId b2 = tp(*mso(W("ba")), {}, 2, second);
  TypeId a2 = tp(*mso(W("ab")), {}, 2, second);
  CHECK(first.canonical(a1) == second.canonical(a2));
  CHECK(first.canonical(b1) == second.canonical(b2));
  CHECK(first.canonical(a1) != first.canonical(b1));
}

TEST_CASE("type of a product is the type of the concatenation") {
  TypeStore store;
  auto pool = words_up_to(ab, 3);
  for (int k = 1; k <= 2; ++k) {
    for (const auto& w : pool) {
      for (const auto& v : pool) {
        TypeId product = tp(*oplus(mso(w), mso(v)), {}, k, store);
        TypeId whole = tp(*mso(concat(w, v)), {}, k, store);
        CHECK(product == whole);
      }
    }
  }
}

TEST_CASE("concatenation congruence, sampled") {
  auto pool = words_up_to(ab, 4);
  TypeStore store;
  std::vector<TypeId> types;
  for (const auto& w : pool) types.push_back(tp(*mso(w), {}, 1, store));
  std::mt19937 rng(47);
  for (int sample = 0; sample < 60; ++sample) {
    std::size_t i = rng() % pool.size(), j = rng() % pool.size();
    std::size_t p = rng() % pool.size(), q = rng() % pool.size();
    if (types[i] != types[j] || types[p] != types[q]) continue;
    CHECK(equiv_k(concat(pool[i], pool[p]), concat(pool[j], pool[q]), 1));
  }
}

TEST_CASE("prefix types follow the level-k product") {
  for (const auto& [alphabet, k] : std::vector<std::pair<Alphabet, int>>{{ab, 1}, {un, 2}}) {
    FiniteMonoid m = build_sk(alphabet, k);
    TypeStore store;
    auto class_type = [&](std::uint32_t e) { return tp(*mso(m.reps[e]), {}, k, store); };
    for (const auto& w : words_up_to(alphabet, 5)) {
      std::uint32_t running = m.identity;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        Word letter(alphabet, {w.letter(i - 1)});
        running = m.mul(running, hom_eval(m, letter));
        CHECK(class_type(running) == tp(*mso(w.prefix(i)), {}, k, store));
      }
    }
  }
}

TEST_CASE("witness exists exactly when words differ") {
  CHECK_FALSE(ef_witness(U("aa"), U("aaa"), 1).has_value());
  auto strategy = ef_witness(U("a"), U("aa"), 1);
  REQUIRE(strategy.has_value());
  CHECK(strategy->side == 1);
  CHECK(strategy->move_desc == "{0,1}");
  auto sl = mso(U("a"));
  auto sr = mso(U("aa"));
  std::vector<Elem> tl, tr;
  validate_strategy(*strategy, *sl, tl, *sr, tr);
  CHECK(strategy->str().find("spoiler plays {0,1} in second") == 0);
}

TEST_CASE("witness replay across a sample of pairs") {
  auto pool = words_up_to(ab, 3);
  std::mt19937 rng(53);
  int found = 0;
  for (int sample = 0; sample < 40; ++sample) {
    const Word& w = pool[rng() % pool.size()];
    const Word& v = pool[rng() % pool.size()];
    int k = 1 + static_cast<int>(rng() % 2);
    auto strategy = ef_witness(w, v, k);
    CHECK(strategy.has_value() == !equiv_k(w, v, k));
    if (strategy) {
      ++found;
      auto sl = mso(w);
      auto sr = mso(v);
      std::vector<Elem> tl, tr;
      validate_strategy(*strategy, *sl, tl, *sr, tr);
    }
  }
  CHECK(found > 10);
}

TEST_CASE("the shared intern pool tolerates concurrent use") {
  auto pool = words_up_to(ab, 4);
  std::vector<TypeId> serial(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) serial[i] = tp(*mso(pool[i]), {}, 2);
  std::vector<TypeId> threaded(pool.size());
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < pool.size(); i += 4) {
        threaded[i] = tp(*mso(pool[i]), {}, 2);
      }
    });
  }
  for (auto& worker : workers) worker.join();
  CHECK(threaded == serial);
}

TEST_CASE("caps fail loudly") {
  CHECK_THROWS_AS(equiv_k(U("a"), U("aa"), 4), ResourceError);
  Word long_word(ab, std::vector<int>(9, 0));
  CHECK_THROWS_AS(tp(*mso(long_word), {}, 2), ResourceError);
  CHECK_THROWS_AS(tp(*mso(W("a")), {}, -1), ResourceError);
}
