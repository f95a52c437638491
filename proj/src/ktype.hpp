#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "structure.hpp"

namespace msokit {

using TypeId = std::int32_t;

// Interned hereditarily-finite type values. A depth-0 type is the set of
// unnested atomic facts about a tuple (with bottom as an always-available
// extra term); a depth-(k+1) type is the depth-0 type paired with the set
// of depth-k types of all one-element extensions. Equality of ids decides
// equality of types within one store. get-or-insert is atomic, so a store
// may be shared across threads.
class TypeStore {
 public:
  TypeId atomic(int tuple_len, int sigma, std::vector<std::uint64_t> bits);
  TypeId node(int depth, TypeId base, std::vector<TypeId> children_sorted);

  int depth(TypeId id) const;
  TypeId base(TypeId id) const;
  // Returned by value: the backing storage may move under concurrent inserts.
  std::vector<TypeId> children(TypeId id) const;

  // Store-independent canonical form (children ordered by their own
  // canonical strings), for cross-store comparisons and goldens.
  std::string canonical(TypeId id) const;

 private:
  struct Record {
    int depth;
    int tuple_len = 0;
    int sigma = 0;
    TypeId base = -1;
    std::vector<TypeId> children;
    std::vector<std::uint64_t> bits;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::uint64_t w : key) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };
  mutable std::mutex mutex_;
  std::vector<Record> records_;
  std::unordered_map<std::vector<std::uint64_t>, TypeId, KeyHash> index_;
};

TypeStore& global_type_store();

// Depth-k type of a tuple of elements. Structure size must fit the
// per-depth position caps and k the depth cap.
TypeId tp(const Structure& s, const std::vector<Elem>& tuple, int k,
          TypeStore& store = global_type_store());

// Drops one nesting level: the depth-(k-1) type of the same tuple.
TypeId project_type(TypeStore& store, TypeId id);

// Words are depth-k equivalent iff their structures have equal types (they
// satisfy the same sentences of quantifier depth <= k).
bool equiv_k(const Word& w, const Word& v, int k);

// A spoiler strategy tree for the length-k game: at each node the side
// and element played, with one branch per possible reply. Leaves name an
// atomic fact on which the final tuples disagree.
struct Strategy {
  int side = -1;  // 0 = first structure, 1 = second; -1 = leaf
  Elem move = 0;
  std::string move_desc;
  std::string mismatch;  // leaves only
  struct Reply {
    Elem elem;
    std::string elem_desc;
    std::unique_ptr<Strategy> next;
  };
  std::vector<Reply> replies;

  std::string str() const;
};

// No strategy iff the words are equivalent at depth k. A returned strategy
// wins against every duplicator play.
std::optional<Strategy> ef_witness(const Word& w, const Word& v, int k);

}  // namespace msokit
