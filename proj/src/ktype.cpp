#include "ktype.hpp"

#include <algorithm>

#include "caps.hpp"
#include "errors.hpp"

namespace msokit {

namespace {

// Packed store keys: a small header word, then payload words.
std::vector<std::uint64_t> atomic_key(int tuple_len, int sigma,
                                      const std::vector<std::uint64_t>& bits) {
  std::vector<std::uint64_t> key;
  key.reserve(bits.size() + 1);
  key.push_back(0x61ull << 56 | static_cast<std::uint64_t>(tuple_len) << 28 |
                static_cast<std::uint64_t>(sigma));
  key.insert(key.end(), bits.begin(), bits.end());
  return key;
}

std::vector<std::uint64_t> node_key(int depth, TypeId base, const std::vector<TypeId>& children) {
  std::vector<std::uint64_t> key;
  key.reserve(children.size() + 1);
  key.push_back(0x6eull << 56 | static_cast<std::uint64_t>(depth) << 32 |
                static_cast<std::uint32_t>(base));
  for (TypeId c : children) key.push_back(static_cast<std::uint64_t>(c));
  return key;
}

}  // namespace

TypeId TypeStore::atomic(int tuple_len, int sigma, std::vector<std::uint64_t> bits) {
  std::vector<std::uint64_t> key = atomic_key(tuple_len, sigma, bits);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  TypeId id = static_cast<TypeId>(records_.size());
  records_.push_back({0, tuple_len, sigma, -1, {}, std::move(bits)});
  index_.emplace(std::move(key), id);
  return id;
}

TypeId TypeStore::node(int depth, TypeId base, std::vector<TypeId> children_sorted) {
  std::vector<std::uint64_t> key = node_key(depth, base, children_sorted);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  TypeId id = static_cast<TypeId>(records_.size());
  records_.push_back({depth, 0, 0, base, std::move(children_sorted), {}});
  index_.emplace(std::move(key), id);
  return id;
}

int TypeStore::depth(TypeId id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return records_[static_cast<std::size_t>(id)].depth;
}

TypeId TypeStore::base(TypeId id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const Record& r = records_[static_cast<std::size_t>(id)];
  return r.depth == 0 ? id : r.base;
}

std::vector<TypeId> TypeStore::children(TypeId id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return records_[static_cast<std::size_t>(id)].children;
}

std::string TypeStore::canonical(TypeId id) const {
  Record record;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    record = records_[static_cast<std::size_t>(id)];
  }
  if (record.depth == 0) {
    std::string out = "A(" + std::to_string(record.tuple_len) + ";" +
                      std::to_string(record.sigma) + ";";
    for (std::uint64_t w : record.bits) out += std::to_string(w) + ".";
    return out + ")";
  }
  std::vector<std::string> kids;
  kids.reserve(record.children.size());
  for (TypeId c : record.children) kids.push_back(canonical(c));
  std::sort(kids.begin(), kids.end());
  std::string out = "N(" + canonical(record.base) + ";{";
  for (const auto& k : kids) out += k + " ";
  return out + "})";
}

TypeStore& global_type_store() {
  static TypeStore store;
  return store;
}

namespace {

// Atomic fact layout over terms t0 = bottom, t1..tm = tuple elements:
// ordered pairs (eq, sub, before), then per-term atom, then per-term
// labels. The layout depends on (m, sigma) only, so types computed on
// different structures over the same alphabet stay comparable.
struct AtomicFacts {
  static int bit_count(int m, int sigma) {
    int terms = m + 1;
    return 3 * terms * terms + terms + terms * sigma;
  }

  template <class S>
  static std::vector<std::uint64_t> compute(const S& s, const std::vector<Elem>& tuple) {
    int m = static_cast<int>(tuple.size());
    int sigma = static_cast<int>(s.alphabet().size());
    int terms = m + 1;
    std::vector<std::uint64_t> bits(
        static_cast<std::size_t>((bit_count(m, sigma) + 63) / 64), 0);
    int cursor = 0;
    auto push = [&](bool value) {
      if (value) bits[static_cast<std::size_t>(cursor / 64)] |= 1ull << (cursor % 64);
      ++cursor;
    };
    auto elem = [&](int i) {
      return i == 0 ? s.bottom() : tuple[static_cast<std::size_t>(i - 1)];
    };
    for (int i = 0; i < terms; ++i) {
      for (int j = 0; j < terms; ++j) {
        push(elem(i) == elem(j));
        push(s.subset(elem(i), elem(j)));
        push(s.before(elem(i), elem(j)));
      }
    }
    for (int i = 0; i < terms; ++i) push(s.atom(elem(i)));
    for (int i = 0; i < terms; ++i) {
      for (int sym = 0; sym < sigma; ++sym) push(s.label(sym, elem(i)));
    }
    return bits;
  }

  static std::string describe_mismatch(const Structure& sl, const std::vector<Elem>& tl,
                                       const Structure& sr, const std::vector<Elem>& tr) {
    int m = static_cast<int>(tl.size());
    int sigma = static_cast<int>(sl.alphabet().size());
    int terms = m + 1;
    auto left = compute(sl, tl);
    auto right = compute(sr, tr);
    auto bit = [](const std::vector<std::uint64_t>& v, int i) {
      return (v[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1;
    };
    auto term_name = [](int i) {
      return i == 0 ? std::string("empty") : "v" + std::to_string(i);
    };
    auto holds = [&](int cursor) {
      return bit(left, cursor) ? std::string(" (holds only in first)")
                               : std::string(" (holds only in second)");
    };
    int cursor = 0;
    for (int i = 0; i < terms; ++i) {
      for (int j = 0; j < terms; ++j) {
        const char* ops[] = {" = ", " <= ", " < "};
        for (int op = 0; op < 3; ++op, ++cursor) {
          if (bit(left, cursor) != bit(right, cursor)) {
            return term_name(i) + ops[op] + term_name(j) + holds(cursor);
          }
        }
      }
    }
    for (int i = 0; i < terms; ++i, ++cursor) {
      if (bit(left, cursor) != bit(right, cursor)) {
        return "at(" + term_name(i) + ")" + holds(cursor);
      }
    }
    for (int i = 0; i < terms; ++i) {
      for (int sym = 0; sym < sigma; ++sym, ++cursor) {
        if (bit(left, cursor) != bit(right, cursor)) {
          return "P_" + sl.alphabet().symbol(static_cast<std::size_t>(sym)) + "(" +
                 term_name(i) + ")" + holds(cursor);
        }
      }
    }
    return std::string();
  }
};

struct TupleKey {
  std::vector<Elem> tuple;
  int k;
  bool operator==(const TupleKey&) const = default;
};

struct TupleKeyHash {
  std::size_t operator()(const TupleKey& key) const {
    std::size_t h = static_cast<std::size_t>(key.k) + 0x9e3779b97f4a7c15ull;
    for (Elem e : key.tuple) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

// The per-call memo tracks composite depths; depth-0 values are already
// canonical through the interning table.
template <class S>
class TpJob {
 public:
  TpJob(const S& s, TypeStore& store)
      : s_(s), store_(store), size_(s.size()), sigma_(static_cast<int>(s.alphabet().size())) {}

  TypeId run(std::vector<Elem>& tuple, int k) {
    if (k == 0) {
      return store_.atomic(static_cast<int>(tuple.size()), sigma_,
                           AtomicFacts::compute(s_, tuple));
    }
    TupleKey key{tuple, k};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    TypeId base = run(tuple, 0);
    std::vector<TypeId> kids;
    kids.reserve(size_);
    for (Elem e = 0; e < size_; ++e) {
      tuple.push_back(e);
      kids.push_back(run(tuple, k - 1));
      tuple.pop_back();
    }
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    TypeId id = store_.node(k, base, std::move(kids));
    memo_.emplace(std::move(key), id);
    return id;
  }

 private:
  const S& s_;
  TypeStore& store_;
  Elem size_;
  int sigma_;
  std::unordered_map<TupleKey, TypeId, TupleKeyHash> memo_;
};

void check_tp_caps(const Structure& s, int k) {
  if (k < 0 || k > caps().max_type_depth) {
    throw ResourceError("type depth " + std::to_string(k) + " exceeds cap " +
                        std::to_string(caps().max_type_depth));
  }
  if (s.positions() > caps().type_cap(k)) {
    throw ResourceError("structure with " + std::to_string(s.positions()) +
                        " positions exceeds the depth-" + std::to_string(k) + " cap of " +
                        std::to_string(caps().type_cap(k)));
  }
}

}  // namespace

TypeId tp(const Structure& s, const std::vector<Elem>& tuple, int k, TypeStore& store) {
  check_tp_caps(s, k);
  std::vector<Elem> working = tuple;
  if (const auto* words = dynamic_cast<const WordStructure*>(&s)) {
    TpJob<WordStructure> job(*words, store);
    return job.run(working, k);
  }
  TpJob<Structure> job(s, store);
  return job.run(working, k);
}

TypeId project_type(TypeStore& store, TypeId id) {
  int d = store.depth(id);
  if (d == 0) throw InputError("project_type: depth-0 type has no projection");
  if (d == 1) return store.base(id);
  std::vector<TypeId> kids;
  for (TypeId c : store.children(id)) kids.push_back(project_type(store, c));
  std::sort(kids.begin(), kids.end());
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  return store.node(d - 1, store.base(id), std::move(kids));
}

bool equiv_k(const Word& w, const Word& v, int k) {
  if (!(w.alphabet() == v.alphabet())) throw InputError("equiv_k: alphabet mismatch");
  auto sw = mso(w);
  auto sv = mso(v);
  return tp(*sw, {}, k) == tp(*sv, {}, k);
}

namespace {

std::string indent(int n) { return std::string(static_cast<std::size_t>(2 * n), ' '); }

void render_strategy(const Strategy& s, int depth, std::string& out) {
  if (s.side < 0) {
    out += indent(depth) + "mismatch: " + s.mismatch + "\n";
    return;
  }
  out += indent(depth) + "spoiler plays " + s.move_desc + " in " +
         (s.side == 0 ? "first" : "second") + "\n";
  for (const auto& reply : s.replies) {
    out += indent(depth + 1) + "reply " + reply.elem_desc + ":\n";
    render_strategy(*reply.next, depth + 2, out);
  }
}

Strategy build_strategy(const Structure& sl, std::vector<Elem>& tl, const Structure& sr,
                        std::vector<Elem>& tr, int k, TypeStore& store) {
  if (k == 0) {
    Strategy leaf;
    leaf.mismatch = AtomicFacts::describe_mismatch(sl, tl, sr, tr);
    return leaf;
  }
  TpJob<Structure> job_l(sl, store), job_r(sr, store);
  std::vector<TypeId> types_l(sl.size()), types_r(sr.size());
  for (Elem e = 0; e < sl.size(); ++e) {
    tl.push_back(e);
    types_l[e] = job_l.run(tl, k - 1);
    tl.pop_back();
  }
  for (Elem e = 0; e < sr.size(); ++e) {
    tr.push_back(e);
    types_r[e] = job_r.run(tr, k - 1);
    tr.pop_back();
  }
  auto contains = [](const std::vector<TypeId>& v, TypeId t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };

  Strategy node;
  for (Elem e = 0; e < sl.size(); ++e) {
    if (!contains(types_r, types_l[e])) {
      node.side = 0;
      node.move = e;
      node.move_desc = sl.describe(e);
      tl.push_back(e);
      for (Elem d = 0; d < sr.size(); ++d) {
        tr.push_back(d);
        node.replies.push_back({d, sr.describe(d), std::make_unique<Strategy>(build_strategy(sl, tl, sr, tr, k - 1, store))});
        tr.pop_back();
      }
      tl.pop_back();
      return node;
    }
  }
  for (Elem e = 0; e < sr.size(); ++e) {
    if (!contains(types_l, types_r[e])) {
      node.side = 1;
      node.move = e;
      node.move_desc = sr.describe(e);
      tr.push_back(e);
      for (Elem d = 0; d < sl.size(); ++d) {
        tl.push_back(d);
        node.replies.push_back({d, sl.describe(d), std::make_unique<Strategy>(build_strategy(sl, tl, sr, tr, k - 1, store))});
        tl.pop_back();
      }
      tr.pop_back();
      return node;
    }
  }
  // Extension sets agree on both sides, so the base facts already differ.
  Strategy leaf;
  leaf.mismatch = AtomicFacts::describe_mismatch(sl, tl, sr, tr);
  return leaf;
}

}  // namespace

std::string Strategy::str() const {
  std::string out;
  render_strategy(*this, 0, out);
  return out;
}

std::optional<Strategy> ef_witness(const Word& w, const Word& v, int k) {
  if (!(w.alphabet() == v.alphabet())) throw InputError("ef_witness: alphabet mismatch");
  auto sw = mso(w);
  auto sv = mso(v);
  check_tp_caps(*sw, k);
  check_tp_caps(*sv, k);
  TypeStore store;
  if (tp(*sw, {}, k, store) == tp(*sv, {}, k, store)) return std::nullopt;
  std::vector<Elem> tl, tr;
  return build_strategy(*sw, tl, *sv, tr, k, store);
}

}  // namespace msokit
