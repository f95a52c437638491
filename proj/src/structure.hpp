#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "alphabet.hpp"

namespace msokit {

using Elem = std::uint32_t;

// Finite model for the signature {subset, before, atom, bottom, labels}.
// Elements are dense ids 0..size()-1; identity of ids is element equality.
class Structure {
 public:
  virtual ~Structure() = default;

  const Alphabet& alphabet() const { return alphabet_; }
  virtual std::uint32_t size() const = 0;
  // log2-scale size measure used by the position caps.
  virtual int positions() const = 0;
  virtual Elem bottom() const = 0;
  virtual bool subset(Elem a, Elem b) const = 0;
  virtual bool before(Elem a, Elem b) const = 0;
  virtual bool atom(Elem a) const = 0;
  virtual bool label(int symbol, Elem a) const = 0;
  virtual std::string describe(Elem a) const = 0;

 protected:
  explicit Structure(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

 private:
  Alphabet alphabet_;
};

using StructurePtr = std::shared_ptr<const Structure>;

// The structure induced by a word: universe is every subset of the word's
// positions, encoded as bitmasks (element id == bitmask). The atoms are the
// singletons, ordered by position; a label holds of the singleton at a
// position carrying that letter.
class WordStructure final : public Structure {
 public:
  explicit WordStructure(const Word& word);

  std::uint32_t size() const override { return 1u << labels_.size(); }
  int positions() const override { return static_cast<int>(labels_.size()); }
  Elem bottom() const override { return 0; }
  bool subset(Elem a, Elem b) const override { return (a & ~b) == 0; }
  // min(a) < max(b): some position of a strictly precedes some position of b
  bool before(Elem a, Elem b) const override {
    if (a == 0 || b == 0) return false;
    return std::countr_zero(a) < static_cast<int>(std::bit_width(b)) - 1;
  }
  bool atom(Elem a) const override { return (a != 0) && (a & (a - 1)) == 0; }
  bool label(int symbol, Elem a) const override {
    if (!atom(a)) return false;
    return labels_[static_cast<std::size_t>(std::countr_zero(a))] == symbol;
  }
  std::string describe(Elem a) const override;

  const Word& word() const { return word_; }

 private:
  Word word_;
  std::vector<int> labels_;
};

// The product of two structures: elements are pairs, with the relations
// given clause by clause (atoms live on one side, `before` bridges sides).
// Relations are computed on demand; the product is never flattened.
class ProductStructure final : public Structure {
 public:
  ProductStructure(StructurePtr left, StructurePtr right);

  std::uint32_t size() const override { return left_->size() * right_->size(); }
  int positions() const override { return left_->positions() + right_->positions(); }
  Elem bottom() const override;
  bool subset(Elem a, Elem b) const override;
  bool before(Elem a, Elem b) const override;
  bool atom(Elem a) const override;
  bool label(int symbol, Elem a) const override;
  std::string describe(Elem a) const override;

  Elem pair(Elem l, Elem r) const { return l * right_->size() + r; }
  Elem left_part(Elem e) const { return e / right_->size(); }
  Elem right_part(Elem e) const { return e % right_->size(); }
  const Structure& left() const { return *left_; }
  const Structure& right() const { return *right_; }

 private:
  StructurePtr left_;
  StructurePtr right_;
};

// The substructure on the elements below a bound; carries the same bottom.
class SubStructure final : public Structure {
 public:
  SubStructure(StructurePtr parent, Elem bound);

  std::uint32_t size() const override { return static_cast<std::uint32_t>(members_.size()); }
  int positions() const override;
  Elem bottom() const override { return bottom_; }
  bool subset(Elem a, Elem b) const override { return parent_->subset(members_[a], members_[b]); }
  bool before(Elem a, Elem b) const override { return parent_->before(members_[a], members_[b]); }
  bool atom(Elem a) const override { return parent_->atom(members_[a]); }
  bool label(int symbol, Elem a) const override { return parent_->label(symbol, members_[a]); }
  std::string describe(Elem a) const override { return parent_->describe(members_[a]); }

 private:
  StructurePtr parent_;
  std::vector<Elem> members_;
  Elem bottom_ = 0;
};

StructurePtr mso(const Word& word);
StructurePtr oplus(StructurePtr left, StructurePtr right);
StructurePtr restrict_below(StructurePtr parent, Elem bound);

// Checks exhaustively that (A,B) |-> A u (B shifted by |w|) is an
// isomorphism mso(w) (x) mso(v) -> mso(wv). |w|+|v| must stay within
// `cap` positions (ResourceError otherwise).
bool union_iso(const Word& w, const Word& v, int cap = 8);

}  // namespace msokit
