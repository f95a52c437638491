#include "structure.hpp"

#include <bit>

#include "caps.hpp"
#include "errors.hpp"

namespace msokit {

WordStructure::WordStructure(const Word& word) : Structure(word.alphabet()), word_(word) {
  if (word.size() > 30) throw ResourceError("word too long for powerset universe");
  labels_.assign(word.letters().begin(), word.letters().end());
}

std::string WordStructure::describe(Elem a) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (a & (1u << i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

ProductStructure::ProductStructure(StructurePtr left, StructurePtr right)
    : Structure(left->alphabet()), left_(std::move(left)), right_(std::move(right)) {
  if (!(left_->alphabet() == right_->alphabet())) {
    throw InputError("oplus: alphabet mismatch");
  }
}

Elem ProductStructure::bottom() const { return pair(left_->bottom(), right_->bottom()); }

bool ProductStructure::subset(Elem a, Elem b) const {
  return left_->subset(left_part(a), left_part(b)) &&
         right_->subset(right_part(a), right_part(b));
}

bool ProductStructure::before(Elem a, Elem b) const {
  Elem al = left_part(a), ar = right_part(a);
  Elem bl = left_part(b), br = right_part(b);
  if (al != left_->bottom() && br != right_->bottom()) return true;
  return left_->before(al, bl) || right_->before(ar, br);
}

bool ProductStructure::atom(Elem a) const {
  Elem l = left_part(a), r = right_part(a);
  return (left_->atom(l) && r == right_->bottom()) ||
         (l == left_->bottom() && right_->atom(r));
}

bool ProductStructure::label(int symbol, Elem a) const {
  Elem l = left_part(a), r = right_part(a);
  return (left_->label(symbol, l) && r == right_->bottom()) ||
         (l == left_->bottom() && right_->label(symbol, r));
}

std::string ProductStructure::describe(Elem a) const {
  return "(" + left_->describe(left_part(a)) + "," + right_->describe(right_part(a)) + ")";
}

SubStructure::SubStructure(StructurePtr parent, Elem bound)
    : Structure(parent->alphabet()), parent_(std::move(parent)) {
  if (parent_->positions() > caps().structure_positions) {
    throw ResourceError("substructure: parent with " + std::to_string(parent_->positions()) +
                        " positions exceeds the enumeration cap of " +
                        std::to_string(caps().structure_positions));
  }
  for (Elem e = 0; e < parent_->size(); ++e) {
    if (parent_->subset(e, bound)) {
      if (e == parent_->bottom()) bottom_ = static_cast<Elem>(members_.size());
      members_.push_back(e);
    }
  }
}

int SubStructure::positions() const {
  return static_cast<int>(std::bit_width(static_cast<std::uint32_t>(members_.size())) - 1);
}

StructurePtr mso(const Word& word) { return std::make_shared<WordStructure>(word); }

StructurePtr oplus(StructurePtr left, StructurePtr right) {
  return std::make_shared<ProductStructure>(std::move(left), std::move(right));
}

StructurePtr restrict_below(StructurePtr parent, Elem bound) {
  return std::make_shared<SubStructure>(std::move(parent), bound);
}

bool union_iso(const Word& w, const Word& v, int cap) {
  if (!(w.alphabet() == v.alphabet())) throw InputError("union_iso: alphabet mismatch");
  int total = static_cast<int>(w.size() + v.size());
  if (total > cap) {
    throw ResourceError("union_iso: combined length " + std::to_string(total) +
                        " exceeds cap " + std::to_string(cap));
  }
  auto left = mso(w);
  auto right = mso(v);
  ProductStructure prod(left, right);
  WordStructure whole(concat(w, v));

  auto image = [&](Elem e) -> Elem {
    Elem a = prod.left_part(e);
    Elem b = prod.right_part(e);
    return a | (b << w.size());
  };

  if (prod.size() != whole.size()) return false;
  // The bit ranges are disjoint, so the map is a bijection; verify the
  // constants and every relation in both directions.
  if (image(prod.bottom()) != whole.bottom()) return false;
  for (Elem a = 0; a < prod.size(); ++a) {
    if (prod.atom(a) != whole.atom(image(a))) return false;
    for (std::size_t s = 0; s < w.alphabet().size(); ++s) {
      if (prod.label(static_cast<int>(s), a) != whole.label(static_cast<int>(s), image(a))) {
        return false;
      }
    }
    for (Elem b = 0; b < prod.size(); ++b) {
      if (prod.subset(a, b) != whole.subset(image(a), image(b))) return false;
      if (prod.before(a, b) != whole.before(image(a), image(b))) return false;
      if ((a == b) != (image(a) == image(b))) return false;
    }
  }
  return true;
}

}  // namespace msokit
