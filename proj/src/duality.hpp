#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "monoid.hpp"

namespace msokit {

// Finite Boolean algebra (the powerset of an atom set, elements encoded as
// bitmasks) with a binary operation that is normal and additive in each
// argument; both laws are checked exhaustively on construction.
struct FiniteBAO {
  int atoms = 0;
  std::vector<std::uint32_t> op;  // carrier x carrier, row-major

  std::uint32_t carrier() const { return 1u << atoms; }
  std::uint32_t apply(std::uint32_t a, std::uint32_t b) const {
    return op[(static_cast<std::size_t>(a) << atoms) | b];
  }
};

// InputError names the violated law and a witness; ResourceError beyond
// 8 atoms.
FiniteBAO make_bao(int atoms, std::vector<std::uint32_t> op);

// Finite set of points with a ternary relation (every relation on a finite
// discrete space is compatible).
struct RelSpace {
  int points = 0;
  std::vector<char> rel;  // (p*points + q)*points + r

  bool holds(int p, int q, int r) const {
    return rel[static_cast<std::size_t>((p * points + q) * points + r)] != 0;
  }
};

// The dual space: points are the prime filters, which for a finite Boolean
// algebra are exactly the principal filters at atoms; the relation relates
// (p,q,r) iff every product of filter members lands in r, computed through
// the operation's atom values.
RelSpace prime_filters(const FiniteBAO& b);

// The dual algebra: all subsets of the points with
// A.B = {z : exists x in A, y in B with R(x,y,z)}.
FiniteBAO dual_op(const RelSpace& x);

struct IsoReport {
  struct Line {
    std::string law;
    bool pass;
  };
  std::vector<Line> lines;
  bool all_pass = true;
  std::string str() const;
};

// Composes the two functors and checks that a |-> {atoms below a} is an
// isomorphism onto the double dual, law by law.
IsoReport round_trip(const FiniteBAO& b);

// The level-k Lindenbaum algebra in its transported form: all subsets of
// the monoid with the complexified multiplication.
FiniteBAO lt_algebra(const FiniteMonoid& m);

struct DualityReport {
  std::uint32_t points = 0;
  bool functional = false;
  bool graph = false;
};

// True iff the relation on the dual of lt_algebra(m) is the graph of the
// monoid multiplication.
bool graph_check(const FiniteMonoid& m);
DualityReport graph_check_report(const FiniteMonoid& m);

// Builds S_k and runs the graph check.
DualityReport duality_check(const Alphabet& alphabet, int k);

}  // namespace msokit
