#include "duality.hpp"

#include "errors.hpp"

namespace msokit {

namespace {

std::string mask_str(std::uint32_t mask, int atoms) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < atoms; ++i) {
    if (mask & (1u << i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

FiniteBAO make_bao(int atoms, std::vector<std::uint32_t> op) {
  if (atoms < 0 || atoms > 8) {
    throw ResourceError("bao: atom count " + std::to_string(atoms) + " outside supported range");
  }
  FiniteBAO b;
  b.atoms = atoms;
  b.op = std::move(op);
  std::uint32_t n = b.carrier();
  if (b.op.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("bao: operation table size mismatch");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (b.apply(a, 0) != 0) {
      throw InputError("bao: operation is not normal, " + mask_str(a, atoms) +
                       " . bottom = " + mask_str(b.apply(a, 0), atoms));
    }
    if (b.apply(0, a) != 0) {
      throw InputError("bao: operation is not normal, bottom . " + mask_str(a, atoms) +
                       " = " + mask_str(b.apply(0, a), atoms));
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (b.apply(x | y, a) != (b.apply(x, a) | b.apply(y, a))) {
          throw InputError("bao: operation not additive in the first argument at (" +
                           mask_str(x, atoms) + "," + mask_str(y, atoms) + ";" +
                           mask_str(a, atoms) + ")");
        }
        if (b.apply(a, x | y) != (b.apply(a, x) | b.apply(a, y))) {
          throw InputError("bao: operation not additive in the second argument at (" +
                           mask_str(a, atoms) + ";" + mask_str(x, atoms) + "," +
                           mask_str(y, atoms) + ")");
        }
      }
    }
  }
  return b;
}

RelSpace prime_filters(const FiniteBAO& b) {
  RelSpace x;
  x.points = b.atoms;
  x.rel.assign(static_cast<std::size_t>(b.atoms) * b.atoms * b.atoms, 0);
  // Additivity makes the operation monotone, so the filter condition
  // reduces to its value on the atoms themselves.
  for (int p = 0; p < b.atoms; ++p) {
    for (int q = 0; q < b.atoms; ++q) {
      std::uint32_t product = b.apply(1u << p, 1u << q);
      for (int r = 0; r < b.atoms; ++r) {
        if (product & (1u << r)) {
          x.rel[static_cast<std::size_t>((p * b.atoms + q) * b.atoms + r)] = 1;
        }
      }
    }
  }
  return x;
}

FiniteBAO dual_op(const RelSpace& x) {
  int atoms = x.points;
  if (atoms > 8) throw ResourceError("dual_op: too many points");
  std::uint32_t n = 1u << atoms;
  std::vector<std::uint32_t> pair_image(static_cast<std::size_t>(atoms) * atoms, 0);
  for (int p = 0; p < atoms; ++p) {
    for (int q = 0; q < atoms; ++q) {
      std::uint32_t image = 0;
      for (int r = 0; r < atoms; ++r) {
        if (x.holds(p, q, r)) image |= 1u << r;
      }
      pair_image[static_cast<std::size_t>(p) * atoms + q] = image;
    }
  }
  std::vector<std::uint32_t> op(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t image = 0;
      for (int p = 0; p < atoms; ++p) {
        if (!(a & (1u << p))) continue;
        for (int q = 0; q < atoms; ++q) {
          if (b & (1u << q)) image |= pair_image[static_cast<std::size_t>(p) * atoms + q];
        }
      }
      op[(static_cast<std::size_t>(a) << atoms) | b] = image;
    }
  }
  return make_bao(atoms, std::move(op));
}

std::string IsoReport::str() const {
  std::string out;
  for (const auto& line : lines) {
    out += (line.pass ? "pass  " : "FAIL  ");
    out += line.law;
    out += "\n";
  }
  return out;
}

IsoReport round_trip(const FiniteBAO& b) {
  FiniteBAO dd = dual_op(prime_filters(b));
  IsoReport report;
  auto add = [&](const std::string& law, bool pass) {
    report.lines.push_back({law, pass});
    report.all_pass = report.all_pass && pass;
  };
  std::uint32_t n = b.carrier();
  // h maps an element to the set of atoms below it; on bitmasks this is
  // the identity, so bijectivity amounts to equal carriers.
  auto h = [](std::uint32_t a) { return a; };
  add("bijective onto double dual", dd.carrier() == n);
  if (dd.carrier() != n) return report;
  bool joins = true, meets = true, compl_ok = true, bounds = true, op_ok = true;
  std::uint32_t top = n - 1;
  bounds = h(0) == 0 && h(top) == top;
  for (std::uint32_t a = 0; a < n; ++a) {
    compl_ok = compl_ok && (h(a ^ top) == (h(a) ^ top));
    for (std::uint32_t c = 0; c < n; ++c) {
      joins = joins && (h(a | c) == (h(a) | h(c)));
      meets = meets && (h(a & c) == (h(a) & h(c)));
      op_ok = op_ok && (dd.apply(h(a), h(c)) == h(b.apply(a, c)));
    }
  }
  add("preserves bottom and top", bounds);
  add("preserves joins", joins);
  add("preserves meets", meets);
  add("preserves complement", compl_ok);
  add("preserves the operation", op_ok);
  return report;
}

FiniteBAO lt_algebra(const FiniteMonoid& m) {
  if (m.size > 8) {
    throw ResourceError("lt_algebra: monoid with " + std::to_string(m.size) +
                        " elements exceeds the powerset cap");
  }
  int atoms = static_cast<int>(m.size);
  std::uint32_t n = 1u << atoms;
  std::vector<std::uint32_t> op(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t image = 0;
      for (int p = 0; p < atoms; ++p) {
        if (!(a & (1u << p))) continue;
        for (int q = 0; q < atoms; ++q) {
          if (b & (1u << q)) {
            image |= 1u << m.mul(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q));
          }
        }
      }
      op[(static_cast<std::size_t>(a) << atoms) | b] = image;
    }
  }
  return make_bao(atoms, std::move(op));
}

DualityReport graph_check_report(const FiniteMonoid& m) {
  DualityReport report;
  RelSpace x = prime_filters(lt_algebra(m));
  report.points = static_cast<std::uint32_t>(x.points);
  report.functional = true;
  report.graph = true;
  for (int p = 0; p < x.points; ++p) {
    for (int q = 0; q < x.points; ++q) {
      int found = -1;
      int count = 0;
      for (int r = 0; r < x.points; ++r) {
        if (x.holds(p, q, r)) {
          found = r;
          ++count;
        }
      }
      if (count != 1) report.functional = false;
      if (count != 1 ||
          static_cast<std::uint32_t>(found) !=
              m.mul(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q))) {
        report.graph = false;
      }
    }
  }
  return report;
}

bool graph_check(const FiniteMonoid& m) { return graph_check_report(m).graph; }

DualityReport duality_check(const Alphabet& alphabet, int k) {
  return graph_check_report(build_sk(alphabet, k));
}

}  // namespace msokit
