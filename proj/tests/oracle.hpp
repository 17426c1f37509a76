#pragma once

// Brute-force evaluations straight from the definitions, on plain index
// tables. Nothing here calls into the library's search code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::size_t>;  // row-major n x n

struct Semilattice {
  std::size_t n;
  std::size_t zero;
  Table meet;
  std::size_t m(std::size_t a, std::size_t b) const { return meet[a * n + b]; }
};

struct Algebra {
  std::size_t n;
  std::size_t zero;
  std::size_t top;
  Table meet, join;
  std::size_t m(std::size_t a, std::size_t b) const { return meet[a * n + b]; }
  std::size_t j(std::size_t a, std::size_t b) const { return join[a * n + b]; }
  bool leq(std::size_t a, std::size_t b) const { return m(a, b) == a; }
  /// top \ a by search
  std::size_t neg(std::size_t a, std::size_t unit) const {
    for (std::size_t x = 0; x < n; ++x) {
      if (j(x, a) == unit && m(x, a) == zero) return x;
    }
    return n;
  }
};

inline bool bit(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1U; }

/// Every cover of every E^{X,Y}, for all X, Y ⊆ E, checked against the
/// definition of tightness with `unit` as 1.
inline bool is_tight(Semilattice const& e, Algebra const& b, std::vector<std::size_t> const& pi, std::size_t unit) {
  std::uint64_t const all = std::uint64_t{1} << e.n;
  for (std::uint64_t xs = 0; xs < all; ++xs) {
    for (std::uint64_t ys = 0; ys < all; ++ys) {
      std::uint64_t f = 0;
      for (std::size_t z = 0; z < e.n; ++z) {
        bool in = true;
        for (std::size_t x = 0; x < e.n; ++x) {
          if (bit(xs, x) && e.m(z, x) != z) in = false;
          if (bit(ys, x) && e.m(z, x) != e.zero) in = false;
        }
        if (in) f |= std::uint64_t{1} << z;
      }
      std::size_t rhs = unit;
      for (std::size_t x = 0; x < e.n; ++x) {
        if (bit(xs, x)) rhs = b.m(rhs, pi[x]);
        if (bit(ys, x)) rhs = b.m(rhs, b.neg(pi[x], unit));
      }
      for (std::uint64_t zs = 0; zs < all; ++zs) {
        if ((zs & ~f) != 0) continue;
        bool cover = true;
        for (std::size_t x = 0; x < e.n && cover; ++x) {
          if (!bit(f, x) || x == e.zero) continue;
          bool met = false;
          for (std::size_t z = 0; z < e.n; ++z) met = met || (bit(zs, z) && e.m(z, x) != e.zero);
          cover = met;
        }
        if (!cover) continue;
        std::size_t lhs = b.zero;
        for (std::size_t z = 0; z < e.n; ++z) {
          if (bit(zs, z)) lhs = b.j(lhs, pi[z]);
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

/// Only the instances X = {x}, Y = ∅.
inline bool is_cover_to_join(Semilattice const& e, Algebra const& b, std::vector<std::size_t> const& pi) {
  std::uint64_t const all = std::uint64_t{1} << e.n;
  for (std::size_t x = 0; x < e.n; ++x) {
    for (std::uint64_t zs = 0; zs < all; ++zs) {
      bool inside = true, cover = true;
      for (std::size_t z = 0; z < e.n; ++z) inside = inside && (!bit(zs, z) || e.m(z, x) == z);
      if (!inside) continue;
      for (std::size_t y = 0; y < e.n && cover; ++y) {
        if (e.m(y, x) != y || y == e.zero) continue;
        bool met = false;
        for (std::size_t z = 0; z < e.n; ++z) met = met || (bit(zs, z) && e.m(z, y) != e.zero);
        cover = met;
      }
      if (!cover) continue;
      std::size_t lhs = b.zero;
      for (std::size_t z = 0; z < e.n; ++z) {
        if (bit(zs, z)) lhs = b.j(lhs, pi[z]);
      }
      if (lhs != pi[x]) return false;
    }
  }
  return true;
}

/// All n^(n^2) tables filtered by the semilattice axioms with zero = 0.
inline std::vector<Table> all_semilattice_tables(std::size_t n) {
  std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  std::vector<Table> out;
  Table t(cells);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      t[i] = c % n;
      c /= n;
    }
    auto m = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = m(a, a) == a && m(0, a) == 0;
      for (std::size_t b = 0; b < n && ok; ++b) {
        ok = m(a, b) == m(b, a);
        for (std::size_t d = 0; d < n && ok; ++d) ok = m(m(a, b), d) == m(a, m(b, d));
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

/// Number of isomorphism classes (relabelings fixing 0) among the tables.
inline std::size_t count_classes(std::vector<Table> const& tables, std::size_t n) {
  std::set<Table> seen;
  std::size_t classes = 0;
  for (auto const& t : tables) {
    if (seen.count(t)) continue;
    ++classes;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      Table r(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) r[p[a] * n + p[b]] = p[t[a * n + b]];
      }
      seen.insert(r);
    } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  }
  return classes;
}

/// Every ideal of the algebra, by testing all subsets against the definition.
inline std::vector<std::uint64_t> all_ideals(Algebra const& b) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << b.n); ++s) {
    bool ideal = true;
    for (std::size_t a = 0; a < b.n && ideal; ++a) {
      for (std::size_t c = 0; c < b.n && ideal; ++c) {
        if (bit(s, c) && b.leq(a, c) && !bit(s, a)) ideal = false;
        if (bit(s, a) && bit(s, c) && !bit(s, b.j(a, c))) ideal = false;
      }
    }
    if (ideal) out.push_back(s);
  }
  return out;
}

/// Smallest ideal containing `gens`: the intersection of all ideals containing it.
inline std::uint64_t smallest_ideal(std::vector<std::uint64_t> const& ideals, std::uint64_t gens) {
  std::uint64_t best = ~std::uint64_t{0};
  for (auto s : ideals) {
    if ((gens & ~s) == 0) best &= s;
  }
  return best;
}

}  // namespace oracle
