#pragma once

// Small-universe generators (semilattices, powerset algebras, representations)
// and the exhaustive searches built on them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tightrep/element_set.hpp"
#include "tightrep/error.hpp"
#include "tightrep/lattice.hpp"
#include "tightrep/representation.hpp"

namespace tightrep {

/// Largest semilattice the generators will build; relabeling is exhaustive.
inline constexpr std::size_t max_generated_semilattice = 6;
/// Largest powerset algebra the generators will build (2^6 = 64 elements).
inline constexpr std::size_t max_atoms = 6;

struct UniverseSpec {
  std::size_t max_semilattice_size = 1;
  std::vector<std::size_t> atom_counts{0};
  bool up_to_iso = false;

  void validate() const {
    if (max_semilattice_size < 1) throw precondition_error("max semilattice size must be at least 1");
    if (max_semilattice_size > max_generated_semilattice) {
      throw precondition_error("max semilattice size must be at most " + std::to_string(max_generated_semilattice));
    }
    if (atom_counts.empty()) throw precondition_error("at least one atom count is required");
    for (auto k : atom_counts) {
      if (k > max_atoms) throw precondition_error("atom count must be at most " + std::to_string(max_atoms));
    }
  }
};

/// Subsets of {1..k} under union and intersection, ordered by bitmask.
/// The empty set is named "0"; other subsets by their atoms, e.g. "13".
inline FiniteGenBoolAlg powerset_algebra(std::size_t k) {
  if (k > max_atoms) throw precondition_error("powerset algebra supports at most " + std::to_string(max_atoms) + " atoms");
  std::size_t const n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < n; ++m) {
    std::string name;
    for (std::size_t a = 0; a < k; ++a) {
      if ((m >> a) & 1U) name += std::to_string(a + 1);
    }
    names.push_back(name.empty() ? "0" : name);
  }
  std::vector<element> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet[a * n + b] = a & b;
      join[a * n + b] = a | b;
    }
  }
  return FiniteGenBoolAlg::from_tables(std::move(names), 0, OperationTable(n, std::move(meet)),
                                       OperationTable(n, std::move(join)));
}

/// Element names "0", "1", ... used for generated semilattices.
inline std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

/// Lexicographically least meet table over all relabelings fixing element 0.
inline OperationTable canonical_form(OperationTable const& table) {
  std::size_t const n = table.size();
  std::vector<element> perm(n);
  std::iota(perm.begin(), perm.end(), element{0});
  std::vector<element> best = table.cells();
  std::vector<element> cand(n * n);
  do {
    // perm maps old label -> new label
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cand[perm[i] * n + perm[j]] = perm[table(i, j)];
    }
    if (cand < best) best = cand;
  } while (n > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
  return OperationTable(n, std::move(best));
}

/// Visits every meet table on n elements with zero = element 0, in a fixed
/// order. With up_to_iso only tables equal to their canonical form are
/// visited. Returns false if visit stopped early.
template <typename Visit>
bool for_each_semilattice(std::size_t n, bool up_to_iso, Visit&& visit) {
  if (n < 1) throw precondition_error("semilattice size must be at least 1");
  if (n > max_generated_semilattice) {
    throw precondition_error("semilattice size must be at most " + std::to_string(max_generated_semilattice));
  }
  // A strict order among the nonzero elements 1..n-1 is a bitmask over the
  // ordered pairs (i, j), i != j, meaning i < j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::uint64_t const limit = std::uint64_t{1} << pairs.size();
  std::vector<char> le(n * n);
  auto names = numbered_names(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::fill(le.begin(), le.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      le[i * n + i] = 1;
      le[0 * n + i] = 1;
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1U) le[pairs[p].first * n + pairs[p].second] = 1;
    }
    bool order = true;
    for (std::size_t i = 1; i < n && order; ++i) {
      for (std::size_t j = 1; j < n && order; ++j) {
        if (i != j && le[i * n + j] && le[j * n + i]) order = false;
        for (std::size_t k = 1; k < n && order; ++k) {
          if (le[i * n + j] && le[j * n + k] && !le[i * n + k]) order = false;
        }
      }
    }
    if (!order) continue;
    std::vector<element> meet(n * n);
    bool complete = true;
    for (std::size_t a = 0; a < n && complete; ++a) {
      for (std::size_t b = 0; b < n && complete; ++b) {
        element glb = no_element;
        for (std::size_t l = 0; l < n; ++l) {
          if (!le[l * n + a] || !le[l * n + b]) continue;
          bool greatest = true;
          for (std::size_t o = 0; o < n && greatest; ++o) {
            if (le[o * n + a] && le[o * n + b]) greatest = le[o * n + l] != 0;
          }
          if (greatest) {
            glb = l;
            break;
          }
        }
        if (glb == no_element) complete = false;
        meet[a * n + b] = glb;
      }
    }
    if (!complete) continue;
    OperationTable table(n, std::move(meet));
    if (up_to_iso && !(canonical_form(table) == table)) continue;
    if (!visit(FiniteMeetSemilattice::from_table(names, 0, std::move(table)))) return false;
  }
  return true;
}

inline std::vector<FiniteMeetSemilattice> enumerate_semilattices(std::size_t n, bool up_to_iso) {
  std::vector<FiniteMeetSemilattice> out;
  for_each_semilattice(n, up_to_iso, [&](FiniteMeetSemilattice s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

/// Visits every representation of E in B. Maps are ordered lexicographically
/// by (π(e_0), π(e_1), ...) in declared order.
template <typename Visit>
bool for_each_representation(FiniteMeetSemilattice const& e, FiniteGenBoolAlg const& b, Visit&& visit) {
  std::size_t const n = e.size();
  std::vector<element> map(n, 0);
  std::vector<element> free;
  for (element x = 0; x < n; ++x) {
    if (x != e.zero()) free.push_back(x);
  }
  map[e.zero()] = b.zero();
  auto view = IdealView::full(b);
  while (true) {
    bool ok = true;
    for (element x = 0; x < n && ok; ++x) {
      for (element y = x + 1; y < n && ok; ++y) ok = map[e.meet(x, y)] == b.meet(map[x], map[y]);
    }
    if (ok && !visit(validate_representation(e, view, map))) return false;
    // odometer, last free element fastest
    std::size_t i = free.size();
    while (i > 0) {
      element x = free[i - 1];
      if (++map[x] < b.size()) break;
      map[x] = 0;
      --i;
    }
    if (i == 0) return true;
  }
}

inline std::vector<Representation> enumerate_representations(FiniteMeetSemilattice const& e, FiniteGenBoolAlg const& b) {
  std::vector<Representation> out;
  for_each_representation(e, b, [&](Representation r) {
    out.push_back(std::move(r));
    return true;
  });
  return out;
}

/// A cover-to-join representation that is not tight into its full codomain.
struct GapExample {
  FiniteMeetSemilattice semilattice;
  FiniteGenBoolAlg algebra;
  Representation representation;
  TightnessReport report;
};

/// Visits every (E, B, π) of the universe in order (size of E, then E, then
/// atom count, then π) and calls visit on those that are cover-to-join but
/// not tight.
template <typename Visit>
bool search_gap(UniverseSpec const& spec, Visit&& visit) {
  spec.validate();
  std::vector<FiniteGenBoolAlg> algebras;
  for (auto k : spec.atom_counts) algebras.push_back(powerset_algebra(k));
  for (std::size_t n = 1; n <= spec.max_semilattice_size; ++n) {
    bool go = for_each_semilattice(n, spec.up_to_iso, [&](FiniteMeetSemilattice const& e) {
      for (auto const& b : algebras) {
        bool more = for_each_representation(e, b, [&](Representation const& rep) {
          auto report = check(rep);
          if (report.cover_to_join && !report.tight) return static_cast<bool>(visit(GapExample{e, b, rep, report}));
          return true;
        });
        if (!more) return false;
      }
      return true;
    });
    if (!go) return false;
  }
  return true;
}

inline std::vector<GapExample> collect_gaps(UniverseSpec const& spec) {
  std::vector<GapExample> out;
  search_gap(spec, [&](GapExample g) {
    out.push_back(std::move(g));
    return true;
  });
  return out;
}

/// Counts from a theorem-verification run. Any violation is a defect.
struct TheoremSummary {
  std::size_t semilattices = 0;
  std::size_t representations = 0;
  std::size_t cover_to_join = 0;
  std::size_t tight = 0;
  std::size_t nondegenerate = 0;
  std::size_t gaps = 0;
  std::size_t violations = 0;
  std::optional<std::string> first_violation;
};

namespace detail {

inline std::string describe(Representation const& rep) {
  std::ostringstream out;
  out << "|E|=" << rep.domain().size() << " |B|=" << rep.algebra().size() << " pi = (";
  for (element x = 0; x < rep.domain().size(); ++x) {
    if (x) out << ", ";
    out << rep.domain().name(x) << "->" << rep.algebra().name(rep(x));
  }
  out << ")";
  return out.str();
}

/// Per-representation theorem checks. Returns the first failed property.
inline std::optional<std::string> check_theorems(Representation const& rep, TightnessReport const& report) {
  auto const& e = rep.domain();
  auto const& alg = rep.algebra();
  auto const view = rep.codomain();
  bool const ctj = report.cover_to_join.passed();
  bool const tight = report.tight.passed();

  // monotone-join bound: lhs <= rhs for every instance and every cover
  bool bounded = true;
  for_each_tight_instance(rep, view, false, [&](ElementSet, ElementSet, ElementSet f, element rhs) {
    return for_each_cover(e, f, [&](ElementSet z) {
      bounded = alg.leq(alg.join_of(rep.image(z)), rhs);
      return bounded;
    });
  });
  if (!bounded) return "monotone-join bound";

  if (is_tight(rep, view, {true, false}).passed() != tight) return "minimal-cover sufficiency";
  if (is_tight(rep, view, {false, false}).passed() != tight) return "reduction soundness";
  if (is_cover_to_join(rep, false).passed() != ctj) return "minimal-cover sufficiency (cover-to-join)";

  if (tight && !ctj) return "tight implies cover-to-join";

  if (ctj) {
    Tightening t;
    try {
      t = tighten(rep);
    } catch (internal_error const& err) {
      return std::string("tightening: ") + err.what();
    }
    if (!is_tight(t.representation).passed()) return "tightening is tight";
    if (!is_ideal(alg, t.codomain.members())) return "tightening codomain is an ideal";
    if (!rep.range().subset_of(t.codomain.members())) return "tightening contains the range";
    bool independent = true;
    for_each_minimal_cover(e, e.all(), [&](ElementSet z) {
      independent = corner_unit(rep, z) == t.unit;
      return independent;
    });
    if (!independent) return "tightening unit is cover-independent";

    // every instance with X nonempty already holds
    bool nonempty_x = true;
    for_each_tight_instance(rep, view, true, [&](ElementSet xs, ElementSet, ElementSet f, element rhs) {
      if (xs.empty()) return true;
      return for_each_minimal_cover(e, f, [&](ElementSet z) {
        nonempty_x = alg.join_of(rep.image(z)) == rhs;
        return nonempty_x;
      });
    });
    if (!nonempty_x) return "cover-to-join satisfies instances with X nonempty";
  }

  if (report.nondegenerate && tight != ctj) return "non-degenerate: tight iff cover-to-join";

  auto restricted = restrict_to_generated_ideal(rep);
  if (!is_nondegenerate(restricted)) return "restriction to generated ideal is non-degenerate";

  for (element x = 0; x < e.size(); ++x) {
    for (element y = 0; y < e.size(); ++y) {
      element px = rep(x), py = rep(y);
      if (alg.meet(px, view.negate(py)) != alg.relative_complement(alg.meet(px, py), px)) {
        return "complement identity";
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_interval_reductions(FiniteMeetSemilattice const& e) {
  std::optional<std::string> failure;
  for_each_subset(e.all(), [&](ElementSet xs) {
    return for_each_subset(e.all(), [&](ElementSet ys) {
      auto f = constrained_interval(e, xs, ys);
      ElementSet maximal;
      for (auto y : ys) {
        bool top = true;
        for (auto o : ys) top = top && (o == y || e.meet(y, o) != y);
        if (top) maximal.insert(y);
      }
      if (constrained_interval(e, xs, maximal) != f) failure = "interval unchanged by maximal Y";
      if (!xs.empty() && constrained_interval(e, ElementSet{e.meet_of(xs)}, ys) != f) {
        failure = "interval unchanged by meet of X";
      }
      return !failure;
    });
  });
  return failure;
}

}  // namespace detail

/// Runs the representation-level theorem checks over the universe and counts.
inline TheoremSummary verify_theorems(UniverseSpec const& spec) {
  spec.validate();
  TheoremSummary summary;
  std::vector<FiniteGenBoolAlg> algebras;
  for (auto k : spec.atom_counts) algebras.push_back(powerset_algebra(k));
  auto violation = [&](std::string what) {
    ++summary.violations;
    if (!summary.first_violation) summary.first_violation = std::move(what);
  };
  for (std::size_t n = 1; n <= spec.max_semilattice_size; ++n) {
    for_each_semilattice(n, spec.up_to_iso, [&](FiniteMeetSemilattice const& e) {
      ++summary.semilattices;
      if (auto f = detail::check_interval_reductions(e)) violation(*f + " on a semilattice of size " + std::to_string(n));
      for (auto const& b : algebras) {
        for_each_representation(e, b, [&](Representation const& rep) {
          ++summary.representations;
          auto report = check(rep);
          summary.cover_to_join += report.cover_to_join.passed();
          summary.tight += report.tight.passed();
          summary.nondegenerate += report.nondegenerate.passed();
          summary.gaps += report.cover_to_join.passed() && !report.tight.passed();
          if (auto f = detail::check_theorems(rep, report)) violation(*f + ": " + detail::describe(rep));
          return true;
        });
      }
      return true;
    });
  }
  return summary;
}

}  // namespace tightrep
