#pragma once

// Representations of a finite semilattice in a finite generalized Boolean
// algebra, and the decision procedures for cover-to-join, tightness and
// non-degeneracy.
//
// Tightness is always evaluated against an IdealView; the view's unit plays
// the role of 1 in ¬π(y) = 1 \ π(y) and in the empty meet.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tightrep/element_set.hpp"
#include "tightrep/error.hpp"
#include "tightrep/lattice.hpp"

namespace tightrep {

/// A zero- and meet-preserving map from a semilattice into an ideal view of
/// a generalized Boolean algebra.
class Representation {
 public:
  Representation() = default;

  FiniteMeetSemilattice const& domain() const { return domain_; }
  IdealView const& codomain() const { return codomain_; }
  FiniteGenBoolAlg const& algebra() const { return codomain_.parent(); }
  std::vector<element> const& images() const { return map_; }

  element operator()(element x) const {
    domain_.carrier().check(x);
    return map_[x];
  }

  ElementSet image(ElementSet xs) const {
    ElementSet out;
    for (auto x : xs) out.insert(map_[x]);
    return out;
  }
  ElementSet range() const { return image(domain_.all()); }

  /// The same map seen as a representation into another view.
  Representation with_codomain(IdealView view) const {
    if (!(view.parent() == algebra())) throw precondition_error("view belongs to a different algebra");
    if (!range().subset_of(view.members())) throw precondition_error("range is not contained in the view");
    Representation r = *this;
    r.codomain_ = std::move(view);
    return r;
  }

  friend Representation validate_representation(FiniteMeetSemilattice domain, IdealView codomain,
                                                 std::vector<element> map);

 private:
  Representation(FiniteMeetSemilattice d, IdealView c, std::vector<element> m)
      : domain_(std::move(d)), codomain_(std::move(c)), map_(std::move(m)) {}

  FiniteMeetSemilattice domain_;
  IdealView codomain_;
  std::vector<element> map_;
};

inline Representation validate_representation(FiniteMeetSemilattice domain, IdealView codomain,
                                              std::vector<element> map) {
  auto const& alg = codomain.parent();
  if (map.size() != domain.size()) {
    throw validation_error("map has " + std::to_string(map.size()) + " entries, domain has " +
                           std::to_string(domain.size()));
  }
  for (element x = 0; x < map.size(); ++x) {
    alg.carrier().check(map[x]);
    if (!codomain.contains(map[x])) {
      throw validation_error("image of " + domain.name(x) + " lies outside the codomain");
    }
  }
  if (map[domain.zero()] != alg.zero()) throw validation_error("zero not preserved");
  for (element x = 0; x < domain.size(); ++x) {
    for (element y = 0; y < domain.size(); ++y) {
      if (map[domain.meet(x, y)] != alg.meet(map[x], map[y])) {
        throw validation_error("meet not preserved at (" + domain.name(x) + "," + domain.name(y) + ")");
      }
    }
  }
  return Representation(std::move(domain), std::move(codomain), std::move(map));
}

inline Representation validate_representation(FiniteMeetSemilattice domain, FiniteGenBoolAlg codomain,
                                              std::vector<element> map) {
  return validate_representation(std::move(domain), IdealView::full(std::move(codomain)), std::move(map));
}

/// Name-keyed variant; every domain element must be mapped exactly once.
inline Representation validate_representation(FiniteMeetSemilattice domain, IdealView codomain,
                                              std::vector<std::pair<std::string, std::string>> const& pairs) {
  std::vector<element> map(domain.size(), no_element);
  for (auto const& [x, b] : pairs) {
    element xi = domain.index_of(x);
    element bi = codomain.parent().index_of(b);
    if (map[xi] != no_element) throw validation_error("element " + x + " mapped twice");
    map[xi] = bi;
  }
  for (element x = 0; x < map.size(); ++x) {
    if (map[x] == no_element) throw validation_error("map missing element " + domain.name(x));
  }
  return validate_representation(std::move(domain), std::move(codomain), std::move(map));
}

/// E^{X,Y} = {z : z <= x for x in X, z ∧ y = 0 for y in Y}
inline ElementSet constrained_interval(FiniteMeetSemilattice const& e, ElementSet xs, ElementSet ys) {
  e.carrier().check(xs);
  e.carrier().check(ys);
  ElementSet out;
  for (element z = 0; z < e.size(); ++z) {
    bool ok = true;
    for (auto x : xs) ok = ok && e.meet(z, x) == z;
    for (auto y : ys) ok = ok && e.meet(z, y) == e.zero();
    if (ok) out.insert(z);
  }
  return out;
}

/// Result of a cover test; `uncovered` is a nonzero member of F disjoint
/// from every member of Z.
struct CoverCheck {
  bool covers = true;
  element uncovered = no_element;

  explicit operator bool() const { return covers; }
};

inline CoverCheck is_cover(FiniteMeetSemilattice const& e, ElementSet cover, ElementSet f) {
  e.carrier().check(f);
  e.carrier().check(cover);
  if (!cover.subset_of(f)) throw precondition_error("cover is not a subset of F");
  for (auto x : f) {
    if (x == e.zero()) continue;
    bool met = false;
    for (auto z : cover) met = met || e.meet(z, x) != e.zero();
    if (!met) return {false, x};
  }
  return {};
}

namespace detail {

inline bool covers_nonzero(FiniteMeetSemilattice const& e, ElementSet cover, ElementSet f) {
  for (auto x : f) {
    if (x == e.zero()) continue;
    bool met = false;
    for (auto z : cover) {
      if (e.meet(z, x) != e.zero()) {
        met = true;
        break;
      }
    }
    if (!met) return false;
  }
  return true;
}

}  // namespace detail

/// Visits the inclusion-minimal covers of F (subsets of F \ {0}) in
/// graded-lexicographic order. Returns false if visit stopped early.
template <typename Visit>
bool for_each_minimal_cover(FiniteMeetSemilattice const& e, ElementSet f, Visit&& visit) {
  e.carrier().check(f);
  return for_each_subset(f.without(e.zero()), [&](ElementSet z) {
    if (!detail::covers_nonzero(e, z, f)) return true;
    for (auto m : z) {
      if (detail::covers_nonzero(e, z.without(m), f)) return true;
    }
    return static_cast<bool>(visit(z));
  });
}

/// Visits every cover of F, zero included, in graded-lexicographic order.
template <typename Visit>
bool for_each_cover(FiniteMeetSemilattice const& e, ElementSet f, Visit&& visit) {
  e.carrier().check(f);
  return for_each_subset(f, [&](ElementSet z) {
    if (!detail::covers_nonzero(e, z, f)) return true;
    return static_cast<bool>(visit(z));
  });
}

inline std::vector<ElementSet> covers_of(FiniteMeetSemilattice const& e, ElementSet f) {
  std::vector<ElementSet> out;
  for_each_minimal_cover(e, f, [&](ElementSet z) {
    out.push_back(z);
    return true;
  });
  return out;
}

/// Pass, or the first failure found in the deterministic search order.
template <typename Witness>
struct Verdict {
  std::optional<Witness> failure;

  bool passed() const { return !failure.has_value(); }
  explicit operator bool() const { return passed(); }
};

/// x together with a cover Z of E^{{x},∅} where ⋁π(Z) ≠ π(x).
struct CoverToJoinWitness {
  element x = no_element;
  ElementSet cover;
  element join = no_element;
};

/// (X, Y, Z) where Z covers E^{X,Y} and ⋁π(Z) = lhs differs from
/// ⋀π(X) ∧ ⋀¬π(Y) = rhs.
struct TightWitness {
  ElementSet xs;
  ElementSet ys;
  ElementSet cover;
  element lhs = no_element;
  element rhs = no_element;
};

/// A codomain element outside the ideal generated by the range.
struct NondegeneracyWitness {
  element outside = no_element;
};

struct TightnessReport {
  Verdict<CoverToJoinWitness> cover_to_join;
  Verdict<TightWitness> tight;
  Verdict<NondegeneracyWitness> nondegenerate;
};

/// Search controls for is_tight. The defaults are the reduced search; turning
/// both flags off scans every X, Y and every cover straight from the definition.
struct TightOptions {
  bool reduce_xy = true;
  bool minimal_covers_only = true;
};

namespace detail {

template <typename Visit>
bool for_each_cover_of(FiniteMeetSemilattice const& e, ElementSet f, bool minimal_only, Visit&& visit) {
  if (minimal_only) return for_each_minimal_cover(e, f, visit);
  return for_each_cover(e, f, visit);
}

inline bool is_antichain(FiniteMeetSemilattice const& e, ElementSet s) {
  for (auto a : s) {
    for (auto b : s) {
      if (a != b && e.meet(a, b) == a) return false;
    }
  }
  return true;
}

}  // namespace detail

/// ⋀_{x∈X} π(x) ∧ ⋀_{y∈Y} ¬π(y) inside `view`.
inline element tight_rhs(Representation const& rep, IdealView const& view, ElementSet xs, ElementSet ys) {
  auto const& alg = view.parent();
  element acc = view.top();
  for (auto x : xs) acc = alg.meet(acc, rep(x));
  for (auto y : ys) acc = alg.meet(acc, view.negate(rep(y)));
  return acc;
}

/// Visits the (X, Y) pairs of the tightness search in order. With reduction,
/// X is ∅ or a singleton (replacing X by its meet) and Y is an antichain
/// (replacing Y by its maximal elements); pairs giving an already seen
/// (E^{X,Y}, right-hand side) combination are skipped.
template <typename Visit>
bool for_each_tight_instance(Representation const& rep, IdealView const& view, bool reduce, Visit&& visit) {
  auto const& e = rep.domain();
  if (!reduce) {
    return for_each_subset(e.all(), [&](ElementSet xs) {
      return for_each_subset(e.all(), [&](ElementSet ys) {
        return static_cast<bool>(visit(xs, ys, constrained_interval(e, xs, ys), tight_rhs(rep, view, xs, ys)));
      });
    });
  }
  std::vector<ElementSet> antichains;
  for_each_subset(e.all(), [&](ElementSet ys) {
    if (detail::is_antichain(e, ys)) antichains.push_back(ys);
    return true;
  });
  std::vector<ElementSet> x_choices{ElementSet{}};
  for (element x = 0; x < e.size(); ++x) x_choices.push_back(ElementSet{x});

  std::set<std::pair<std::uint64_t, element>> seen;
  for (auto xs : x_choices) {
    for (auto ys : antichains) {
      auto f = constrained_interval(e, xs, ys);
      auto rhs = tight_rhs(rep, view, xs, ys);
      if (!seen.emplace(f.bits(), rhs).second) continue;
      if (!visit(xs, ys, f, rhs)) return false;
    }
  }
  return true;
}

inline Verdict<TightWitness> is_tight(Representation const& rep, IdealView const& view, TightOptions options = {}) {
  if (!(view.parent() == rep.algebra())) throw precondition_error("view belongs to a different algebra");
  if (!rep.range().subset_of(view.members())) throw precondition_error("range is not contained in the view");
  auto const& e = rep.domain();
  auto const& alg = view.parent();
  Verdict<TightWitness> verdict;
  for_each_tight_instance(rep, view, options.reduce_xy, [&](ElementSet xs, ElementSet ys, ElementSet f, element rhs) {
    return detail::for_each_cover_of(e, f, options.minimal_covers_only, [&](ElementSet z) {
      element lhs = alg.join_of(rep.image(z));
      if (lhs != rhs) {
        verdict.failure = TightWitness{xs, ys, z, lhs, rhs};
        return false;
      }
      return true;
    });
  });
  return verdict;
}

inline Verdict<TightWitness> is_tight(Representation const& rep, TightOptions options = {}) {
  return is_tight(rep, rep.codomain(), options);
}

/// Checks ⋁π(Z) = π(x) for every x and every cover Z of {z : z <= x}.
inline Verdict<CoverToJoinWitness> is_cover_to_join(Representation const& rep, bool minimal_covers_only = true) {
  auto const& e = rep.domain();
  auto const& alg = rep.algebra();
  Verdict<CoverToJoinWitness> verdict;
  for (element x = 0; x < e.size() && verdict.passed(); ++x) {
    auto f = constrained_interval(e, ElementSet{x}, {});
    detail::for_each_cover_of(e, f, minimal_covers_only, [&](ElementSet z) {
      element lhs = alg.join_of(rep.image(z));
      if (lhs != rep(x)) {
        verdict.failure = CoverToJoinWitness{x, z, lhs};
        return false;
      }
      return true;
    });
  }
  return verdict;
}

/// Passes iff the ideal generated by the range is the whole view.
inline Verdict<NondegeneracyWitness> is_nondegenerate(Representation const& rep, IdealView const& view) {
  auto generated = ideal_generated_by(view.parent(), rep.range());
  Verdict<NondegeneracyWitness> verdict;
  auto outside = view.members() - generated.members();
  if (!outside.empty()) verdict.failure = NondegeneracyWitness{*outside.begin()};
  return verdict;
}

inline Verdict<NondegeneracyWitness> is_nondegenerate(Representation const& rep) {
  return is_nondegenerate(rep, rep.codomain());
}

inline TightnessReport check(Representation const& rep, IdealView const& view) {
  return {is_cover_to_join(rep), is_tight(rep, view), is_nondegenerate(rep, view)};
}

inline TightnessReport check(Representation const& rep) { return check(rep, rep.codomain()); }

/// The corner of a cover-to-join representation: e = ⋁π(Z) for the cover
/// Z = E \ {0}, and the representation corestricted to {a : a <= e}.
struct Tightening {
  element unit = no_element;
  IdealView codomain;
  Representation representation;
};

/// e = ⋁_{z∈Z} π(z) for a cover Z of E.
inline element corner_unit(Representation const& rep, ElementSet cover) {
  if (!is_cover(rep.domain(), cover, rep.domain().all())) throw precondition_error("not a cover of E");
  return rep.algebra().join_of(rep.image(cover));
}

inline Tightening tighten(Representation const& rep) {
  auto ctj = is_cover_to_join(rep);
  if (!ctj) {
    auto const& w = *ctj.failure;
    throw precondition_error("representation is not cover-to-join: x = " + rep.domain().name(w.x) +
                             ", Z = " + rep.domain().render(w.cover));
  }
  auto const& alg = rep.algebra();
  element unit = corner_unit(rep, rep.domain().nonzero());
  for (element x = 0; x < rep.domain().size(); ++x) {
    if (!alg.leq(rep(x), unit)) throw internal_error("image of " + rep.domain().name(x) + " exceeds the corner unit");
  }
  auto view = principal_ideal(alg, unit);
  auto corestricted = rep.with_codomain(view);
  if (!is_tight(corestricted)) throw internal_error("corestricted representation is not tight");
  return {unit, std::move(view), std::move(corestricted)};
}

/// The same map into the ideal generated by its range.
inline Representation restrict_to_generated_ideal(Representation const& rep) {
  return rep.with_codomain(ideal_generated_by(rep.algebra(), rep.range()));
}

}  // namespace tightrep
