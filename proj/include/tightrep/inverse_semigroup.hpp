#pragma once

// Finite inverse semigroups with zero, their idempotent semilattices, and
// tightness of homomorphisms via the restriction to idempotents.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightrep/element_set.hpp"
#include "tightrep/error.hpp"
#include "tightrep/lattice.hpp"
#include "tightrep/representation.hpp"

namespace tightrep {

struct SemigroupInput {
  std::vector<std::string> elements;
  std::string zero;
  std::vector<std::vector<std::string>> mul;
};

class FiniteInverseSemigroup {
 public:
  FiniteInverseSemigroup() = default;

  static FiniteInverseSemigroup from_table(std::vector<std::string> names, element zero, OperationTable mul);

  std::size_t size() const { return data_->carrier.size(); }
  element zero() const { return data_->zero; }
  Carrier const& carrier() const { return data_->carrier; }
  std::vector<std::string> const& names() const { return data_->carrier.names(); }
  std::string const& name(element e) const { return data_->carrier.name(e); }
  element index_of(std::string_view n) const { return data_->carrier.index_of(n); }
  OperationTable const& mul_table() const { return data_->mul; }
  ElementSet all() const { return ElementSet::first(size()); }

  element mul(element s, element t) const { return data_->mul(s, t); }
  /// s*
  element inverse(element s) const {
    data_->carrier.check(s);
    return data_->inverse[s];
  }
  bool is_idempotent(element s) const { return mul(s, s) == s; }
  ElementSet idempotent_set() const { return data_->idempotents; }

  /// Natural order on idempotents: e <= f iff ef = e.
  bool idempotent_leq(element e, element f) const { return mul(e, f) == e; }

  std::string render(ElementSet s) const { return data_->carrier.render(s); }

  friend bool operator==(FiniteInverseSemigroup const& a, FiniteInverseSemigroup const& b) {
    return a.names() == b.names() && a.zero() == b.zero() && a.mul_table() == b.mul_table();
  }

 private:
  struct Data {
    Carrier carrier;
    element zero;
    OperationTable mul;
    std::vector<element> inverse;
    ElementSet idempotents;
  };

  explicit FiniteInverseSemigroup(std::shared_ptr<Data const> d) : data_(std::move(d)) {}

  std::shared_ptr<Data const> data_;
};

inline FiniteInverseSemigroup FiniteInverseSemigroup::from_table(std::vector<std::string> names, element zero,
                                                                 OperationTable mul) {
  using detail::pair_text;
  using detail::triple_text;
  Carrier c(std::move(names));
  c.check(zero);
  std::size_t const n = c.size();
  if (mul.size() != n) throw validation_error("mul table has wrong size");
  for (auto cell : mul.cells()) c.check(cell);

  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      for (element d = 0; d < n; ++d) {
        if (mul(mul(a, b), d) != mul(a, mul(b, d))) {
          throw validation_error("mul not associative at " + triple_text(c, a, b, d));
        }
      }
    }
  }
  std::vector<element> inverse(n, no_element);
  for (element s = 0; s < n; ++s) {
    for (element t = 0; t < n; ++t) {
      if (mul(mul(s, t), s) != s || mul(mul(t, s), t) != t) continue;
      if (inverse[s] != no_element) {
        throw validation_error("inverse not unique for " + c.name(s) + " (" + c.name(inverse[s]) + " and " +
                               c.name(t) + ")");
      }
      inverse[s] = t;
    }
    if (inverse[s] == no_element) throw validation_error("no inverse for " + c.name(s));
  }
  ElementSet idempotents;
  for (element s = 0; s < n; ++s) {
    if (mul(s, s) == s) idempotents.insert(s);
  }
  for (auto e : idempotents) {
    for (auto f : idempotents) {
      if (mul(e, f) != mul(f, e)) throw validation_error("idempotents do not commute at " + pair_text(c, e, f));
    }
  }
  for (element s = 0; s < n; ++s) {
    if (mul(zero, s) != zero || mul(s, zero) != zero) throw validation_error("zero not absorbing at " + c.name(s));
  }
  return FiniteInverseSemigroup(std::make_shared<Data const>(
      Data{std::move(c), zero, std::move(mul), std::move(inverse), idempotents}));
}

/// Checks associativity, existence and uniqueness of inverses, commuting
/// idempotents and an absorbing zero, in that order.
inline FiniteInverseSemigroup validate_inverse_semigroup(SemigroupInput const& input) {
  Carrier carrier(input.elements);
  if (!carrier.has(input.zero)) throw validation_error("unknown zero element '" + input.zero + "'");
  auto mul = detail::resolve_table(carrier, input.mul, "mul");
  return FiniteInverseSemigroup::from_table(input.elements, carrier.index_of(input.zero), std::move(mul));
}

/// A semilattice read as a commutative idempotent semigroup.
inline FiniteInverseSemigroup as_semigroup(FiniteMeetSemilattice const& e) {
  return FiniteInverseSemigroup::from_table(e.names(), e.zero(), e.meet_table());
}

/// E(S) together with the position of each idempotent in S.
struct IdempotentSemilattice {
  FiniteMeetSemilattice lattice;
  std::vector<element> in_semigroup;  // lattice index -> semigroup index
  std::vector<element> local;         // semigroup index -> lattice index, or no_element
};

inline IdempotentSemilattice idempotent_semilattice(FiniteInverseSemigroup const& s) {
  IdempotentSemilattice out;
  out.in_semigroup = s.idempotent_set().to_vector();
  out.local.assign(s.size(), no_element);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < out.in_semigroup.size(); ++i) {
    out.local[out.in_semigroup[i]] = i;
    names.push_back(s.name(out.in_semigroup[i]));
  }
  std::size_t const m = names.size();
  std::vector<element> meet(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) meet[i * m + j] = out.local[s.mul(out.in_semigroup[i], out.in_semigroup[j])];
  }
  out.lattice = FiniteMeetSemilattice::from_table(std::move(names), out.local[s.zero()], OperationTable(m, std::move(meet)));
  return out;
}

/// E(S) with meet given by multiplication.
inline FiniteMeetSemilattice idempotents(FiniteInverseSemigroup const& s) { return idempotent_semilattice(s).lattice; }

/// Outcome of the generalized Boolean inverse semigroup test: the algebra on
/// E(T) when joins exist and the axioms hold, otherwise a reason and, when a
/// join is missing, the offending pair (as semigroup indices).
struct BooleanIdempotents {
  std::optional<FiniteGenBoolAlg> algebra;
  std::vector<element> in_semigroup;
  std::vector<element> local;
  std::optional<std::pair<element, element>> missing_join;
  std::string reason;

  explicit operator bool() const { return algebra.has_value(); }
};

inline BooleanIdempotents is_generalized_boolean_inverse_semigroup(FiniteInverseSemigroup const& t) {
  auto idem = idempotent_semilattice(t);
  auto const& e = idem.lattice;
  BooleanIdempotents out;
  out.in_semigroup = idem.in_semigroup;
  out.local = idem.local;
  std::size_t const m = e.size();
  std::vector<element> join(m * m, no_element);
  for (element a = 0; a < m; ++a) {
    for (element b = 0; b < m; ++b) {
      for (element u = 0; u < m; ++u) {
        if (e.meet(a, u) != a || e.meet(b, u) != b) continue;
        bool least = true;
        for (element v = 0; v < m && least; ++v) {
          if (e.meet(a, v) == a && e.meet(b, v) == b) least = e.meet(u, v) == u;
        }
        if (least) {
          join[a * m + b] = u;
          break;
        }
      }
      if (join[a * m + b] == no_element) {
        out.missing_join = std::pair{idem.in_semigroup[a], idem.in_semigroup[b]};
        out.reason = "no join for (" + e.name(a) + "," + e.name(b) + ")";
        return out;
      }
    }
  }
  try {
    out.algebra = FiniteGenBoolAlg::from_tables(e.names(), e.zero(), e.meet_table(), OperationTable(m, std::move(join)));
  } catch (validation_error const& err) {
    out.reason = err.what();
  }
  return out;
}

/// A zero-preserving multiplicative map between finite inverse semigroups.
class ISHomomorphism {
 public:
  ISHomomorphism() = default;

  FiniteInverseSemigroup const& domain() const { return domain_; }
  FiniteInverseSemigroup const& codomain() const { return codomain_; }
  std::vector<element> const& images() const { return map_; }
  element operator()(element s) const {
    domain_.carrier().check(s);
    return map_[s];
  }
  ElementSet range() const {
    ElementSet out;
    for (auto v : map_) out.insert(v);
    return out;
  }

  friend ISHomomorphism validate_homomorphism(FiniteInverseSemigroup domain, FiniteInverseSemigroup codomain,
                                              std::vector<element> map);

 private:
  ISHomomorphism(FiniteInverseSemigroup d, FiniteInverseSemigroup c, std::vector<element> m)
      : domain_(std::move(d)), codomain_(std::move(c)), map_(std::move(m)) {}

  FiniteInverseSemigroup domain_;
  FiniteInverseSemigroup codomain_;
  std::vector<element> map_;
};

inline ISHomomorphism validate_homomorphism(FiniteInverseSemigroup domain, FiniteInverseSemigroup codomain,
                                            std::vector<element> map) {
  if (map.size() != domain.size()) throw validation_error("map does not cover the domain");
  for (auto v : map) codomain.carrier().check(v);
  if (map[domain.zero()] != codomain.zero()) throw validation_error("zero not preserved");
  for (element s = 0; s < domain.size(); ++s) {
    for (element t = 0; t < domain.size(); ++t) {
      if (map[domain.mul(s, t)] != codomain.mul(map[s], map[t])) {
        throw validation_error("product not preserved at (" + domain.name(s) + "," + domain.name(t) + ")");
      }
    }
  }
  for (element s = 0; s < domain.size(); ++s) {
    if (map[domain.inverse(s)] != codomain.inverse(map[s])) {
      throw internal_error("homomorphism does not preserve the inverse of " + domain.name(s));
    }
    if (domain.is_idempotent(s) && !codomain.is_idempotent(map[s])) {
      throw internal_error("homomorphism does not preserve idempotency of " + domain.name(s));
    }
  }
  return ISHomomorphism(std::move(domain), std::move(codomain), std::move(map));
}

inline ISHomomorphism validate_homomorphism(FiniteInverseSemigroup domain, FiniteInverseSemigroup codomain,
                                            std::vector<std::pair<std::string, std::string>> const& pairs) {
  std::vector<element> map(domain.size(), no_element);
  for (auto const& [s, t] : pairs) {
    element si = domain.index_of(s);
    element ti = codomain.index_of(t);
    if (map[si] != no_element) throw validation_error("element " + s + " mapped twice");
    map[si] = ti;
  }
  for (element s = 0; s < map.size(); ++s) {
    if (map[s] == no_element) throw validation_error("map missing element " + domain.name(s));
  }
  return validate_homomorphism(std::move(domain), std::move(codomain), std::move(map));
}

/// Restriction of φ to E(S), as a representation into the algebra on E(T).
inline Representation restrict_to_idempotents(ISHomomorphism const& phi) {
  auto boolean = is_generalized_boolean_inverse_semigroup(phi.codomain());
  if (!boolean) throw precondition_error("codomain is not a generalized Boolean inverse semigroup: " + boolean.reason);
  auto source = idempotent_semilattice(phi.domain());
  std::vector<element> map;
  for (auto s : source.in_semigroup) {
    element image = boolean.local[phi(s)];
    if (image == no_element) throw internal_error("idempotent " + phi.domain().name(s) + " maps to a non-idempotent");
    map.push_back(image);
  }
  try {
    return validate_representation(source.lattice, *boolean.algebra, std::move(map));
  } catch (validation_error const& err) {
    throw internal_error(std::string("restriction to idempotents is not a representation: ") + err.what());
  }
}

inline TightnessReport check_homomorphism_tightness(ISHomomorphism const& phi) {
  return check(restrict_to_idempotents(phi));
}

/// T' = {t : t*t <= e, tt* <= e} with e = ⋁π(E(S) \ {0}), and φ corestricted
/// to it.
struct SemigroupCorner {
  element unit = no_element;  // index in the original codomain
  FiniteInverseSemigroup corner;
  std::vector<element> in_codomain;  // corner index -> codomain index
  ISHomomorphism homomorphism;
  TightnessReport report;
};

inline SemigroupCorner tighten_homomorphism(ISHomomorphism const& phi) {
  auto restricted = restrict_to_idempotents(phi);
  auto ctj = is_cover_to_join(restricted);
  if (!ctj) {
    auto const& w = *ctj.failure;
    throw precondition_error("homomorphism is not cover-to-join: x = " + restricted.domain().name(w.x) +
                             ", Z = " + restricted.domain().render(w.cover));
  }
  auto boolean = is_generalized_boolean_inverse_semigroup(phi.codomain());
  auto const& t = phi.codomain();
  element unit = boolean.in_semigroup[corner_unit(restricted, restricted.domain().nonzero())];

  std::vector<element> members;
  std::vector<element> local(t.size(), no_element);
  for (element x = 0; x < t.size(); ++x) {
    element inv = t.inverse(x);
    if (t.idempotent_leq(t.mul(inv, x), unit) && t.idempotent_leq(t.mul(x, inv), unit)) {
      local[x] = members.size();
      members.push_back(x);
    }
  }
  for (element s = 0; s < phi.domain().size(); ++s) {
    element ps = phi(s);
    element inv = t.inverse(ps);
    if (!t.idempotent_leq(t.mul(inv, ps), unit) || !t.idempotent_leq(t.mul(ps, inv), unit)) {
      throw internal_error("image of " + phi.domain().name(s) + " escapes the corner");
    }
  }
  std::size_t const m = members.size();
  std::vector<std::string> names;
  std::vector<element> mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(t.name(members[i]));
    for (std::size_t j = 0; j < m; ++j) {
      element prod = local[t.mul(members[i], members[j])];
      if (prod == no_element) throw internal_error("corner is not closed under multiplication");
      mul[i * m + j] = prod;
    }
  }
  FiniteInverseSemigroup corner;
  try {
    corner = FiniteInverseSemigroup::from_table(std::move(names), local[t.zero()], OperationTable(m, std::move(mul)));
  } catch (validation_error const& err) {
    throw internal_error(std::string("corner is not an inverse semigroup: ") + err.what());
  }
  std::vector<element> map;
  for (auto v : phi.images()) map.push_back(local[v]);
  auto corestricted = validate_homomorphism(phi.domain(), corner, std::move(map));
  auto report = check_homomorphism_tightness(corestricted);
  if (!report.tight) throw internal_error("corestricted homomorphism is not tight");
  return {unit, std::move(corner), std::move(members), std::move(corestricted), std::move(report)};
}

}  // namespace tightrep
