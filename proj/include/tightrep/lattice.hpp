#pragma once

// Finite meet-semilattices with zero and finite generalized Boolean algebras,
// stored as validated operation tables over an ordered list of element names.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tightrep/element_set.hpp"
#include "tightrep/error.hpp"

namespace tightrep {

inline constexpr element no_element = std::numeric_limits<element>::max();

/// Raw table input as read from a structure file. `join` is only used for
/// algebras. Every cell names an element.
struct TableInput {
  std::vector<std::string> elements;
  std::string zero;
  std::vector<std::vector<std::string>> meet;
  std::vector<std::vector<std::string>> join;
};

/// Square table of element indices, row-major.
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(std::size_t n, std::vector<element> cells) : n_(n), cells_(std::move(cells)) {}

  std::size_t size() const { return n_; }
  element operator()(element a, element b) const { return cells_[a * n_ + b]; }
  std::vector<element> const& cells() const { return cells_; }

  friend bool operator==(OperationTable const&, OperationTable const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<element> cells_;
};

/// Ordered list of unique element names.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw validation_error("no elements");
    if (names_.size() > max_elements) {
      throw validation_error("too many elements (" + std::to_string(names_.size()) + " > " +
                             std::to_string(max_elements) + ")");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw validation_error("empty element name");
      if (!index_.emplace(names_[i], i).second) {
        throw validation_error("duplicate element '" + names_[i] + "'");
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  std::vector<std::string> const& names() const { return names_; }

  std::string const& name(element e) const {
    check(e);
    return names_[e];
  }

  element index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw unknown_element_error("unknown element '" + std::string(name) + "'");
    return it->second;
  }

  bool has(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  void check(element e) const {
    if (e >= names_.size()) throw unknown_element_error("element index " + std::to_string(e) + " out of range");
  }

  void check(ElementSet s) const {
    if (!s.subset_of(ElementSet::first(size()))) throw unknown_element_error("element set out of range");
  }

  /// "{a, b}" in declared order; "{}" for the empty set.
  std::string render(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (auto e : s) {
      if (!first) out += ", ";
      out += name(e);
      first = false;
    }
    return out + "}";
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, element> index_;
};

namespace detail {

inline OperationTable resolve_table(Carrier const& carrier, std::vector<std::vector<std::string>> const& rows,
                                    std::string_view label) {
  std::size_t const n = carrier.size();
  if (rows.size() != n) {
    throw validation_error(std::string(label) + " table: expected " + std::to_string(n) + " rows, got " +
                           std::to_string(rows.size()));
  }
  std::vector<element> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw validation_error(std::string(label) + " row " + carrier.name(i) + ": expected " + std::to_string(n) +
                             " entries, got " + std::to_string(rows[i].size()));
    }
    for (auto const& cell : rows[i]) {
      if (!carrier.has(cell)) {
        throw validation_error("unknown element '" + cell + "' in " + std::string(label) + " table");
      }
      cells.push_back(carrier.index_of(cell));
    }
  }
  return OperationTable(n, std::move(cells));
}

inline std::string pair_text(Carrier const& c, element a, element b) {
  return "(" + c.name(a) + "," + c.name(b) + ")";
}

inline std::string triple_text(Carrier const& c, element a, element b, element d) {
  return "(" + c.name(a) + "," + c.name(b) + "," + c.name(d) + ")";
}

/// Semilattice axioms on an index table; throws naming the first violation.
inline void check_semilattice_axioms(Carrier const& c, element zero, OperationTable const& meet,
                                     std::string_view op = "meet") {
  std::size_t const n = c.size();
  std::string const name(op);
  for (element a = 0; a < n; ++a) {
    if (meet(a, a) != a) throw validation_error(name + " not idempotent at " + c.name(a));
  }
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (meet(a, b) != meet(b, a)) throw validation_error(name + " not commutative at " + pair_text(c, a, b));
    }
  }
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      for (element d = 0; d < n; ++d) {
        if (meet(meet(a, b), d) != meet(a, meet(b, d))) {
          throw validation_error(name + " not associative at " + triple_text(c, a, b, d));
        }
      }
    }
  }
  for (element a = 0; a < n; ++a) {
    if (meet(zero, a) != zero) throw validation_error("zero not absorbing at " + c.name(a));
  }
}

}  // namespace detail

/// A finite meet-semilattice with an absorbing zero.
class FiniteMeetSemilattice {
 public:
  FiniteMeetSemilattice() = default;

  /// Validates an index-level table; the entry point for generated structures.
  static FiniteMeetSemilattice from_table(std::vector<std::string> names, element zero, OperationTable meet) {
    Carrier carrier(std::move(names));
    carrier.check(zero);
    if (meet.size() != carrier.size()) throw validation_error("meet table has wrong size");
    for (auto cell : meet.cells()) carrier.check(cell);
    detail::check_semilattice_axioms(carrier, zero, meet);
    return FiniteMeetSemilattice(std::make_shared<Data const>(Data{std::move(carrier), zero, std::move(meet)}));
  }

  std::size_t size() const { return data_->carrier.size(); }
  element zero() const { return data_->zero; }
  Carrier const& carrier() const { return data_->carrier; }
  std::vector<std::string> const& names() const { return data_->carrier.names(); }
  std::string const& name(element e) const { return data_->carrier.name(e); }
  element index_of(std::string_view n) const { return data_->carrier.index_of(n); }
  OperationTable const& meet_table() const { return data_->meet; }
  ElementSet all() const { return ElementSet::first(size()); }
  ElementSet nonzero() const { return all().without(zero()); }

  element meet(element a, element b) const { return data_->meet(a, b); }

  /// Meet of a nonempty set.
  element meet_of(ElementSet s) const {
    if (s.empty()) throw precondition_error("meet of the empty set is undefined in a semilattice");
    element acc = *s.begin();
    for (auto e : s) acc = meet(acc, e);
    return acc;
  }

  std::string render(ElementSet s) const { return data_->carrier.render(s); }

  friend bool operator==(FiniteMeetSemilattice const& a, FiniteMeetSemilattice const& b) {
    return a.names() == b.names() && a.zero() == b.zero() && a.meet_table() == b.meet_table();
  }

 private:
  struct Data {
    Carrier carrier;
    element zero;
    OperationTable meet;
  };

  explicit FiniteMeetSemilattice(std::shared_ptr<Data const> d) : data_(std::move(d)) {}

  std::shared_ptr<Data const> data_;
};

/// Checks the semilattice axioms exhaustively; errors name the offending
/// element, pair or triple.
inline FiniteMeetSemilattice validate_semilattice(TableInput const& input) {
  Carrier carrier(input.elements);
  if (!carrier.has(input.zero)) throw validation_error("unknown zero element '" + input.zero + "'");
  auto meet = detail::resolve_table(carrier, input.meet, "meet");
  return FiniteMeetSemilattice::from_table(input.elements, carrier.index_of(input.zero), std::move(meet));
}

/// A finite generalized Boolean algebra. Being finite it always has a unit,
/// the join of all elements, exposed as top().
class FiniteGenBoolAlg {
 public:
  FiniteGenBoolAlg() = default;

  static FiniteGenBoolAlg from_tables(std::vector<std::string> names, element zero, OperationTable meet,
                                      OperationTable join);

  std::size_t size() const { return data_->carrier.size(); }
  element zero() const { return data_->zero; }
  element top() const { return data_->top; }
  Carrier const& carrier() const { return data_->carrier; }
  std::vector<std::string> const& names() const { return data_->carrier.names(); }
  std::string const& name(element e) const { return data_->carrier.name(e); }
  element index_of(std::string_view n) const { return data_->carrier.index_of(n); }
  OperationTable const& meet_table() const { return data_->meet; }
  OperationTable const& join_table() const { return data_->join; }
  ElementSet all() const { return ElementSet::first(size()); }

  element meet(element a, element b) const { return data_->meet(a, b); }
  element join(element a, element b) const { return data_->join(a, b); }
  bool leq(element a, element b) const { return meet(a, b) == a; }

  /// b \ a for a <= b.
  element relative_complement(element a, element b) const {
    data_->carrier.check(a);
    data_->carrier.check(b);
    element x = data_->complement[a * size() + b];
    if (x == no_element) {
      throw precondition_error("relative complement needs " + name(a) + " <= " + name(b));
    }
    return x;
  }

  /// Join of a set; the empty join is zero.
  element join_of(ElementSet s) const {
    element acc = zero();
    for (auto e : s) acc = join(acc, e);
    return acc;
  }

  /// Meet of a set inside a view whose unit is `unit`; the empty meet is unit.
  element meet_of(ElementSet s, element unit) const {
    element acc = unit;
    for (auto e : s) acc = meet(acc, e);
    return acc;
  }

  /// {a : a <= e}
  ElementSet down_set(element e) const {
    ElementSet s;
    for (element a = 0; a < size(); ++a) {
      if (leq(a, e)) s.insert(a);
    }
    return s;
  }

  std::string render(ElementSet s) const { return data_->carrier.render(s); }

  friend bool operator==(FiniteGenBoolAlg const& a, FiniteGenBoolAlg const& b) {
    return a.names() == b.names() && a.zero() == b.zero() && a.meet_table() == b.meet_table() &&
           a.join_table() == b.join_table();
  }

 private:
  struct Data {
    Carrier carrier;
    element zero;
    OperationTable meet;
    OperationTable join;
    element top;
    std::vector<element> complement;  // [a * n + b] = b \ a, or no_element
  };

  explicit FiniteGenBoolAlg(std::shared_ptr<Data const> d) : data_(std::move(d)) {}

  std::shared_ptr<Data const> data_;
};

inline FiniteGenBoolAlg FiniteGenBoolAlg::from_tables(std::vector<std::string> names, element zero,
                                                      OperationTable meet, OperationTable join) {
  using detail::pair_text;
  using detail::triple_text;
  Carrier c(std::move(names));
  c.check(zero);
  std::size_t const n = c.size();
  if (meet.size() != n || join.size() != n) throw validation_error("operation table has wrong size");
  for (auto cell : meet.cells()) c.check(cell);
  for (auto cell : join.cells()) c.check(cell);

  // (i) commutativity
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (join(a, b) != join(b, a)) throw validation_error("join not commutative at " + pair_text(c, a, b));
      if (meet(a, b) != meet(b, a)) throw validation_error("meet not commutative at " + pair_text(c, a, b));
    }
  }
  // (ii) associativity of meet, (iii) distributivity of meet over join
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      for (element d = 0; d < n; ++d) {
        if (meet(meet(a, b), d) != meet(a, meet(b, d))) {
          throw validation_error("meet not associative at " + triple_text(c, a, b, d));
        }
      }
    }
  }
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      for (element d = 0; d < n; ++d) {
        if (meet(a, join(b, d)) != join(meet(a, b), meet(a, d))) {
          throw validation_error("distributivity fails at " + triple_text(c, a, b, d));
        }
      }
    }
  }
  // (iv) zero is a join identity
  for (element a = 0; a < n; ++a) {
    if (join(a, zero) != a) throw validation_error("join with zero fails at " + c.name(a));
  }
  // (v) relative complements, which must also be unique
  std::vector<element> complement(n * n, no_element);
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (meet(a, b) != a) continue;
      element found = no_element;
      for (element x = 0; x < n; ++x) {
        if (join(x, a) == b && meet(x, a) == zero) {
          if (found != no_element) {
            throw validation_error("relative complement not unique for " + c.name(a) + " <= " + c.name(b));
          }
          found = x;
        }
      }
      if (found == no_element) {
        throw validation_error("relative complement missing for " + c.name(a) + " <= " + c.name(b));
      }
      complement[a * n + b] = found;
    }
  }
  // (vi) idempotence
  for (element a = 0; a < n; ++a) {
    if (join(a, a) != a || meet(a, a) != a) throw validation_error("not idempotent at " + c.name(a));
  }

  // Derived laws: the duals of (ii) and (iii), absorption, absorbing zero.
  for (element a = 0; a < n; ++a) {
    if (meet(zero, a) != zero) throw validation_error("zero not absorbing at " + c.name(a));
    for (element b = 0; b < n; ++b) {
      if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) {
        throw validation_error("absorption fails at " + pair_text(c, a, b));
      }
      for (element d = 0; d < n; ++d) {
        if (join(join(a, b), d) != join(a, join(b, d))) {
          throw validation_error("join not associative at " + triple_text(c, a, b, d));
        }
        if (join(a, meet(b, d)) != meet(join(a, b), join(a, d))) {
          throw validation_error("join does not distribute over meet at " + triple_text(c, a, b, d));
        }
      }
    }
  }

  element top = zero;
  for (element a = 0; a < n; ++a) top = join(top, a);
  for (element a = 0; a < n; ++a) {
    if (meet(top, a) != a) throw validation_error("top is not a unit at " + c.name(a));
  }

  return FiniteGenBoolAlg(std::make_shared<Data const>(
      Data{std::move(c), zero, std::move(meet), std::move(join), top, std::move(complement)}));
}

/// Checks axioms (i)-(vi) of a generalized Boolean algebra and the derived
/// dual laws; the result carries top and the relative-complement table.
inline FiniteGenBoolAlg validate_algebra(TableInput const& input) {
  Carrier carrier(input.elements);
  if (!carrier.has(input.zero)) throw validation_error("unknown zero element '" + input.zero + "'");
  auto meet = detail::resolve_table(carrier, input.meet, "meet");
  auto join = detail::resolve_table(carrier, input.join, "join");
  return FiniteGenBoolAlg::from_tables(input.elements, carrier.index_of(input.zero), std::move(meet),
                                       std::move(join));
}

/// a <= b iff a ∧ b = a. Works on any structure with a checked meet.
template <typename Structure>
bool leq(Structure const& s, element a, element b) {
  s.carrier().check(a);
  s.carrier().check(b);
  return s.meet(a, b) == a;
}

template <typename Structure>
bool leq(Structure const& s, std::string_view a, std::string_view b) {
  return leq(s, s.index_of(a), s.index_of(b));
}

inline element relative_complement(FiniteGenBoolAlg const& alg, element a, element b) {
  return alg.relative_complement(a, b);
}

/// Outcome of an ideal test. On failure `witness` holds either a pair (a, b)
/// with a <= b, b a member and a missing, or a pair of members whose join is
/// missing.
struct IdealCheck {
  enum class Failure { none, empty, not_downward_closed, not_join_closed };

  Failure failure = Failure::none;
  std::pair<element, element> witness{no_element, no_element};

  explicit operator bool() const { return failure == Failure::none; }
};

inline IdealCheck is_ideal(FiniteGenBoolAlg const& alg, ElementSet members) {
  alg.carrier().check(members);
  if (members.empty()) return {IdealCheck::Failure::empty, {}};
  for (auto b : members) {
    for (element a = 0; a < alg.size(); ++a) {
      if (alg.leq(a, b) && !members.contains(a)) return {IdealCheck::Failure::not_downward_closed, {a, b}};
    }
  }
  for (auto a : members) {
    for (auto b : members) {
      if (!members.contains(alg.join(a, b))) return {IdealCheck::Failure::not_join_closed, {a, b}};
    }
  }
  return {};
}

/// An ideal of a finite generalized Boolean algebra, sharing the parent's
/// tables. Its unit is the join of its members.
class IdealView {
 public:
  IdealView() = default;

  static IdealView full(FiniteGenBoolAlg parent) {
    auto members = parent.all();
    auto top = parent.top();
    return IdealView(std::move(parent), members, top);
  }

  static IdealView of(FiniteGenBoolAlg parent, ElementSet members) {
    auto check = is_ideal(parent, members);
    if (!check) throw precondition_error("member set is not an ideal");
    auto top = parent.join_of(members);
    return IdealView(std::move(parent), members, top);
  }

  FiniteGenBoolAlg const& parent() const { return parent_; }
  ElementSet members() const { return members_; }
  element top() const { return top_; }
  bool contains(element e) const { return members_.contains(e); }
  bool is_full() const { return members_ == parent_.all(); }
  std::size_t size() const { return members_.size(); }

  /// top \ a, the complement inside this view.
  element negate(element a) const {
    if (!contains(a)) throw precondition_error("element " + parent_.name(a) + " is outside the view");
    return parent_.relative_complement(a, top_);
  }

  /// The view as a standalone algebra over its members, in parent order.
  FiniteGenBoolAlg materialize() const {
    auto const members = members_.to_vector();
    std::vector<element> local(parent_.size(), no_element);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[members[i]] = i;
      names.push_back(parent_.name(members[i]));
    }
    std::size_t const m = members.size();
    std::vector<element> meet(m * m), join(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        meet[i * m + j] = local[parent_.meet(members[i], members[j])];
        join[i * m + j] = local[parent_.join(members[i], members[j])];
      }
    }
    return FiniteGenBoolAlg::from_tables(std::move(names), local[parent_.zero()], OperationTable(m, std::move(meet)),
                                         OperationTable(m, std::move(join)));
  }

  friend bool operator==(IdealView const& a, IdealView const& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  IdealView(FiniteGenBoolAlg parent, ElementSet members, element top)
      : parent_(std::move(parent)), members_(members), top_(top) {}

  FiniteGenBoolAlg parent_;
  ElementSet members_;
  element top_ = 0;
};

/// The smallest ideal containing S. In a finite algebra this is the down-set
/// of the join of S.
inline IdealView ideal_generated_by(FiniteGenBoolAlg const& alg, ElementSet generators) {
  alg.carrier().check(generators);
  if (generators.empty()) throw precondition_error("generating set is empty");
  return IdealView::of(alg, alg.down_set(alg.join_of(generators)));
}

/// {a : a <= e}
inline IdealView principal_ideal(FiniteGenBoolAlg const& alg, element e) {
  alg.carrier().check(e);
  return IdealView::of(alg, alg.down_set(e));
}

}  // namespace tightrep
