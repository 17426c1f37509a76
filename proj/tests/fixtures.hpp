#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tightrep/tightrep.hpp"

namespace tightrep::testing {

/// Builds a meet table from an explicit list of nontrivial meets; x ∧ x = x,
/// x ∧ 0 = 0 and everything unlisted defaults to zero.
inline TableInput meet_input(std::vector<std::string> elements,
                             std::map<std::pair<std::string, std::string>, std::string> const& meets) {
  TableInput in;
  in.elements = elements;
  in.zero = elements.front();
  for (auto const& a : elements) {
    std::vector<std::string> row;
    for (auto const& b : elements) {
      if (a == b) {
        row.push_back(a);
      } else if (auto it = meets.find({a, b}); it != meets.end()) {
        row.push_back(it->second);
      } else if (auto jt = meets.find({b, a}); jt != meets.end()) {
        row.push_back(jt->second);
      } else {
        row.push_back(in.zero);
      }
    }
    in.meet.push_back(row);
  }
  return in;
}

inline FiniteMeetSemilattice chain2() { return validate_semilattice(meet_input({"0", "1"}, {})); }

inline FiniteMeetSemilattice v_semilattice() { return validate_semilattice(meet_input({"0", "a", "b"}, {})); }

inline FiniteMeetSemilattice diamond() {
  return validate_semilattice(meet_input({"0", "a", "b", "1"}, {{{"a", "1"}, "a"}, {{"b", "1"}, "b"}}));
}

inline FiniteMeetSemilattice zero_semilattice() { return validate_semilattice(meet_input({"0"}, {})); }

/// Meet reduct of an algebra.
inline FiniteMeetSemilattice reduct(FiniteGenBoolAlg const& b) {
  return FiniteMeetSemilattice::from_table(b.names(), b.zero(), b.meet_table());
}

inline Representation rep_of(FiniteMeetSemilattice const& e, FiniteGenBoolAlg const& b,
                             std::vector<std::pair<std::string, std::string>> const& pairs) {
  return validate_representation(e, IdealView::full(b), pairs);
}

inline ElementSet set_of(FiniteMeetSemilattice const& e, std::vector<std::string> const& names) {
  ElementSet s;
  for (auto const& n : names) s.insert(e.index_of(n));
  return s;
}

inline ElementSet set_of(FiniteGenBoolAlg const& b, std::vector<std::string> const& names) {
  ElementSet s;
  for (auto const& n : names) s.insert(b.index_of(n));
  return s;
}

/// The symmetric inverse monoid on two points, composition left to right.
inline FiniteInverseSemigroup i2() {
  SemigroupInput in;
  in.elements = {"0", "e1", "e2", "x12", "x21", "id", "t"};
  in.zero = "0";
  in.mul = {{"0", "0", "0", "0", "0", "0", "0"},       {"0", "e1", "0", "x12", "0", "e1", "x12"},
            {"0", "0", "e2", "0", "x21", "e2", "x21"}, {"0", "0", "x12", "0", "e1", "x12", "e1"},
            {"0", "x21", "0", "e2", "0", "x21", "e2"}, {"0", "e1", "e2", "x12", "x21", "id", "t"},
            {"0", "x21", "x12", "e2", "e1", "t", "id"}};
  return validate_inverse_semigroup(in);
}

/// The two-element group {1, g} with a zero adjoined.
inline FiniteInverseSemigroup group_with_zero() {
  SemigroupInput in;
  in.elements = {"0", "1", "g"};
  in.zero = "0";
  in.mul = {{"0", "0", "0"}, {"0", "1", "g"}, {"0", "g", "1"}};
  return validate_inverse_semigroup(in);
}

/// The five-element Brandt semigroup B2 (2x2 matrix units and zero).
inline FiniteInverseSemigroup brandt2() {
  SemigroupInput in;
  in.elements = {"0", "e11", "e12", "e21", "e22"};
  in.zero = "0";
  in.mul = {{"0", "0", "0", "0", "0"},
            {"0", "e11", "e12", "0", "0"},
            {"0", "0", "0", "e11", "e12"},
            {"0", "e21", "e22", "0", "0"},
            {"0", "0", "0", "e21", "e22"}};
  return validate_inverse_semigroup(in);
}

}  // namespace tightrep::testing
