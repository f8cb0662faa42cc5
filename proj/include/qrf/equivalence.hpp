#pragma once

#include <string>
#include <vector>

#include "qrf/frame.hpp"
#include "qrf/operator.hpp"
#include "qrf/representation.hpp"

namespace qrf {

/// A set of observables together with the orthonormalized span that decides
/// operational equivalence: T ~ T' iff tr[T A] = tr[T' A] on the span.
/// Equivalence against the generators, their span, and their convex hull all
/// coincide, so only the span is kept.
struct ObservableSet {
  std::string label;
  std::vector<Operator> generators;
  OperatorSpaceBasis span;
  /// Dimension of the quotient of trace class by the pre-annihilator; in
  /// finite dimension this equals the span dimension (the quotient is the
  /// dual of the span), so classes are fully described by their signatures.
  int quotient_dim() const { return span.size(); }
};

ObservableSet build_observable_set(std::string label,
                                   std::vector<Operator> generators);

/// Canonical coordinates of an equivalence class: coords[i] = tr[t b_i^dag]
/// against the orthonormal span basis. Linear in t; two operators are
/// equivalent exactly when their signatures agree coordinatewise.
struct ClassSignature {
  std::string relation;
  Vector coords;
  int span_dim() const { return static_cast<int>(coords.size()); }
};

ClassSignature signature(const Operator& t, const ObservableSet& o);

/// Max coordinate deviation; throws GroupMismatch when the signatures were
/// taken against different relations.
double signature_distance(const ClassSignature& a, const ClassSignature& b);

struct EquivalenceResult {
  bool equivalent;
  double residual;
};

EquivalenceResult equivalent(const Operator& t1, const Operator& t2,
                             const ObservableSet& o,
                             double tol = tol::signature);

/// Idempotent HS-orthogonal projection onto span{adjoint(basis)}; the
/// projected operator stays in the class of the input.
Operator quotient_project(const ObservableSet& o, const Operator& t);

/// The invariant-algebra relation of a representation (label "G").
ObservableSet invariant_set(const UnitaryRep& rep);

/// Framed relation span{ E({x}) (x) F } on H_E (x) C^{system_dim}
/// (label "framed(E)").
ObservableSet framed_set(const FinitePOVM& povm, int system_dim);

/// Doubly framed relation span{ E1({x}) (x) E2({y}) (x) F_S } (label
/// "framed(E1,E2)").
ObservableSet double_framed_set(const FinitePOVM& povm1,
                                const FinitePOVM& povm2, int system_dim);

/// All matrix units of dimension d: the full relation, equivalence becomes
/// equality.
std::vector<Operator> matrix_units(int d);

}  // namespace qrf
