#pragma once

#include <string>
#include <vector>

#include "qrf/group.hpp"
#include "qrf/operator.hpp"

namespace qrf {

/// Verified unitary representation of a finite group: one unitary per
/// element, matrices[g] matrices[h] = matrices[gh], matrices[e] = identity.
class UnitaryRep {
 public:
  static UnitaryRep verified(FiniteGroup group, std::vector<Operator> matrices,
                             std::string name = "");

  const FiniteGroup& group() const { return group_; }
  int dim() const { return matrices_[0].dim(); }
  const Operator& matrix(int g) const { return matrices_[g]; }
  const std::string& name() const { return name_; }

 private:
  UnitaryRep(FiniteGroup group, std::vector<Operator> matrices,
             std::string name)
      : group_(std::move(group)),
        matrices_(std::move(matrices)),
        name_(std::move(name)) {}

  FiniteGroup group_;
  std::vector<Operator> matrices_;
  std::string name_;
};

/// Left regular representation: U(g)|h> = |gh>.
UnitaryRep regular_rep(const FiniteGroup& g);

/// Right-translation-by-inverse convention: U(g)|h> = |h g^{-1}>.
UnitaryRep inverse_convention_rep(const FiniteGroup& g);

/// Permutation representation of a G-space: U(g)|x> = |g.x>.
UnitaryRep permutation_rep(const GSpace& space);

UnitaryRep trivial_rep(const FiniteGroup& g, int dim = 1);

/// Diagonal action on a composite: matrices are Kronecker products.
UnitaryRep tensor_rep(const UnitaryRep& a, const UnitaryRep& b);

/// Compression V^dag U(g) V onto an invariant subspace given by an isometry
/// V (columns orthonormal). Throws InvariantViolation when the range of V is
/// not invariant.
UnitaryRep restrict_rep(const UnitaryRep& rep, const Matrix& isometry);

enum class Action { observable, state };

/// g.A = U(g) A U(g)^dag for observables, g.T = U(g)^dag T U(g) for states,
/// keeping tr[(g.T) A] = tr[T (g.A)] exact.
Operator conjugate(const UnitaryRep& rep, int g, const Operator& a,
                   Action direction);

/// HS-orthonormal list of operators spanning a subspace of B(H).
struct OperatorSpaceBasis {
  int dim = 0;  // ambient operator dimension
  std::vector<Operator> ops;
  std::string source;
  int size() const { return static_cast<int>(ops.size()); }
};

/// Modified Gram-Schmidt under the HS inner product; vectors with residual
/// norm below drop_tol are dropped.
OperatorSpaceBasis orthonormalize(const std::vector<Operator>& generators,
                                  std::string source,
                                  double drop_tol = tol::span_drop);

/// HS-orthogonal projection onto the span of the basis.
Operator project_onto(const OperatorSpaceBasis& basis, const Operator& t);

/// Basis of {A : U(g) A = A U(g) for all g}, computed as the nullspace of
/// the stacked commutator map.
OperatorSpaceBasis invariant_commutant(const UnitaryRep& rep);

/// Uniform average of conjugates; projects onto the invariant algebra.
Operator twirl(const UnitaryRep& rep, const Operator& x, Action direction);

}  // namespace qrf
