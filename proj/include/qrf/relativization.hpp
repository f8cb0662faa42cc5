#pragma once

#include "qrf/equivalence.hpp"
#include "qrf/frame.hpp"
#include "qrf/operator.hpp"
#include "qrf/representation.hpp"

namespace qrf {

/// A principal frame paired with a system representation of the same group;
/// the composite carries the diagonal action on H_R (x) H_S.
class RelativePair {
 public:
  RelativePair(QuantumFrame frame, UnitaryRep system);

  const QuantumFrame& frame() const { return frame_; }
  const UnitaryRep& system() const { return system_; }
  int frame_dim() const { return frame_.dim(); }
  int system_dim() const { return system_.dim(); }
  int joint_dim() const { return frame_dim() * system_dim(); }
  const UnitaryRep& joint_rep() const { return joint_; }

 private:
  QuantumFrame frame_;
  UnitaryRep system_;
  UnitaryRep joint_;
};

/// yen(A) = sum_g E({g}) (x) g.A: unital, invariant under the diagonal
/// action, effect-preserving.
Operator relativize(const RelativePair& pair, const Operator& a);

/// Predual of relativize: tr[yen_*(Omega) A] = tr[Omega yen(A)] for every
/// system operator A. Factors through G-equivalence of the joint state.
DensityState predual_relativize(const RelativePair& pair,
                                const DensityState& omega_joint);
Operator predual_relativize_op(const RelativePair& pair,
                               const Operator& omega_joint);

/// Restriction Gamma_omega: the linear extension of
/// A_R (x) A_S -> tr[omega A_R] A_S.
Operator frame_restrict(const DensityState& omega, const Operator& a_joint);

/// Gamma_omega(yen(A)) = sum_g mu_omega(g) g.A: a Born-weighted average of
/// reoriented copies of A.
Operator conditioned_relativize(const RelativePair& pair,
                                const DensityState& omega, const Operator& a);

/// Observable of relative orientation E2*E1 = yen^{R1} of E2: a POVM over G
/// on H_1 (x) H_2, invariant under the diagonal action, satisfying
/// E2*E1(X) = SWAP of E1*E2(X^{-1}).
FinitePOVM relative_orientation(const QuantumFrame& frame1,
                                const QuantumFrame& frame2);

/// The omega-product relative state rho^(omega) = sum_g mu_omega(g) g.rho
/// (state-side reorientation); agrees with predual_relativize on
/// omega (x) rho.
DensityState product_relative_state(const RelativePair& pair,
                                    const DensityState& omega,
                                    const DensityState& rho);

/// Relation spanned by the relativized matrix units (label "relative(...)").
ObservableSet relative_set(const RelativePair& pair);

/// Relation spanned by the conditioned relativized matrix units
/// (label "conditioned(...)").
ObservableSet conditioned_set(const RelativePair& pair,
                              const DensityState& omega);

/// SWAP of tensor factors as an operator map on H_a (x) H_b.
Operator swap_factors(const Operator& x, int dim_a, int dim_b);

}  // namespace qrf
