#pragma once

#include <optional>
#include <vector>

#include "qrf/equivalence.hpp"
#include "qrf/frame.hpp"
#include "qrf/relativization.hpp"

namespace qrf {

/// Two (optionally three) frames and a system sharing one group, carrying
/// the diagonal action on the ordered tensor product
/// H_1 (x) H_2 [(x) H_3] (x) H_S.
class FrameChangeScenario {
 public:
  FrameChangeScenario(QuantumFrame frame1, QuantumFrame frame2,
                      UnitaryRep system,
                      std::optional<QuantumFrame> frame3 = std::nullopt);

  const QuantumFrame& frame(int index) const;  // 1-based
  int frames() const { return frame3_ ? 3 : 2; }
  const UnitaryRep& system() const { return system_; }
  const FiniteGroup& group() const { return system_.group(); }

  TensorLayout total_layout() const;
  int total_dim() const { return total_layout().total(); }
  /// Layout of the complement of one frame (the space its relative states
  /// live on).
  TensorLayout rest_layout(int frame_index) const;
  int rest_dim(int frame_index) const { return rest_layout(frame_index).total(); }

 private:
  QuantumFrame frame1_;
  QuantumFrame frame2_;
  std::optional<QuantumFrame> frame3_;
  UnitaryRep system_;
};

/// Attach the identity-localized state of the chosen frame to a state of the
/// complement, producing a total state. Exact path: requires that frame to
/// be sharp.
DensityState scenario_lift(const FrameChangeScenario& scenario,
                           int frame_index, const DensityState& rest_state);

/// Predual relativization with respect to the chosen frame inside the
/// scenario: strips that factor and reorients the complement.
DensityState scenario_predual(const FrameChangeScenario& scenario,
                              int frame_index, const DensityState& total);

/// One localized frame transformation leg: lift at `from`, predual at `to`.
DensityState frame_change_leg(const FrameChangeScenario& scenario, int from,
                              int to, const DensityState& input);

/// The framing relation of frame `index` on the complement of frame `other`:
/// span{ E_index({x}) (x) F_rest }.
ObservableSet scenario_framed_set(const FrameChangeScenario& scenario,
                                  int index, int other);

struct FrameChangeResult {
  DensityState output;
  DensityState representative;
  ClassSignature signature;
  bool representative_projected;
};

/// The localized frame transformation 1 -> 2 on an R1-relative
/// representative, reported as the E1-framed class signature together with a
/// canonical representative.
FrameChangeResult frame_change(const FrameChangeScenario& scenario,
                               const DensityState& input);

struct BatchReport {
  int batch;
  double max_residual;
  bool pass;
};

/// Round trip 2 -> 1 after 1 -> 2: E2-framed signatures must return to the
/// input's.
BatchReport frame_change_inverse_check(const FrameChangeScenario& scenario,
                                       const std::vector<DensityState>& inputs,
                                       double tol = 1e-9);

/// Composition through a third frame: the 1 -> 3 leg against 2 -> 3 after
/// 1 -> 2, compared under the doubly framed relation.
BatchReport frame_change_compose_check(const FrameChangeScenario& scenario,
                                       const std::vector<DensityState>& inputs,
                                       double tol = 1e-9);

/// The frame-change unitary of the inverse-convention ideal setting,
/// sum_g |g^{-1}><g| (x) U_S(g), as a matrix from H_2 (x) H_S to
/// H_1 (x) H_S.
Operator unitary_frame_change_matrix(const FrameChangeScenario& scenario);

/// Conjugation of the input by the frame-change unitary; operationally
/// equivalent to frame_change on E1-framed signatures.
DensityState unitary_frame_change(const FrameChangeScenario& scenario,
                                  const DensityState& input);

/// The relational Schroedinger-picture frame change built from coherent
/// systems with orthonormal orbits; unitary, and operationally equivalent to
/// frame_change for a sharp first frame.
Operator pn_unitary(const FrameChangeScenario& scenario);
DensityState pn_frame_change(const FrameChangeScenario& scenario,
                             const DensityState& input);

/// Lift on a single pair: omega (x) relative_state with its signature under
/// the invariant algebra of the joint representation.
struct LiftResult {
  DensityState lifted;
  ClassSignature g_signature;
};
LiftResult lift(const RelativePair& pair, const DensityState& omega,
                const DensityState& relative_state);

Operator partial_transpose(const Operator& x, int dim_first, int dim_second);

/// Sum of the negative eigenvalues (absolute value) of the partial
/// transpose; an entanglement witness decisive at desk scales.
double negativity(const Operator& state, int dim_first, int dim_second);

}  // namespace qrf
