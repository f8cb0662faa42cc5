#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrf/group.hpp"
#include "qrf/operator.hpp"
#include "qrf/representation.hpp"

namespace qrf {

/// POVM over a finite G-space: one effect per point, summing to the
/// identity. Construction validates both.
class FinitePOVM {
 public:
  FinitePOVM(GSpace space, std::vector<Effect> effects);

  const GSpace& space() const { return space_; }
  const std::vector<Effect>& effects() const { return effects_; }
  int dim() const { return effects_[0].dim(); }
  int outcomes() const { return static_cast<int>(effects_.size()); }

  /// E(X) for a subset of points by additivity.
  Operator effect_union(const std::vector<int>& X) const;

 private:
  GSpace space_;
  std::vector<Effect> effects_;
};

/// Born probabilities tr[omega E({x})] per point.
std::vector<double> born_measure(const FinitePOVM& povm,
                                 const DensityState& omega);

struct CovarianceCertificate {
  bool pass;
  double max_residual;
  int worst_g;
  int worst_x;
};

struct Norm1Report {
  bool localizable;
  int worst_point;
  double worst_norm;
};

struct CompletenessReport {
  bool complete;
  std::vector<int> isotropy;
};

struct FrameFlags {
  bool sharp;
  bool principal;
  bool localizable;
  bool complete;
};

/// Max over (g, point) of ||E(g.{x}) - U(g) E({x}) U(g)^dag||_op; pass below
/// 1e-9. Works for arbitrary (rep, povm) pairs, valid frames included.
CovarianceCertificate verify_covariance(const UnitaryRep& rep,
                                        const FinitePOVM& povm);

/// Norm-1 property checked on singletons; by additivity and positivity of
/// effects this settles every subset.
Norm1Report check_norm1(const FinitePOVM& povm);

/// Isotropy subgroup { g : g.E({x}) = E({x}) for all x }; complete iff
/// trivial.
CompletenessReport check_complete(const UnitaryRep& rep,
                                  const FinitePOVM& povm);

/// A quantum reference frame: a system of covariance (rep, POVM) on a
/// finite G-space with classification flags. Construction certifies
/// covariance and computes the classification.
class QuantumFrame {
 public:
  QuantumFrame(UnitaryRep rep, FinitePOVM povm,
               std::optional<Vector> coherent_seed = std::nullopt);

  const UnitaryRep& rep() const { return rep_; }
  const FinitePOVM& povm() const { return povm_; }
  const FrameFlags& flags() const { return flags_; }
  const CovarianceCertificate& covariance() const { return covariance_; }
  const Norm1Report& norm1() const { return norm1_; }
  const CompletenessReport& completeness() const { return completeness_; }
  bool ideal() const { return flags_.sharp && flags_.principal; }
  int dim() const { return rep_.dim(); }
  const std::optional<Vector>& coherent_seed() const { return seed_; }

  /// A state perfectly localized at the identity outcome; requires a sharp
  /// frame.
  DensityState identity_localized_state() const;

 private:
  UnitaryRep rep_;
  FinitePOVM povm_;
  FrameFlags flags_;
  CovarianceCertificate covariance_;
  Norm1Report norm1_;
  CompletenessReport completeness_;
  std::optional<Vector> seed_;
};

CovarianceCertificate verify_covariance(const QuantumFrame& frame);
CompletenessReport check_complete(const QuantumFrame& frame);

enum class FrameConvention {
  left_regular,  // U(g)|h> = |gh>,       P({x}) = |x><x|
  inverse        // U(g)|h> = |h g^{-1}>, P({x}) = |x^{-1}><x^{-1}|
};

/// The ideal frame of a finite group: principal, sharp, localizable and
/// complete, in either action convention.
QuantumFrame canonical_frame(const FiniteGroup& g,
                             FrameConvention convention =
                                 FrameConvention::left_regular);

/// Coherent-state frame from a unit seed vector: effects proportional to the
/// orbit projections, normalization fixed by the orbit-sum proportionality
/// (1/|G|) sum_g |eta_g><eta_g| = lambda * I certified numerically.
QuantumFrame coherent_frame(const UnitaryRep& rep, const Vector& eta);

/// Multiplication-by-indicator projections with the induced permutation
/// representation.
QuantumFrame classical_soi_frame(const GSpace& space);

}  // namespace qrf
