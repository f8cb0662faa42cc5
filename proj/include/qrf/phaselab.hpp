#pragma once

#include <string>
#include <vector>

#include "qrf/operator.hpp"

namespace qrf {

/// Truncated covariant phase observable on the d-dimensional number basis,
/// discretized over M circle cells (a, b] of width 2*pi/M. Cell effects are
/// closed-form integrals of e^{i theta (n-m)}; covariance under grid shifts
/// e^{i N theta_k} is exact up to rounding.
struct TruncatedPhasePOVM {
  int d = 0;
  int cells = 0;
  Matrix coefficients;            // d x d, PSD, unit diagonal
  std::vector<Operator> effects;  // one per cell

  double cell_width() const;
  double midpoint(int cell) const;
  /// Normalized measure of a cell union.
  double measure(const std::vector<int>& cell_union) const;
  Operator effect_union(const std::vector<int>& cell_union) const;
  /// The shift unitary e^{i N theta} for an arbitrary angle.
  Operator number_shift(double theta) const;
  /// Index of the cell containing an angle under the (a, b] convention.
  int cell_of(double angle) const;
  /// Cells whose midpoints lie within the closed angular ball of the given
  /// radius around the center.
  std::vector<int> ball_cells(double center, double radius) const;
};

/// Throws InvalidCoefficients unless c is PSD with unit diagonal.
TruncatedPhasePOVM build_phase_povm(int d, int M, const Matrix& c);
/// Canonical phase: all-ones coefficients.
TruncatedPhasePOVM build_phase_povm(int d, int M);

/// Max over grid shifts and cells of the covariance residual
/// ||U_j E_k U_j^dag - E_{k+j}||.
double grid_covariance_residual(const TruncatedPhasePOVM& povm);

struct Localizer {
  Vector state;
  double probability;  // largest eigenvalue of E(X)
};

/// Best localization probability on a cell union: the top eigenpair of E(X).
Localizer best_localizer(const TruncatedPhasePOVM& povm,
                         const std::vector<int>& cell_union);

struct PhaseTestSet {
  std::string id;
  std::vector<int> cells;
};

struct LocalizationPoint {
  int d;
  int n;  // localizer index; the ball radius is pi/n
  std::string set_id;
  double probability;
  double deviation;
};

struct LocalizationCurve {
  std::vector<LocalizationPoint> points;
};

/// Localize with the ball schedule radius pi/d and record the Born mass of
/// each test set against the Dirac measure at the center.
LocalizationCurve dirac_convergence_experiment(
    const std::vector<int>& d_sweep, int M, double center,
    const std::vector<PhaseTestSet>& sets);

struct ConditionedIdentityPoint {
  int d;
  double residual;
};

/// Residual ||sum_k mu(cell k) theta_k.A - A||_op for localizers centered at
/// angle zero, swept over truncation dimensions; the system carries the
/// discretized circle action diag(e^{i theta s}).
std::vector<ConditionedIdentityPoint> conditioned_identity_convergence(
    int system_dim, const std::vector<int>& d_sweep, int M, const Operator& a);

/// The grid twirl (1/M) sum_k theta_k.A on the same system action.
Operator grid_twirl(int system_dim, int M, const Operator& a);

/// System shift unitary diag(e^{i theta s}), s = 0..system_dim-1.
Operator system_shift(int system_dim, double theta);

}  // namespace qrf
