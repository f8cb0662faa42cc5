#include "qrf/phaselab.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace qrf {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

double angular_distance(double a, double b) {
  double diff = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(diff, kTwoPi - diff);
}
}  // namespace

double TruncatedPhasePOVM::cell_width() const { return kTwoPi / cells; }

double TruncatedPhasePOVM::midpoint(int cell) const {
  return (cell + 0.5) * cell_width();
}

double TruncatedPhasePOVM::measure(const std::vector<int>& cell_union) const {
  return static_cast<double>(cell_union.size()) / cells;
}

Operator TruncatedPhasePOVM::effect_union(
    const std::vector<int>& cell_union) const {
  Matrix sum = Matrix::Zero(d, d);
  for (int k : cell_union) {
    if (k < 0 || k >= cells)
      throw UnknownPoint("phase cell " + std::to_string(k));
    sum += effects[k].mat();
  }
  return Operator(std::move(sum));
}

Operator TruncatedPhasePOVM::number_shift(double theta) const {
  Matrix u = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) u(n, n) = std::polar(1.0, n * theta);
  return Operator(std::move(u));
}

int TruncatedPhasePOVM::cell_of(double angle) const {
  double a = std::fmod(angle, kTwoPi);
  if (a <= 0) a += kTwoPi;  // (0, 2*pi]
  const int k = static_cast<int>(std::ceil(a / cell_width())) - 1;
  return std::min(std::max(k, 0), cells - 1);
}

std::vector<int> TruncatedPhasePOVM::ball_cells(double center,
                                                double radius) const {
  std::vector<int> out;
  for (int k = 0; k < cells; ++k)
    if (angular_distance(midpoint(k), center) <= radius + 1e-12)
      out.push_back(k);
  return out;
}

TruncatedPhasePOVM build_phase_povm(int d, int M, const Matrix& c) {
  if (d < 1) throw InvalidCoefficients("truncation dimension must be >= 1");
  if (M < 2) throw InvalidCoefficients("need at least two cells");
  if (c.rows() != d || c.cols() != d)
    throw InvalidCoefficients("coefficient matrix must be d x d");
  if ((c - c.adjoint()).cwiseAbs().maxCoeff() > tol::abs_check * d)
    throw InvalidCoefficients("coefficient matrix not hermitian");
  for (int n = 0; n < d; ++n)
    if (std::abs(c(n, n) - Complex(1, 0)) > tol::abs_check)
      throw InvalidCoefficients("coefficient diagonal must be 1");
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(c, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw InvalidCoefficients("coefficient matrix not PSD");
  }

  TruncatedPhasePOVM povm;
  povm.d = d;
  povm.cells = M;
  povm.coefficients = c;
  const double w = kTwoPi / M;
  for (int k = 0; k < M; ++k) {
    const double lo = k * w, hi = (k + 1) * w;
    Matrix e(d, d);
    for (int n = 0; n < d; ++n)
      for (int m = 0; m < d; ++m) {
        const int b = n - m;
        Complex integral;
        if (b == 0) {
          integral = Complex(1.0 / M, 0.0);
        } else {
          // (e^{i b hi} - e^{i b lo}) / (2 pi i b)
          integral = (std::polar(1.0, b * hi) - std::polar(1.0, b * lo)) /
                     Complex(0.0, kTwoPi * b);
        }
        e(n, m) = c(n, m) * integral;
      }
    povm.effects.emplace_back(std::move(e));
  }

  Matrix total = Matrix::Zero(d, d);
  for (const auto& e : povm.effects) {
    const double floor = hermitian_spectrum(e).minCoeff();
    if (floor < -1e-9) throw InvariantViolation("phase_effect_positive", -floor);
    total += e.mat();
  }
  const double r = (total - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (r > 1e-8) throw InvariantViolation("phase_povm_normalization", r);
  return povm;
}

TruncatedPhasePOVM build_phase_povm(int d, int M) {
  return build_phase_povm(d, M, Matrix::Ones(d, d));
}

double grid_covariance_residual(const TruncatedPhasePOVM& povm) {
  double worst = 0.0;
  for (int j = 0; j < povm.cells; ++j) {
    const Operator u = povm.number_shift(j * povm.cell_width());
    for (int k = 0; k < povm.cells; ++k) {
      const Matrix moved = u.mat() * povm.effects[k].mat() * u.mat().adjoint();
      const int target = (k + j) % povm.cells;
      worst = std::max(
          worst, (moved - povm.effects[target].mat()).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

Localizer best_localizer(const TruncatedPhasePOVM& povm,
                         const std::vector<int>& cell_union) {
  if (cell_union.empty()) throw EmptySet("localizer needs a nonempty set");
  const Operator e = povm.effect_union(cell_union);
  Eigen::SelfAdjointEigenSolver<Matrix> es(e.mat());
  const int top = povm.d - 1;
  return Localizer{es.eigenvectors().col(top), es.eigenvalues()(top)};
}

LocalizationCurve dirac_convergence_experiment(
    const std::vector<int>& d_sweep, int M, double center,
    const std::vector<PhaseTestSet>& sets) {
  LocalizationCurve curve;
  for (int d : d_sweep) {
    const TruncatedPhasePOVM povm = build_phase_povm(d, M);
    const auto ball = povm.ball_cells(center, M_PI / d);
    if (ball.empty())
      throw EmptySet("ball radius below the grid resolution");
    const Localizer loc = best_localizer(povm, ball);
    const int center_cell = povm.cell_of(center);
    for (const auto& set : sets) {
      const bool contains =
          std::find(set.cells.begin(), set.cells.end(), center_cell) !=
          set.cells.end();
      const double prob =
          (loc.state.adjoint() * povm.effect_union(set.cells).mat() *
           loc.state)(0)
              .real();
      curve.points.push_back(LocalizationPoint{
          d, d, set.id, prob, std::abs(prob - (contains ? 1.0 : 0.0))});
    }
  }
  return curve;
}

Operator system_shift(int system_dim, double theta) {
  Matrix u = Matrix::Zero(system_dim, system_dim);
  for (int s = 0; s < system_dim; ++s) u(s, s) = std::polar(1.0, s * theta);
  return Operator(std::move(u));
}

Operator grid_twirl(int system_dim, int M, const Operator& a) {
  if (a.dim() != system_dim)
    throw DimensionMismatch("grid twirl: operator vs system dimension");
  Matrix acc = Matrix::Zero(system_dim, system_dim);
  for (int k = 0; k < M; ++k) {
    const Matrix u = system_shift(system_dim, (k + 0.5) * kTwoPi / M).mat();
    acc += u * a.mat() * u.adjoint();
  }
  return Operator(Matrix(acc / M));
}

std::vector<ConditionedIdentityPoint> conditioned_identity_convergence(
    int system_dim, const std::vector<int>& d_sweep, int M,
    const Operator& a) {
  if (a.dim() != system_dim)
    throw DimensionMismatch("conditioned identity: operator vs system");
  std::vector<ConditionedIdentityPoint> curve;
  for (int d : d_sweep) {
    const TruncatedPhasePOVM povm = build_phase_povm(d, M);
    const auto ball = povm.ball_cells(0.0, M_PI / d);
    if (ball.empty())
      throw EmptySet("ball radius below the grid resolution");
    const Localizer loc = best_localizer(povm, ball);
    Matrix weighted = Matrix::Zero(system_dim, system_dim);
    for (int k = 0; k < povm.cells; ++k) {
      const double mu =
          (loc.state.adjoint() * povm.effects[k].mat() * loc.state)(0).real();
      const Matrix u = system_shift(system_dim, povm.midpoint(k)).mat();
      weighted += mu * u * a.mat() * u.adjoint();
    }
    curve.push_back(
        ConditionedIdentityPoint{d, op_norm(Operator(weighted) - a)});
  }
  return curve;
}

}  // namespace qrf
