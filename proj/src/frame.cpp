#include "qrf/frame.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace qrf {

FinitePOVM::FinitePOVM(GSpace space, std::vector<Effect> effects)
    : space_(std::move(space)), effects_(std::move(effects)) {
  if (static_cast<int>(effects_.size()) != space_.points())
    throw InvariantViolation("povm_outcome_count", effects_.size());
  const int d = effects_[0].dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& e : effects_) {
    if (e.dim() != d) throw DimensionMismatch("povm effects of unequal dims");
    sum += e.op().mat();
  }
  const double r = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (r > tol::abs_check * d)
    throw InvariantViolation("povm_normalization", r);
}

Operator FinitePOVM::effect_union(const std::vector<int>& X) const {
  Matrix sum = Matrix::Zero(dim(), dim());
  for (int x : X) {
    if (x < 0 || x >= outcomes())
      throw UnknownPoint("povm outcome " + std::to_string(x));
    sum += effects_[x].op().mat();
  }
  return Operator(std::move(sum));
}

std::vector<double> born_measure(const FinitePOVM& povm,
                                 const DensityState& omega) {
  if (omega.dim() != povm.dim())
    throw DimensionMismatch("born_measure: state vs POVM");
  std::vector<double> mu(povm.outcomes());
  for (int x = 0; x < povm.outcomes(); ++x)
    mu[x] = (omega.op().mat() * povm.effects()[x].op().mat()).trace().real();
  return mu;
}

CovarianceCertificate verify_covariance(const UnitaryRep& rep,
                                        const FinitePOVM& povm) {
  if (rep.dim() != povm.dim())
    throw DimensionMismatch("covariance: rep vs POVM dimension");
  if (!(rep.group() == povm.space().group()))
    throw GroupMismatch("covariance: rep vs POVM group");
  CovarianceCertificate cert{true, 0.0, 0, 0};
  for (int g = 0; g < rep.group().order(); ++g)
    for (int x = 0; x < povm.outcomes(); ++x) {
      const Operator lhs = povm.effects()[povm.space().act(g, x)].op();
      const Operator rhs =
          conjugate(rep, g, povm.effects()[x].op(), Action::observable);
      const double r = op_norm(lhs - rhs);
      if (r > cert.max_residual) {
        cert.max_residual = r;
        cert.worst_g = g;
        cert.worst_x = x;
      }
    }
  cert.pass = cert.max_residual < 1e-9;
  return cert;
}

Norm1Report check_norm1(const FinitePOVM& povm) {
  Norm1Report report{true, -1, 1.0};
  for (int x = 0; x < povm.outcomes(); ++x) {
    const double n = op_norm(povm.effects()[x].op());
    if (n < tol::eig_floor) continue;  // zero effect does not count
    if (n < 1.0 - 1e-9 && n < report.worst_norm) {
      report.worst_point = x;
      report.worst_norm = n;
      report.localizable = false;
    }
  }
  return report;
}

CompletenessReport check_complete(const UnitaryRep& rep,
                                  const FinitePOVM& povm) {
  CompletenessReport report;
  for (int g = 0; g < rep.group().order(); ++g) {
    bool fixes_all = true;
    for (int x = 0; x < povm.outcomes() && fixes_all; ++x) {
      const Operator moved =
          conjugate(rep, g, povm.effects()[x].op(), Action::observable);
      if (max_abs_diff(moved, povm.effects()[x].op()) > 1e-9)
        fixes_all = false;
    }
    if (fixes_all) report.isotropy.push_back(g);
  }
  report.complete = report.isotropy.size() == 1;  // identity only
  return report;
}

namespace {

bool all_projections(const FinitePOVM& povm) {
  for (const auto& e : povm.effects())
    if (!validate(e.op(), OperatorKind::projection).pass) return false;
  return true;
}

}  // namespace

QuantumFrame::QuantumFrame(UnitaryRep rep, FinitePOVM povm,
                           std::optional<Vector> coherent_seed)
    : rep_(std::move(rep)), povm_(std::move(povm)), seed_(std::move(coherent_seed)) {
  covariance_ = verify_covariance(rep_, povm_);
  if (!covariance_.pass)
    throw InvariantViolation("frame_covariance", covariance_.max_residual);
  norm1_ = check_norm1(povm_);
  completeness_ = check_complete(rep_, povm_);
  flags_ = FrameFlags{all_projections(povm_), povm_.space().is_left_self(),
                      norm1_.localizable, completeness_.complete};
}

DensityState QuantumFrame::identity_localized_state() const {
  if (!flags_.sharp)
    throw FrameNotIdeal("identity-localized state requires a sharp frame");
  const Operator& p = povm_.effects()[FiniteGroup::identity].op();
  const double tr = p.trace().real();
  return DensityState(Operator(Matrix(p.mat() / tr)));
}

CovarianceCertificate verify_covariance(const QuantumFrame& frame) {
  return frame.covariance();
}

CompletenessReport check_complete(const QuantumFrame& frame) {
  return frame.completeness();
}

QuantumFrame canonical_frame(const FiniteGroup& g, FrameConvention convention) {
  const int n = g.order();
  std::vector<Effect> effects;
  effects.reserve(n);
  for (int x = 0; x < n; ++x) {
    Matrix p = Matrix::Zero(n, n);
    const int basis = convention == FrameConvention::left_regular
                          ? x
                          : g.inverse(x);
    p(basis, basis) = 1.0;
    effects.emplace_back(Operator(std::move(p)));
  }
  UnitaryRep rep = convention == FrameConvention::left_regular
                       ? regular_rep(g)
                       : inverse_convention_rep(g);
  Vector seed = Vector::Zero(n);
  seed(FiniteGroup::identity) = 1.0;
  return QuantumFrame(std::move(rep),
                      FinitePOVM(left_self_space(g), std::move(effects)),
                      seed);
}

QuantumFrame coherent_frame(const UnitaryRep& rep, const Vector& eta) {
  const int d = rep.dim();
  const int n = rep.group().order();
  if (eta.size() != d)
    throw DimensionMismatch("coherent seed vs representation dimension");
  if (std::abs(eta.norm() - 1.0) > 1e-9)
    throw InvariantViolation("coherent_seed_norm", std::abs(eta.norm() - 1.0));

  std::vector<Vector> orbit;
  orbit.reserve(n);
  Matrix orbit_cols(d, n);
  for (int g = 0; g < n; ++g) {
    orbit.push_back(rep.matrix(g).mat() * eta);
    orbit_cols.col(g) = orbit.back();
  }

  Matrix avg = Matrix::Zero(d, d);
  for (const auto& v : orbit) avg += v * v.adjoint();
  avg /= static_cast<double>(n);
  const double lambda = avg.trace().real() / d;
  const double prop_residual =
      (avg - lambda * Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (prop_residual > 1e-8)
    throw NotProportionalToIdentity(
        "orbit average deviates from lambda*I by " +
        std::to_string(prop_residual));

  // Cyclicity by orbit-span rank; redundant once proportionality holds but
  // kept as a guard near the tolerance edge.
  Eigen::JacobiSVD<Matrix> svd(orbit_cols);
  const double smax = svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-8 * smax) ++rank;
  if (rank < d) throw NotCyclic("orbit spans a proper subspace");

  std::vector<Effect> effects;
  effects.reserve(n);
  const double scale = 1.0 / (lambda * n);
  for (const auto& v : orbit)
    effects.emplace_back(Operator(Matrix(scale * (v * v.adjoint()))));
  return QuantumFrame(rep,
                      FinitePOVM(left_self_space(rep.group()), std::move(effects)),
                      eta);
}

QuantumFrame classical_soi_frame(const GSpace& space) {
  const int pts = space.points();
  std::vector<Effect> effects;
  effects.reserve(pts);
  for (int x = 0; x < pts; ++x) {
    Matrix p = Matrix::Zero(pts, pts);
    p(x, x) = 1.0;
    effects.emplace_back(Operator(std::move(p)));
  }
  return QuantumFrame(permutation_rep(space),
                      FinitePOVM(space, std::move(effects)));
}

}  // namespace qrf
