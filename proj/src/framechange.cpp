#include "qrf/framechange.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace qrf {

FrameChangeScenario::FrameChangeScenario(QuantumFrame frame1,
                                         QuantumFrame frame2,
                                         UnitaryRep system,
                                         std::optional<QuantumFrame> frame3)
    : frame1_(std::move(frame1)),
      frame2_(std::move(frame2)),
      frame3_(std::move(frame3)),
      system_(std::move(system)) {
  const FiniteGroup& g = system_.group();
  if (!(frame1_.rep().group() == g) || !(frame2_.rep().group() == g) ||
      (frame3_ && !(frame3_->rep().group() == g)))
    throw GroupMismatch("scenario constituents over different groups");
  if (!frame1_.flags().principal || !frame2_.flags().principal ||
      (frame3_ && !frame3_->flags().principal))
    throw InvariantViolation("scenario_frames_principal", 0.0);
}

const QuantumFrame& FrameChangeScenario::frame(int index) const {
  switch (index) {
    case 1:
      return frame1_;
    case 2:
      return frame2_;
    case 3:
      if (frame3_) return *frame3_;
      break;
  }
  throw ConfigError("scenario has no frame " + std::to_string(index));
}

TensorLayout FrameChangeScenario::total_layout() const {
  TensorLayout layout;
  for (int f = 1; f <= frames(); ++f) layout.dims.push_back(frame(f).dim());
  layout.dims.push_back(system_.dim());
  return layout;
}

TensorLayout FrameChangeScenario::rest_layout(int frame_index) const {
  TensorLayout layout;
  for (int f = 1; f <= frames(); ++f)
    if (f != frame_index) layout.dims.push_back(frame(f).dim());
  layout.dims.push_back(system_.dim());
  return layout;
}

namespace {

std::vector<int> rest_slots(const FrameChangeScenario& s, int frame_index) {
  std::vector<int> slots;
  for (int f = 0; f <= s.frames(); ++f)
    if (f != frame_index - 1) slots.push_back(f);
  return slots;
}

UnitaryRep rest_rep(const FrameChangeScenario& s, int frame_index) {
  std::optional<UnitaryRep> acc;
  for (int f = 1; f <= s.frames(); ++f) {
    if (f == frame_index) continue;
    acc = acc ? tensor_rep(*acc, s.frame(f).rep()) : s.frame(f).rep();
  }
  return acc ? tensor_rep(*acc, s.system()) : s.system();
}

}  // namespace

DensityState scenario_lift(const FrameChangeScenario& scenario,
                           int frame_index, const DensityState& rest_state) {
  if (rest_state.dim() != scenario.rest_dim(frame_index))
    throw DimensionMismatch("lift: state vs complement dimension");
  const QuantumFrame& f = scenario.frame(frame_index);
  if (!f.ideal())
    throw FrameNotIdeal("exact localized lift requires an ideal frame");
  const DensityState omega = f.identity_localized_state();
  const TensorLayout layout = scenario.total_layout();
  const Operator total =
      embed(rest_state.op(), layout, rest_slots(scenario, frame_index)) *
      embed(omega.op(), layout, {frame_index - 1});
  return DensityState(total);
}

DensityState scenario_predual(const FrameChangeScenario& scenario,
                              int frame_index, const DensityState& total) {
  const TensorLayout layout = scenario.total_layout();
  if (total.dim() != layout.total())
    throw DimensionMismatch("predual: state vs total dimension");
  const QuantumFrame& f = scenario.frame(frame_index);
  const UnitaryRep rest = rest_rep(scenario, frame_index);
  const auto keep = rest_slots(scenario, frame_index);
  const int n = scenario.group().order();
  Matrix out = Matrix::Zero(rest.dim(), rest.dim());
  for (int g = 0; g < n; ++g) {
    const Operator picked = partial_trace(
        embed(f.povm().effects()[g].op(), layout, {frame_index - 1}) *
            total.op(),
        layout, keep);
    out += conjugate(rest, g, picked, Action::state).mat();
  }
  return DensityState(Operator(std::move(out)));
}

DensityState frame_change_leg(const FrameChangeScenario& scenario, int from,
                              int to, const DensityState& input) {
  return scenario_predual(scenario, to,
                          scenario_lift(scenario, from, input));
}

ObservableSet scenario_framed_set(const FrameChangeScenario& scenario,
                                  int index, int other) {
  // The framing POVM must sit on the first factor of the complement of
  // `other`, i.e. `index` is the smallest remaining frame index.
  int position = 0;
  for (int f = 1; f < index; ++f)
    if (f != other) ++position;
  if (position != 0)
    throw ConfigError("framed relation expects the framing POVM first");
  const TensorLayout rest = scenario.rest_layout(other);
  int trailing = 1;
  for (std::size_t k = 1; k < rest.dims.size(); ++k) trailing *= rest.dims[k];
  return framed_set(scenario.frame(index).povm(), trailing);
}

FrameChangeResult frame_change(const FrameChangeScenario& scenario,
                               const DensityState& input) {
  const DensityState out = frame_change_leg(scenario, 1, 2, input);
  const ObservableSet framed = scenario_framed_set(scenario, 1, 2);
  const ClassSignature sig = signature(out.op(), framed);
  const Operator projected = quotient_project(framed, out.op());
  bool use_projected = validate(projected, OperatorKind::state).pass;
  DensityState rep = use_projected ? DensityState(projected) : out;
  return FrameChangeResult{out, std::move(rep), sig, use_projected};
}

BatchReport frame_change_inverse_check(const FrameChangeScenario& scenario,
                                       const std::vector<DensityState>& inputs,
                                       double tol) {
  const ObservableSet framed2 = scenario_framed_set(scenario, 2, 1);
  BatchReport report{static_cast<int>(inputs.size()), 0.0, true};
  for (const auto& input : inputs) {
    const DensityState there = frame_change_leg(scenario, 1, 2, input);
    const DensityState back = frame_change_leg(scenario, 2, 1, there);
    const double r = signature_distance(signature(input.op(), framed2),
                                        signature(back.op(), framed2));
    report.max_residual = std::max(report.max_residual, r);
  }
  report.pass = report.max_residual < tol;
  return report;
}

BatchReport frame_change_compose_check(const FrameChangeScenario& scenario,
                                       const std::vector<DensityState>& inputs,
                                       double tol) {
  if (scenario.frames() != 3)
    throw ConfigError("composition check needs three frames");
  const ObservableSet framed12 = double_framed_set(
      scenario.frame(1).povm(), scenario.frame(2).povm(), scenario.system().dim());
  BatchReport report{static_cast<int>(inputs.size()), 0.0, true};
  for (const auto& input : inputs) {
    const DensityState direct = frame_change_leg(scenario, 1, 3, input);
    const DensityState step1 = frame_change_leg(scenario, 1, 2, input);
    const DensityState step2 = frame_change_leg(scenario, 2, 3, step1);
    const double r = signature_distance(signature(direct.op(), framed12),
                                        signature(step2.op(), framed12));
    report.max_residual = std::max(report.max_residual, r);
  }
  report.pass = report.max_residual < tol;
  return report;
}

namespace {

// Effects of an inverse-convention ideal frame are |x^{-1}><x^{-1}| in the
// computational basis; reject anything else so the unitary is unambiguous.
void require_inverse_canonical(const QuantumFrame& f, const char* which) {
  const FiniteGroup& g = f.rep().group();
  if (!f.ideal()) throw FrameNotIdeal(std::string(which) + " frame not ideal");
  for (int x = 0; x < g.order(); ++x) {
    Matrix expected = Matrix::Zero(f.dim(), f.dim());
    expected(g.inverse(x), g.inverse(x)) = 1.0;
    if ((f.povm().effects()[x].op().mat() - expected).cwiseAbs().maxCoeff() >
        1e-12)
      throw FrameNotIdeal(std::string(which) +
                          " frame is not in the inverse convention");
  }
}

}  // namespace

Operator unitary_frame_change_matrix(const FrameChangeScenario& scenario) {
  require_inverse_canonical(scenario.frame(1), "first");
  require_inverse_canonical(scenario.frame(2), "second");
  const FiniteGroup& g = scenario.group();
  const int n = g.order();
  const int ds = scenario.system().dim();
  Matrix u = Matrix::Zero(n * ds, n * ds);
  for (int a = 0; a < n; ++a) {
    const Matrix& us = scenario.system().matrix(a).mat();
    u.block(g.inverse(a) * ds, a * ds, ds, ds) = us;
  }
  return Operator(std::move(u));
}

DensityState unitary_frame_change(const FrameChangeScenario& scenario,
                                  const DensityState& input) {
  const Operator u = unitary_frame_change_matrix(scenario);
  if (input.dim() != u.dim())
    throw DimensionMismatch("unitary frame change input dimension");
  return DensityState(Operator(
      Matrix(u.mat() * input.op().mat() * u.mat().adjoint())));
}

Operator pn_unitary(const FrameChangeScenario& scenario) {
  const QuantumFrame& f1 = scenario.frame(1);
  const QuantumFrame& f2 = scenario.frame(2);
  if (!f1.coherent_seed() || !f2.coherent_seed())
    throw FramesNotIdealCoherent("frames carry no coherent seeds");
  const FiniteGroup& g = scenario.group();
  const int n = g.order();
  const int d1 = f1.dim(), d2 = f2.dim();
  std::vector<Vector> orbit1, orbit2;
  for (int a = 0; a < n; ++a) {
    orbit1.push_back(f1.rep().matrix(a).mat() * *f1.coherent_seed());
    orbit2.push_back(f2.rep().matrix(a).mat() * *f2.coherent_seed());
  }
  for (const auto& orbit : {orbit1, orbit2}) {
    const int d = static_cast<int>(orbit[0].size());
    if (static_cast<int>(orbit.size()) != d)
      throw FramesNotIdealCoherent("orbit cannot be orthonormal");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Complex gram = orbit[a].adjoint() * orbit[b];
        if (std::abs(gram - (a == b ? Complex(1, 0) : Complex(0, 0))) > 1e-9)
          throw FramesNotIdealCoherent("coherent orbit not orthonormal");
      }
  }
  const int ds = scenario.system().dim();
  Matrix v = Matrix::Zero(d1 * ds, d2 * ds);
  for (int a = 0; a < n; ++a) {
    const Vector& ket = orbit1[a];
    const Vector bra = f2.rep().matrix(a).mat().adjoint() * *f2.coherent_seed();
    const Matrix dyad = ket * bra.adjoint();
    const Matrix& us = scenario.system().matrix(a).mat();
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j)
        v.block(i * ds, j * ds, ds, ds) += dyad(i, j) * us;
  }
  return Operator(std::move(v));
}

DensityState pn_frame_change(const FrameChangeScenario& scenario,
                             const DensityState& input) {
  const Operator v = pn_unitary(scenario);
  if (input.dim() != v.dim())
    throw DimensionMismatch("pn frame change input dimension");
  return DensityState(Operator(
      Matrix(v.mat() * input.op().mat() * v.mat().adjoint())));
}

LiftResult lift(const RelativePair& pair, const DensityState& omega,
                const DensityState& relative_state) {
  if (omega.dim() != pair.frame_dim() ||
      relative_state.dim() != pair.system_dim())
    throw DimensionMismatch("lift dims");
  const DensityState lifted(tensor(omega.op(), relative_state.op()));
  const ObservableSet invariants = invariant_set(pair.joint_rep());
  return LiftResult{lifted, signature(lifted.op(), invariants)};
}

Operator partial_transpose(const Operator& x, int dim_first, int dim_second) {
  if (x.dim() != dim_first * dim_second)
    throw DimensionMismatch("partial transpose dims");
  Matrix out(x.dim(), x.dim());
  for (int a = 0; a < dim_first; ++a)
    for (int b = 0; b < dim_second; ++b)
      for (int c = 0; c < dim_first; ++c)
        for (int d = 0; d < dim_second; ++d)
          out(a * dim_second + d, c * dim_second + b) =
              x.mat()(a * dim_second + b, c * dim_second + d);
  return Operator(std::move(out));
}

double negativity(const Operator& state, int dim_first, int dim_second) {
  const Operator pt = partial_transpose(state, dim_first, dim_second);
  Eigen::VectorXd spec = hermitian_spectrum(pt);
  double neg = 0.0;
  for (int i = 0; i < spec.size(); ++i)
    if (spec(i) < 0) neg -= spec(i);
  return neg;
}

}  // namespace qrf
