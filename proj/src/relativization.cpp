#include "qrf/relativization.hpp"

namespace qrf {

RelativePair::RelativePair(QuantumFrame frame, UnitaryRep system)
    : frame_(std::move(frame)),
      system_(std::move(system)),
      joint_(tensor_rep(frame_.rep(), system_)) {
  if (!(frame_.rep().group() == system_.group()))
    throw GroupMismatch("relative pair: frame vs system group");
  if (!frame_.flags().principal)
    throw InvariantViolation("pair_frame_principal", 0.0);
}

Operator relativize(const RelativePair& pair, const Operator& a) {
  if (a.dim() != pair.system_dim())
    throw DimensionMismatch("relativize: operator vs system dimension");
  const int n = pair.frame().rep().group().order();
  Matrix out = Matrix::Zero(pair.joint_dim(), pair.joint_dim());
  for (int g = 0; g < n; ++g)
    out += tensor(pair.frame().povm().effects()[g].op(),
                  conjugate(pair.system(), g, a, Action::observable))
               .mat();
  return Operator(std::move(out));
}

Operator predual_relativize_op(const RelativePair& pair,
                               const Operator& omega_joint) {
  if (omega_joint.dim() != pair.joint_dim())
    throw DimensionMismatch("predual: operator vs joint dimension");
  const int n = pair.frame().rep().group().order();
  const int dr = pair.frame_dim();
  const int ds = pair.system_dim();
  Matrix out = Matrix::Zero(ds, ds);
  for (int g = 0; g < n; ++g) {
    const Operator picked = partial_trace(
        tensor(pair.frame().povm().effects()[g].op(), Operator::identity(ds)) *
            omega_joint,
        dr, ds, TracedFactor::first);
    out += conjugate(pair.system(), g, picked, Action::state).mat();
  }
  return Operator(std::move(out));
}

DensityState predual_relativize(const RelativePair& pair,
                                const DensityState& omega_joint) {
  return DensityState(predual_relativize_op(pair, omega_joint.op()));
}

Operator frame_restrict(const DensityState& omega, const Operator& a_joint) {
  const int dr = omega.dim();
  if (a_joint.dim() % dr != 0)
    throw DimensionMismatch("restriction: joint operator does not factor");
  const int ds = a_joint.dim() / dr;
  return partial_trace(
      tensor(omega.op(), Operator::identity(ds)) * a_joint, dr, ds,
      TracedFactor::first);
}

Operator conditioned_relativize(const RelativePair& pair,
                                const DensityState& omega, const Operator& a) {
  if (a.dim() != pair.system_dim())
    throw DimensionMismatch("conditioned relativize: operator vs system");
  const auto mu = born_measure(pair.frame().povm(), omega);
  Matrix out = Matrix::Zero(a.dim(), a.dim());
  for (int g = 0; g < static_cast<int>(mu.size()); ++g)
    out += mu[g] * conjugate(pair.system(), g, a, Action::observable).mat();
  return Operator(std::move(out));
}

FinitePOVM relative_orientation(const QuantumFrame& frame1,
                                const QuantumFrame& frame2) {
  if (!(frame1.rep().group() == frame2.rep().group()))
    throw GroupMismatch("relative orientation: frames over different groups");
  RelativePair pair(frame1, frame2.rep());
  std::vector<Effect> effects;
  effects.reserve(frame2.povm().outcomes());
  for (const auto& e2 : frame2.povm().effects())
    effects.emplace_back(relativize(pair, e2.op()));
  return FinitePOVM(left_self_space(frame1.rep().group()), std::move(effects));
}

DensityState product_relative_state(const RelativePair& pair,
                                    const DensityState& omega,
                                    const DensityState& rho) {
  if (omega.dim() != pair.frame_dim() || rho.dim() != pair.system_dim())
    throw DimensionMismatch("product relative state dims");
  const auto mu = born_measure(pair.frame().povm(), omega);
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (int g = 0; g < static_cast<int>(mu.size()); ++g)
    out += mu[g] * conjugate(pair.system(), g, rho.op(), Action::state).mat();
  return DensityState(Operator(std::move(out)));
}

ObservableSet relative_set(const RelativePair& pair) {
  std::vector<Operator> gens;
  for (const auto& u : matrix_units(pair.system_dim()))
    gens.push_back(relativize(pair, u));
  return build_observable_set(
      "relative(" + pair.frame().rep().name() + ")", std::move(gens));
}

ObservableSet conditioned_set(const RelativePair& pair,
                              const DensityState& omega) {
  std::vector<Operator> gens;
  for (const auto& u : matrix_units(pair.system_dim()))
    gens.push_back(conditioned_relativize(pair, omega, u));
  return build_observable_set(
      "conditioned(" + pair.frame().rep().name() + ")", std::move(gens));
}

Operator swap_factors(const Operator& x, int dim_a, int dim_b) {
  if (x.dim() != dim_a * dim_b)
    throw DimensionMismatch("swap: dims do not factor the operator");
  Matrix out(x.dim(), x.dim());
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_b; ++b)
      for (int c = 0; c < dim_a; ++c)
        for (int d = 0; d < dim_b; ++d)
          out(b * dim_a + a, d * dim_a + c) = x.mat()(a * dim_b + b, c * dim_b + d);
  return Operator(std::move(out));
}

}  // namespace qrf
