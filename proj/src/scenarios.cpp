#include "qrf/scenarios.hpp"

#include <cmath>

namespace qrf::lab {

UnitaryRep standard_system_rep(const GroupPreset& preset) {
  if (preset.kind == GroupPreset::Kind::symmetric3) {
    const GSpace letters = preset_natural_space(preset);
    const UnitaryRep perm = permutation_rep(letters);
    Matrix isometry(3, 2);
    isometry.col(0) << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
    isometry.col(1) << 1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0),
        -2.0 / std::sqrt(6.0);
    return restrict_rep(perm, isometry);
  }
  return regular_rep(make_preset(preset));
}

QuantumFrame unsharp_coherent_z3() {
  const FiniteGroup z3 = make_preset("cyclic:3");
  const Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
  std::vector<Operator> mats;
  for (int g = 0; g < 3; ++g) {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = 1.0;
    u(1, 1) = std::pow(w, g);
    mats.emplace_back(std::move(u));
  }
  UnitaryRep rep = UnitaryRep::verified(z3, std::move(mats), "z3/phase2");
  Vector eta(2);
  eta << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return coherent_frame(rep, eta);
}

QuantumFrame uniform_coherent_frame(const FiniteGroup& g) {
  Vector eta(1);
  eta << 1.0;
  return coherent_frame(trivial_rep(g, 1), eta);
}

FrameChangeScenario ideal_scenario(const FiniteGroup& g,
                                   FrameConvention convention,
                                   UnitaryRep system) {
  return FrameChangeScenario(canonical_frame(g, convention),
                             canonical_frame(g, convention),
                             std::move(system));
}

std::vector<DensityState> random_states(Rng& rng, int dim, int count) {
  std::vector<DensityState> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(rng.state(dim));
  return out;
}

}  // namespace qrf::lab
