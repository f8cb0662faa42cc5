#pragma once

#include "qrf/framechange.hpp"
#include "qrf/random.hpp"

namespace qrf::lab {

/// A small faithful system representation: the two-dimensional standard
/// representation for symmetric3 (permutation action compressed onto the
/// complement of the uniform vector), the regular representation otherwise.
UnitaryRep standard_system_rep(const GroupPreset& preset);

/// Unsharp coherent frame on cyclic(3): two-dimensional phase-type
/// representation diag(1, w^g) seeded with (1,1)/sqrt(2). Principal, not
/// localizable.
QuantumFrame unsharp_coherent_z3();

/// One-dimensional coherent frame with effects 1/|G|: principal, unsharp,
/// incomplete. Valid over any group.
QuantumFrame uniform_coherent_frame(const FiniteGroup& g);

/// Two canonical frames plus the given system.
FrameChangeScenario ideal_scenario(const FiniteGroup& g,
                                   FrameConvention convention,
                                   UnitaryRep system);

std::vector<DensityState> random_states(Rng& rng, int dim, int count);

}  // namespace qrf::lab
