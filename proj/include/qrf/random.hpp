#pragma once

#include <cstdint>
#include <random>

#include "qrf/operator.hpp"

namespace qrf {

/// Deterministic sampler: fixed engine plus a hand-rolled Box-Muller so the
/// stream does not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  Complex cnormal();
  int pick(int n);  // 0..n-1

  Matrix ginibre(int rows, int cols);
  Operator hermitian(int dim);  // entries O(1), hermitian
  /// Full-rank state G G^dag / tr (Wishart-style).
  DensityState state(int dim);
  Vector unit_vector(int dim);

 private:
  std::mt19937_64 gen_;
};

}  // namespace qrf
