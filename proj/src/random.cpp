#include "qrf/random.hpp"

#include <cmath>

namespace qrf {

double Rng::uniform() {
  return (gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

int Rng::pick(int n) {
  return static_cast<int>(uniform() * n) % n;
}

Matrix Rng::ginibre(int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
  return m;
}

Operator Rng::hermitian(int dim) {
  Matrix g = ginibre(dim, dim);
  return Operator(Matrix(0.5 * (g + g.adjoint())));
}

DensityState Rng::state(int dim) {
  Matrix g = ginibre(dim, dim);
  Matrix w = g * g.adjoint();
  return DensityState(Operator(Matrix(w / w.trace())));
}

Vector Rng::unit_vector(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cnormal();
  return v / v.norm();
}

}  // namespace qrf
