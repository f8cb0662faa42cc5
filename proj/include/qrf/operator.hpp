#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <vector>

#include "qrf/errors.hpp"

namespace qrf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
// Absolute tolerance for hermiticity / trace / normalization checks, scaled
// by the ambient dimension at the point of use.
inline constexpr double abs_check = 1e-9;
// Eigenvalues of states and effects may dip this far below zero.
inline constexpr double eig_floor = 1e-10;
// Rank decisions (nullspaces, span truncation).
inline constexpr double rank = 1e-10;
// Gram-Schmidt drop threshold for operator spans.
inline constexpr double span_drop = 1e-10;
// Class-signature coordinate comparisons.
inline constexpr double signature = 1e-9;
}  // namespace tol

/// Dense complex square matrix: the carrier for observables, effects and
/// states. Immutable after construction.
class Operator {
 public:
  explicit Operator(Matrix m);

  static Operator identity(int dim);
  static Operator zero(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }

  Operator adjoint() const { return Operator(mat_.adjoint()); }
  Complex trace() const { return mat_.trace(); }

 private:
  Matrix mat_;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex s, const Operator& a);
Operator operator*(double s, const Operator& a);

/// Largest absolute entry of a - b; the workhorse residual.
double max_abs_diff(const Operator& a, const Operator& b);
double max_abs(const Operator& a);

/// Kronecker product; the first factor is the slow index.
Operator tensor(const Operator& a, const Operator& b);

enum class TracedFactor { first, second };

/// Reduce a bipartite operator to the kept factor.
Operator partial_trace(const Operator& x, int dim_first, int dim_second,
                       TracedFactor traced_out);

/// Factor dimensions of a multipartite space, factor 0 slowest.
struct TensorLayout {
  std::vector<int> dims;
  int total() const;
  std::vector<long> strides() const;
  int factors() const { return static_cast<int>(dims.size()); }
};

/// Place an operator acting on the listed factors (in listed order) into the
/// full space, identity elsewhere.
Operator embed(const Operator& op, const TensorLayout& layout,
               const std::vector<int>& slots);

/// Trace out every factor not listed in `keep`; kept factors stay in listed
/// order.
Operator partial_trace(const Operator& x, const TensorLayout& layout,
                       const std::vector<int>& keep);

struct OperatorNorms {
  double op_norm;
  double trace_norm;
};

/// Operator and trace norms via the singular values of the matrix.
OperatorNorms norms(const Operator& a);
double op_norm(const Operator& a);
double trace_norm(const Operator& a);

/// tr[adjoint(a) b]; conjugate-symmetric, positive-definite.
Complex hs_inner(const Operator& a, const Operator& b);

/// Eigenvalues of the hermitian part (a + a^dag)/2, ascending.
Eigen::VectorXd hermitian_spectrum(const Operator& a);

enum class OperatorKind { state, effect, projection, unitary };

struct CheckRecord {
  std::string invariant;
  double residual;
  double threshold;
  bool pass;
};

struct ValidationReport {
  OperatorKind kind;
  std::vector<CheckRecord> checks;
  bool pass;
  /// Name of the first failed invariant, empty when pass.
  std::string failed;
};

ValidationReport validate(const Operator& x, OperatorKind kind);

/// Positive trace-one operator. Construction validates and throws
/// InvariantViolation on failure.
class DensityState {
 public:
  explicit DensityState(Operator op);
  const Operator& op() const { return op_; }
  int dim() const { return op_.dim(); }

 private:
  Operator op_;
};

/// Positive operator in the unit interval.
class Effect {
 public:
  explicit Effect(Operator op);
  const Operator& op() const { return op_; }
  int dim() const { return op_.dim(); }

 private:
  Operator op_;
};

}  // namespace qrf
