#include "qrf/operator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace qrf {

Operator::Operator(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
    throw DimensionMismatch("operator matrix must be square and non-empty");
}

Operator Operator::identity(int dim) {
  return Operator(Matrix::Identity(dim, dim));
}

Operator Operator::zero(int dim) { return Operator(Matrix::Zero(dim, dim)); }

Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("operator sum");
  return Operator(a.mat() + b.mat());
}

Operator operator-(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("operator difference");
  return Operator(a.mat() - b.mat());
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("operator product");
  return Operator(a.mat() * b.mat());
}

Operator operator*(Complex s, const Operator& a) {
  return Operator(s * a.mat());
}

Operator operator*(double s, const Operator& a) {
  return Operator(s * a.mat());
}

double max_abs(const Operator& a) { return a.mat().cwiseAbs().maxCoeff(); }

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("residual of unequal dims");
  return (a.mat() - b.mat()).cwiseAbs().maxCoeff();
}

Operator tensor(const Operator& a, const Operator& b) {
  const int da = a.dim(), db = b.dim();
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.mat()(i, j) * b.mat();
  return Operator(std::move(out));
}

int TensorLayout::total() const {
  int t = 1;
  for (int d : dims) t *= d;
  return t;
}

std::vector<long> TensorLayout::strides() const {
  std::vector<long> s(dims.size(), 1);
  for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f)
    s[f] = s[f + 1] * dims[f + 1];
  return s;
}

namespace {

// Mixed-radix index walker over the listed factors.
struct MultiIndex {
  std::vector<int> digits;
  const std::vector<int>& radices;
  explicit MultiIndex(const std::vector<int>& r)
      : digits(r.size(), 0), radices(r) {}
  bool next() {
    for (int f = static_cast<int>(digits.size()) - 1; f >= 0; --f) {
      if (++digits[f] < radices[f]) return true;
      digits[f] = 0;
    }
    return false;
  }
};

long compose(const std::vector<int>& digits, const std::vector<long>& strides,
             const std::vector<int>& slots) {
  long idx = 0;
  for (std::size_t k = 0; k < slots.size(); ++k)
    idx += static_cast<long>(digits[k]) * strides[slots[k]];
  return idx;
}

}  // namespace

Operator embed(const Operator& op, const TensorLayout& layout,
               const std::vector<int>& slots) {
  const auto strides = layout.strides();
  std::vector<int> slot_dims, rest, rest_dims;
  for (int s : slots) slot_dims.push_back(layout.dims[s]);
  for (int f = 0; f < layout.factors(); ++f)
    if (std::find(slots.begin(), slots.end(), f) == slots.end()) {
      rest.push_back(f);
      rest_dims.push_back(layout.dims[f]);
    }
  int slot_total = 1;
  for (int d : slot_dims) slot_total *= d;
  if (op.dim() != slot_total)
    throw DimensionMismatch("embed: operator does not fit the listed slots");

  Matrix out = Matrix::Zero(layout.total(), layout.total());
  MultiIndex row(slot_dims);
  do {
    MultiIndex col(slot_dims);
    int r = 0;
    for (std::size_t k = 0; k < slot_dims.size(); ++k)
      r = r * slot_dims[k] + row.digits[k];
    do {
      int c = 0;
      for (std::size_t k = 0; k < slot_dims.size(); ++k)
        c = c * slot_dims[k] + col.digits[k];
      const Complex v = op.mat()(r, c);
      if (v == Complex(0, 0)) continue;
      const long rbase = compose(row.digits, strides, slots);
      const long cbase = compose(col.digits, strides, slots);
      MultiIndex diag(rest_dims);
      if (rest_dims.empty()) {
        out(rbase, cbase) += v;
      } else {
        do {
          const long off = compose(diag.digits, strides, rest);
          out(rbase + off, cbase + off) += v;
        } while (diag.next());
      }
    } while (col.next());
  } while (row.next());
  return Operator(std::move(out));
}

Operator partial_trace(const Operator& x, const TensorLayout& layout,
                       const std::vector<int>& keep) {
  if (x.dim() != layout.total())
    throw DimensionMismatch("partial_trace: layout does not match operator");
  const auto strides = layout.strides();
  std::vector<int> keep_dims, traced, traced_dims;
  for (int s : keep) keep_dims.push_back(layout.dims[s]);
  for (int f = 0; f < layout.factors(); ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) {
      traced.push_back(f);
      traced_dims.push_back(layout.dims[f]);
    }
  int keep_total = 1;
  for (int d : keep_dims) keep_total *= d;

  Matrix out = Matrix::Zero(keep_total, keep_total);
  MultiIndex row(keep_dims);
  int r = 0;
  do {
    MultiIndex col(keep_dims);
    int c = 0;
    do {
      const long rbase = compose(row.digits, strides, keep);
      const long cbase = compose(col.digits, strides, keep);
      Complex acc(0, 0);
      MultiIndex t(traced_dims);
      if (traced_dims.empty()) {
        acc = x.mat()(rbase, cbase);
      } else {
        do {
          const long off = compose(t.digits, strides, traced);
          acc += x.mat()(rbase + off, cbase + off);
        } while (t.next());
      }
      out(r, c) = acc;
      ++c;
    } while (col.next());
    ++r;
  } while (row.next());
  return Operator(std::move(out));
}

Operator partial_trace(const Operator& x, int dim_first, int dim_second,
                       TracedFactor traced_out) {
  if (x.dim() != dim_first * dim_second)
    throw DimensionMismatch("partial_trace: dims do not factor the operator");
  TensorLayout layout{{dim_first, dim_second}};
  const std::vector<int> keep =
      traced_out == TracedFactor::first ? std::vector<int>{1}
                                        : std::vector<int>{0};
  return partial_trace(x, layout, keep);
}

namespace {

Eigen::VectorXd singular_values(const Operator& a) {
  // Spectrum of A^dag A; small dims make this adequate. Eigenvalues within
  // solver noise of zero are clamped before the square root amplifies them.
  Matrix gram = a.mat().adjoint() * a.mat();
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = es.eigenvalues();
  const double noise = vals.cwiseAbs().maxCoeff() * 1e-14;
  for (int i = 0; i < vals.size(); ++i)
    vals(i) = vals(i) <= noise ? 0.0 : std::sqrt(vals(i));
  return vals;
}

}  // namespace

OperatorNorms norms(const Operator& a) {
  Eigen::VectorXd sv = singular_values(a);
  return OperatorNorms{sv.maxCoeff(), sv.sum()};
}

double op_norm(const Operator& a) { return singular_values(a).maxCoeff(); }

double trace_norm(const Operator& a) { return singular_values(a).sum(); }

Complex hs_inner(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("hs_inner");
  return (a.mat().adjoint() * b.mat()).trace();
}

Eigen::VectorXd hermitian_spectrum(const Operator& a) {
  Matrix h = 0.5 * (a.mat() + a.mat().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

ValidationReport validate(const Operator& x, OperatorKind kind) {
  ValidationReport report{kind, {}, true, ""};
  const double dim_tol = tol::abs_check * x.dim();
  auto check = [&](const std::string& name, double residual, double thresh) {
    const bool ok = residual <= thresh;
    report.checks.push_back({name, residual, thresh, ok});
    if (!ok && report.pass) {
      report.pass = false;
      report.failed = name;
    }
  };

  const double herm = max_abs_diff(x, x.adjoint());
  switch (kind) {
    case OperatorKind::state: {
      check("hermitian", herm, dim_tol);
      Eigen::VectorXd spec = hermitian_spectrum(x);
      check("positive", std::max(0.0, -spec.minCoeff()), tol::eig_floor);
      check("unit_trace", std::abs(x.trace() - Complex(1, 0)), dim_tol);
      break;
    }
    case OperatorKind::effect: {
      check("hermitian", herm, dim_tol);
      Eigen::VectorXd spec = hermitian_spectrum(x);
      check("positive", std::max(0.0, -spec.minCoeff()), tol::eig_floor);
      check("below_identity", std::max(0.0, spec.maxCoeff() - 1.0),
            tol::eig_floor);
      break;
    }
    case OperatorKind::projection: {
      check("hermitian", herm, dim_tol);
      check("idempotent", max_abs_diff(x * x, x), dim_tol);
      break;
    }
    case OperatorKind::unitary: {
      check("isometry", max_abs_diff(x.adjoint() * x, Operator::identity(x.dim())),
            dim_tol);
      break;
    }
  }
  return report;
}

DensityState::DensityState(Operator op) : op_(std::move(op)) {
  ValidationReport report = validate(op_, OperatorKind::state);
  if (!report.pass) {
    for (const auto& c : report.checks)
      if (!c.pass) throw InvariantViolation("state_" + c.invariant, c.residual);
  }
}

Effect::Effect(Operator op) : op_(std::move(op)) {
  ValidationReport report = validate(op_, OperatorKind::effect);
  if (!report.pass) {
    for (const auto& c : report.checks)
      if (!c.pass)
        throw InvariantViolation("effect_" + c.invariant, c.residual);
  }
}

}  // namespace qrf
