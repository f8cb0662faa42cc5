#include "qrf/representation.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace qrf {

UnitaryRep UnitaryRep::verified(FiniteGroup group,
                                std::vector<Operator> matrices,
                                std::string name) {
  const int order = group.order();
  if (static_cast<int>(matrices.size()) != order)
    throw InvariantViolation("rep_matrix_count", matrices.size());
  const int d = matrices[0].dim();
  const double check = tol::abs_check * d;
  for (int g = 0; g < order; ++g) {
    if (matrices[g].dim() != d)
      throw DimensionMismatch("representation matrices of unequal dims");
    const double r = max_abs_diff(matrices[g].adjoint() * matrices[g],
                                  Operator::identity(d));
    if (r > check) throw InvariantViolation("rep_unitary", r);
  }
  {
    const double r = max_abs_diff(matrices[FiniteGroup::identity],
                                  Operator::identity(d));
    if (r > check) throw InvariantViolation("rep_identity", r);
  }
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      const double r =
          max_abs_diff(matrices[g] * matrices[h], matrices[group.mul(g, h)]);
      if (r > check) throw InvariantViolation("rep_homomorphism", r);
    }
  return UnitaryRep(std::move(group), std::move(matrices), std::move(name));
}

UnitaryRep regular_rep(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Operator> mats;
  mats.reserve(n);
  for (int a = 0; a < n; ++a) {
    Matrix m = Matrix::Zero(n, n);
    for (int h = 0; h < n; ++h) m(g.mul(a, h), h) = 1.0;
    mats.emplace_back(std::move(m));
  }
  return UnitaryRep::verified(g, std::move(mats), g.name() + "/regular");
}

UnitaryRep inverse_convention_rep(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Operator> mats;
  mats.reserve(n);
  for (int a = 0; a < n; ++a) {
    Matrix m = Matrix::Zero(n, n);
    for (int h = 0; h < n; ++h) m(g.mul(h, g.inverse(a)), h) = 1.0;
    mats.emplace_back(std::move(m));
  }
  return UnitaryRep::verified(g, std::move(mats), g.name() + "/inverse");
}

UnitaryRep permutation_rep(const GSpace& space) {
  const int n = space.group().order();
  const int pts = space.points();
  std::vector<Operator> mats;
  mats.reserve(n);
  for (int a = 0; a < n; ++a) {
    Matrix m = Matrix::Zero(pts, pts);
    for (int x = 0; x < pts; ++x) m(space.act(a, x), x) = 1.0;
    mats.emplace_back(std::move(m));
  }
  return UnitaryRep::verified(space.group(), std::move(mats),
                              space.name() + "/permutation");
}

UnitaryRep trivial_rep(const FiniteGroup& g, int dim) {
  std::vector<Operator> mats(g.order(), Operator::identity(dim));
  return UnitaryRep::verified(g, std::move(mats), g.name() + "/trivial");
}

UnitaryRep tensor_rep(const UnitaryRep& a, const UnitaryRep& b) {
  if (!(a.group() == b.group()))
    throw GroupMismatch("tensor_rep requires one group");
  std::vector<Operator> mats;
  mats.reserve(a.group().order());
  for (int g = 0; g < a.group().order(); ++g)
    mats.push_back(tensor(a.matrix(g), b.matrix(g)));
  return UnitaryRep::verified(a.group(), std::move(mats),
                              a.name() + "*" + b.name());
}

UnitaryRep restrict_rep(const UnitaryRep& rep, const Matrix& isometry) {
  const int d = rep.dim();
  const int k = static_cast<int>(isometry.cols());
  if (isometry.rows() != d)
    throw DimensionMismatch("isometry rows must match the representation");
  const Matrix gram = isometry.adjoint() * isometry;
  if ((gram - Matrix::Identity(k, k)).cwiseAbs().maxCoeff() > tol::abs_check * k)
    throw InvariantViolation("isometry_columns",
                             (gram - Matrix::Identity(k, k)).cwiseAbs().maxCoeff());
  const Matrix proj = isometry * isometry.adjoint();
  std::vector<Operator> mats;
  for (int g = 0; g < rep.group().order(); ++g) {
    const Matrix u = rep.matrix(g).mat();
    const double leak = ((Matrix::Identity(d, d) - proj) * u * isometry)
                            .cwiseAbs()
                            .maxCoeff();
    if (leak > tol::abs_check * d)
      throw InvariantViolation("subspace_not_invariant", leak);
    mats.emplace_back(Matrix(isometry.adjoint() * u * isometry));
  }
  return UnitaryRep::verified(rep.group(), std::move(mats),
                              rep.name() + "/restricted");
}

Operator conjugate(const UnitaryRep& rep, int g, const Operator& a,
                   Action direction) {
  if (a.dim() != rep.dim())
    throw DimensionMismatch("conjugate: operator vs representation");
  const Matrix& u = rep.matrix(g).mat();
  if (direction == Action::observable)
    return Operator(u * a.mat() * u.adjoint());
  return Operator(u.adjoint() * a.mat() * u);
}

OperatorSpaceBasis orthonormalize(const std::vector<Operator>& generators,
                                  std::string source, double drop_tol) {
  OperatorSpaceBasis basis;
  basis.source = std::move(source);
  if (generators.empty()) return basis;
  basis.dim = generators[0].dim();
  for (const auto& gen : generators) {
    if (gen.dim() != basis.dim)
      throw DimensionMismatch("span generators of unequal dims");
    Matrix v = gen.mat();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis.ops)
        v -= (b.mat().adjoint() * v).trace() * b.mat();
    const double norm = std::sqrt(std::abs((v.adjoint() * v).trace()));
    if (norm < drop_tol) continue;
    basis.ops.emplace_back(Matrix(v / norm));
  }
  return basis;
}

Operator project_onto(const OperatorSpaceBasis& basis, const Operator& t) {
  if (t.dim() != basis.dim)
    throw DimensionMismatch("projection: operator vs basis dimension");
  Matrix out = Matrix::Zero(t.dim(), t.dim());
  for (const auto& b : basis.ops)
    out += (b.mat().adjoint() * t.mat()).trace() * b.mat();
  return Operator(std::move(out));
}

OperatorSpaceBasis invariant_commutant(const UnitaryRep& rep) {
  const int d = rep.dim();
  const int d2 = d * d;
  const int order = rep.group().order();

  // Stacked commutator map on column-major vec(A):
  // U(g) A - A U(g) -> (I (x) U(g) - U(g)^T (x) I) vec(A).
  Matrix stacked(static_cast<long>(order) * d2, d2);
  for (int g = 0; g < order; ++g) {
    const Matrix& u = rep.matrix(g).mat();
    Matrix block = Matrix::Zero(d2, d2);
    for (int j = 0; j < d; ++j)
      block.block(j * d, j * d, d, d) = u;  // I (x) U
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          block(j * d + k, i * d + k) -= u(i, j);  // U^T (x) I
    stacked.block(static_cast<long>(g) * d2, 0, d2, d2) = block;
  }

  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Operator> ops;
  for (int c = 0; c < d2; ++c) {
    const double sigma = c < sv.size() ? sv(c) : 0.0;
    if (sigma > tol::rank) continue;
    Matrix a(d, d);
    for (int col = 0; col < d; ++col)
      a.col(col) = svd.matrixV().col(c).segment(col * d, d);
    ops.emplace_back(std::move(a));
  }
  // SVD right-singular vectors are orthonormal, and vec preserves the HS
  // inner product, so the basis is already orthonormal.
  OperatorSpaceBasis basis;
  basis.dim = d;
  basis.ops = std::move(ops);
  basis.source = "commutant(" + rep.name() + ")";
  return basis;
}

Operator twirl(const UnitaryRep& rep, const Operator& x, Action direction) {
  if (x.dim() != rep.dim())
    throw DimensionMismatch("twirl: operator vs representation");
  Matrix acc = Matrix::Zero(x.dim(), x.dim());
  for (int g = 0; g < rep.group().order(); ++g)
    acc += conjugate(rep, g, x, direction).mat();
  return Operator(acc / static_cast<double>(rep.group().order()));
}

}  // namespace qrf
