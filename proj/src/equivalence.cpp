#include "qrf/equivalence.hpp"

namespace qrf {

ObservableSet build_observable_set(std::string label,
                                   std::vector<Operator> generators) {
  if (generators.empty()) throw EmptySet("observable set needs generators");
  const int d = generators[0].dim();
  for (const auto& g : generators)
    if (g.dim() != d)
      throw DimensionMismatch("observable set generators of unequal dims");
  ObservableSet set;
  set.span = orthonormalize(generators, label);
  set.label = std::move(label);
  set.generators = std::move(generators);
  return set;
}

ClassSignature signature(const Operator& t, const ObservableSet& o) {
  if (t.dim() != o.span.dim)
    throw DimensionMismatch("signature: operator vs relation dimension");
  Vector coords(o.span.size());
  for (int i = 0; i < o.span.size(); ++i)
    coords(i) = hs_inner(o.span.ops[i], t);
  return ClassSignature{o.label, std::move(coords)};
}

double signature_distance(const ClassSignature& a, const ClassSignature& b) {
  if (a.relation != b.relation || a.span_dim() != b.span_dim())
    throw GroupMismatch("signatures taken against different relations");
  return (a.coords - b.coords).cwiseAbs().maxCoeff();
}

EquivalenceResult equivalent(const Operator& t1, const Operator& t2,
                             const ObservableSet& o, double tol) {
  const double r = signature_distance(signature(t1, o), signature(t2, o));
  return EquivalenceResult{r < tol, r};
}

Operator quotient_project(const ObservableSet& o, const Operator& t) {
  if (t.dim() != o.span.dim)
    throw DimensionMismatch("projection: operator vs relation dimension");
  // Adjoints of an HS-orthonormal basis are HS-orthonormal.
  Matrix out = Matrix::Zero(t.dim(), t.dim());
  for (const auto& b : o.span.ops) {
    const Operator badj = b.adjoint();
    out += hs_inner(badj, t) * badj.mat();
  }
  return Operator(std::move(out));
}

ObservableSet invariant_set(const UnitaryRep& rep) {
  OperatorSpaceBasis commutant = invariant_commutant(rep);
  ObservableSet set;
  set.label = "G(" + rep.name() + ")";
  set.generators = commutant.ops;
  set.span = std::move(commutant);
  set.span.source = set.label;
  return set;
}

std::vector<Operator> matrix_units(int d) {
  std::vector<Operator> units;
  units.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix m = Matrix::Zero(d, d);
      m(i, j) = 1.0;
      units.emplace_back(std::move(m));
    }
  return units;
}

ObservableSet framed_set(const FinitePOVM& povm, int system_dim) {
  std::vector<Operator> gens;
  const auto units = matrix_units(system_dim);
  for (const auto& e : povm.effects())
    for (const auto& u : units) gens.push_back(tensor(e.op(), u));
  return build_observable_set("framed(" + povm.space().name() + ")",
                              std::move(gens));
}

ObservableSet double_framed_set(const FinitePOVM& povm1,
                                const FinitePOVM& povm2, int system_dim) {
  std::vector<Operator> gens;
  const auto units = matrix_units(system_dim);
  for (const auto& e1 : povm1.effects())
    for (const auto& e2 : povm2.effects())
      for (const auto& u : units)
        gens.push_back(tensor(e1.op(), tensor(e2.op(), u)));
  return build_observable_set("framed(" + povm1.space().name() + "," +
                                  povm2.space().name() + ")",
                              std::move(gens));
}

}  // namespace qrf
