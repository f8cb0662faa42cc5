#include <doctest.h>

#include <cmath>

#include "qrf/equivalence.hpp"
#include "qrf/random.hpp"

using namespace qrf;

TEST_CASE("span construction") {
  CHECK(build_observable_set("trace", {Operator::identity(3)}).quotient_dim() ==
        1);
  CHECK(build_observable_set("full", matrix_units(3)).quotient_dim() == 9);

  const UnitaryRep reg = regular_rep(make_preset("cyclic:2"));
  CHECK(invariant_set(reg).quotient_dim() == 2);

  CHECK_THROWS_AS(build_observable_set("empty", {}), EmptySet);
}

TEST_CASE("trace-only relation identifies all states") {
  Rng rng(41);
  const ObservableSet trace_only =
      build_observable_set("trace", {Operator::identity(4)});
  for (int i = 0; i < 10; ++i) {
    const DensityState a = rng.state(4);
    const DensityState b = rng.state(4);
    CHECK(equivalent(a.op(), b.op(), trace_only).equivalent);
    // the lone coordinate is the normalized trace, equal for all states
    const auto sig = signature(a.op(), trace_only);
    CHECK(std::abs(sig.coords(0) - Complex(1.0 / 2.0, 0)) < 1e-12);
  }
}

TEST_CASE("full relation separates states") {
  Rng rng(42);
  const ObservableSet full = build_observable_set("full", matrix_units(3));
  const DensityState a = rng.state(3);
  const DensityState b = rng.state(3);
  CHECK_FALSE(equivalent(a.op(), b.op(), full).equivalent);
  CHECK(equivalent(a.op(), a.op(), full).equivalent);
}

TEST_CASE("signature linearity and class equality") {
  Rng rng(43);
  const UnitaryRep reg = regular_rep(make_preset("cyclic:3"));
  const ObservableSet invariants = invariant_set(reg);

  for (int i = 0; i < 10; ++i) {
    const Operator a = rng.hermitian(3);
    const Operator b = rng.hermitian(3);
    const double lambda = rng.uniform();
    const auto sa = signature(a, invariants);
    const auto sb = signature(b, invariants);
    const auto mix = signature(
        Operator(Matrix(lambda * a.mat() + (1 - lambda) * b.mat())),
        invariants);
    CHECK((mix.coords - (lambda * sa.coords + (1 - lambda) * sb.coords))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }

  // states on one orbit are operationally indistinguishable on invariants
  for (int i = 0; i < 10; ++i) {
    const DensityState rho = rng.state(3);
    for (int g = 0; g < 3; ++g) {
      const Operator moved = conjugate(reg, g, rho.op(), Action::state);
      CHECK(equivalent(rho.op(), moved, invariants).equivalent);
    }
  }
}

TEST_CASE("equivalence relation laws with tolerance margins") {
  Rng rng(44);
  const UnitaryRep reg = regular_rep(make_preset("cyclic:2"));
  const ObservableSet invariants = invariant_set(reg);
  for (int i = 0; i < 20; ++i) {
    const Operator a = rng.hermitian(2);
    const Operator b = rng.hermitian(2);
    const auto ab = equivalent(a, b, invariants);
    const auto ba = equivalent(b, a, invariants);
    CHECK(ab.equivalent == ba.equivalent);
    CHECK(std::abs(ab.residual - ba.residual) < 1e-13);
    CHECK(equivalent(a, a, invariants).residual < 1e-14);
  }
}

TEST_CASE("equivalence against generators matches the span") {
  Rng rng(45);
  const UnitaryRep reg = regular_rep(make_preset("cyclic:3"));
  const ObservableSet invariants = invariant_set(reg);
  for (int i = 0; i < 10; ++i) {
    const Operator t1 = rng.hermitian(3);
    const Operator t2 = rng.hermitian(3);
    bool generator_equal = true;
    for (const auto& gen : invariants.generators)
      if (std::abs(((t1.mat() - t2.mat()) * gen.mat()).trace()) > 1e-9)
        generator_equal = false;
    CHECK(generator_equal == equivalent(t1, t2, invariants).equivalent);
  }
}

TEST_CASE("quotient projector") {
  Rng rng(46);
  const ObservableSet full = build_observable_set("full", matrix_units(2));
  const ObservableSet trace_only =
      build_observable_set("trace", {Operator::identity(2)});

  for (int i = 0; i < 10; ++i) {
    const Operator t(rng.ginibre(2, 2));
    CHECK(max_abs_diff(quotient_project(full, t), t) < 1e-12);
    CHECK(max_abs_diff(
              quotient_project(trace_only, t),
              Operator(Matrix((t.trace() / 2.0) * Matrix::Identity(2, 2)))) <
          1e-12);
    const Operator once = quotient_project(trace_only, t);
    CHECK(max_abs_diff(quotient_project(trace_only, once), once) < 1e-10);
    CHECK(equivalent(t, once, trace_only).equivalent);
  }
}

TEST_CASE("convex mixtures stay equivalent") {
  Rng rng(47);
  const UnitaryRep reg = regular_rep(make_preset("cyclic:3"));
  const ObservableSet invariants = invariant_set(reg);
  for (int i = 0; i < 10; ++i) {
    const DensityState rho = rng.state(3);
    const DensityState sigma = rng.state(3);
    const Operator rho2 = conjugate(reg, 1, rho.op(), Action::state);
    const Operator sigma2 = conjugate(reg, 2, sigma.op(), Action::state);
    const double lambda = rng.uniform();
    const Operator mix1(
        Matrix(lambda * rho.op().mat() + (1 - lambda) * sigma.op().mat()));
    const Operator mix2(Matrix(lambda * rho2.mat() + (1 - lambda) * sigma2.mat()));
    CHECK(equivalent(mix1, mix2, invariants).equivalent);
  }
}

TEST_CASE("twirled states share invariant signatures") {
  Rng rng(48);
  const UnitaryRep reg = regular_rep(make_preset("symmetric3"));
  const ObservableSet invariants = invariant_set(reg);
  for (int i = 0; i < 10; ++i) {
    const DensityState rho = rng.state(6);
    const Operator averaged = twirl(reg, rho.op(), Action::state);
    CHECK(signature_distance(signature(rho.op(), invariants),
                             signature(averaged, invariants)) < 1e-10);
  }
}

TEST_CASE("positive unital map route to class equality") {
  // classes w.r.t. the twirl image coincide with equality of twirled states
  Rng rng(49);
  const UnitaryRep reg = regular_rep(make_preset("cyclic:3"));
  const ObservableSet invariants = invariant_set(reg);
  for (int i = 0; i < 10; ++i) {
    const DensityState a = rng.state(3);
    const DensityState b = rng.state(3);
    const bool class_equal = equivalent(a.op(), b.op(), invariants).equivalent;
    const bool twirl_equal =
        max_abs_diff(twirl(reg, a.op(), Action::state),
                     twirl(reg, b.op(), Action::state)) < 1e-9;
    CHECK(class_equal == twirl_equal);
    // and a constructed equal pair
    const Operator moved = conjugate(reg, rng.pick(3), a.op(), Action::state);
    CHECK(equivalent(a.op(), moved, invariants).equivalent);
    CHECK(max_abs_diff(twirl(reg, a.op(), Action::state),
                       twirl(reg, moved, Action::state)) < 1e-12);
  }
}

TEST_CASE("signature relation mismatch is rejected") {
  const ObservableSet s2 = build_observable_set("a", {Operator::identity(2)});
  const ObservableSet s3 = build_observable_set("b", {Operator::identity(3)});
  const auto sig2 = signature(Operator::identity(2), s2);
  const auto sig3 = signature(Operator::identity(3), s3);
  CHECK_THROWS_AS(signature_distance(sig2, sig3), GroupMismatch);
}
