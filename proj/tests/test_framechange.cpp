#include <doctest.h>

#include <cmath>

#include "qrf/framechange.hpp"
#include "qrf/json_io.hpp"
#include "qrf/random.hpp"
#include "qrf/scenarios.hpp"

using namespace qrf;

namespace {

DensityState basis_state(int dim, int index) {
  Matrix m = Matrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityState(Operator(std::move(m)));
}

}  // namespace

TEST_CASE("scenario construction and guards") {
  const FiniteGroup z2 = make_preset("cyclic:2");
  const FiniteGroup z3 = make_preset("cyclic:3");
  CHECK_THROWS_AS(FrameChangeScenario(canonical_frame(z2), canonical_frame(z3),
                                      regular_rep(z2)),
                  GroupMismatch);

  const FrameChangeScenario two =
      lab::ideal_scenario(z2, FrameConvention::left_regular, regular_rep(z2));
  CHECK(two.total_dim() == 8);
  CHECK(two.rest_dim(1) == 4);
  CHECK_THROWS_AS(two.frame(3), ConfigError);
  CHECK_THROWS_AS(frame_change_compose_check(two, {}), ConfigError);
}

TEST_CASE("classical pure states transform by group arithmetic") {
  // left convention: (h, s) -> (h^{-1}, h^{-1} s)
  const FiniteGroup z3 = make_preset("cyclic:3");
  const FrameChangeScenario left =
      lab::ideal_scenario(z3, FrameConvention::left_regular, regular_rep(z3));
  for (int h = 0; h < 3; ++h)
    for (int s = 0; s < 3; ++s) {
      const DensityState out =
          frame_change_leg(left, 1, 2, basis_state(9, h * 3 + s));
      const int hi = z3.inverse(h);
      const DensityState expected =
          basis_state(9, hi * 3 + z3.mul(hi, s));
      CHECK(max_abs_diff(out.op(), expected.op()) < 1e-14);
    }

  // inverse convention: (h, g) -> (h^{-1}, g h^{-1})
  const FrameChangeScenario inv = lab::ideal_scenario(
      z3, FrameConvention::inverse, inverse_convention_rep(z3));
  for (int h = 0; h < 3; ++h)
    for (int g = 0; g < 3; ++g) {
      const DensityState out =
          frame_change_leg(inv, 1, 2, basis_state(9, h * 3 + g));
      const int hi = z3.inverse(h);
      const DensityState expected =
          basis_state(9, hi * 3 + z3.mul(g, hi));
      CHECK(max_abs_diff(out.op(), expected.op()) < 1e-14);
    }
}

TEST_CASE("round trip restores the framed class") {
  Rng rng(61);
  const FiniteGroup z3 = make_preset("cyclic:3");
  const FrameChangeScenario scenario =
      lab::ideal_scenario(z3, FrameConvention::left_regular, regular_rep(z3));
  const auto inputs = lab::random_states(rng, 9, 25);
  const auto report = frame_change_inverse_check(scenario, inputs);
  CHECK(report.pass);
  CHECK(report.max_residual < 1e-9);

  // classical states round trip exactly as density matrices
  for (int h = 0; h < 3; ++h) {
    const DensityState in = basis_state(9, h * 3 + 1);
    const DensityState back =
        frame_change_leg(scenario, 2, 1, frame_change_leg(scenario, 1, 2, in));
    CHECK(max_abs_diff(back.op(), in.op()) < 1e-13);
  }
}

TEST_CASE("well-definedness on framed classes") {
  Rng rng(62);
  const FiniteGroup z3 = make_preset("cyclic:3");
  const FrameChangeScenario scenario =
      lab::ideal_scenario(z3, FrameConvention::left_regular, regular_rep(z3));
  const ObservableSet framed2 = scenario_framed_set(scenario, 2, 1);
  const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);

  for (int i = 0; i < 10; ++i) {
    const DensityState omega = rng.state(9);
    Operator pert = rng.hermitian(9);
    pert = pert - quotient_project(framed2, pert);
    pert = 0.5 * (pert + pert.adjoint());
    const double pn = op_norm(pert);
    REQUIRE(pn > 1e-9);  // the framed span is a proper subspace
    const double floor = hermitian_spectrum(omega.op()).minCoeff();
    const DensityState shifted(omega.op() + (0.5 * floor / pn) * pert);

    CHECK(signature_distance(signature(omega.op(), framed2),
                             signature(shifted.op(), framed2)) < 1e-11);
    const auto a = frame_change(scenario, omega);
    const auto b = frame_change(scenario, shifted);
    CHECK(signature_distance(a.signature, b.signature) < 1e-10);
    // representatives of one class coincide
    CHECK(max_abs_diff(a.representative.op(), b.representative.op()) < 1e-10);
  }
}

TEST_CASE("composition through a third frame") {
  Rng rng(63);
  const FiniteGroup z2 = make_preset("cyclic:2");
  const FrameChangeScenario three(canonical_frame(z2), canonical_frame(z2),
                                  regular_rep(z2), canonical_frame(z2));

  // classical inputs compose exactly: group arithmetic oracle
  for (int h2 = 0; h2 < 2; ++h2)
    for (int h3 = 0; h3 < 2; ++h3)
      for (int s = 0; s < 2; ++s) {
        const DensityState in = basis_state(8, (h2 * 2 + h3) * 2 + s);
        const DensityState direct = frame_change_leg(three, 1, 3, in);
        const DensityState chained = frame_change_leg(
            three, 2, 3, frame_change_leg(three, 1, 2, in));
        CHECK(max_abs_diff(direct.op(), chained.op()) < 1e-13);
      }

  const auto inputs = lab::random_states(rng, 8, 20);
  const auto report = frame_change_compose_check(three, inputs);
  CHECK(report.pass);
  CHECK(report.max_residual < 1e-9);

  // an unsharp principal third frame still composes on signatures
  const FrameChangeScenario coherent3(canonical_frame(z2), canonical_frame(z2),
                                      regular_rep(z2),
                                      lab::uniform_coherent_frame(z2));
  const auto inputs3 = lab::random_states(rng, coherent3.rest_dim(1), 20);
  CHECK(frame_change_compose_check(coherent3, inputs3).pass);
}

TEST_CASE("unitary frame change agrees on framed classes") {
  Rng rng(64);
  const FiniteGroup z3 = make_preset("cyclic:3");
  const FrameChangeScenario scenario = lab::ideal_scenario(
      z3, FrameConvention::inverse, inverse_convention_rep(z3));

  const Operator u = unitary_frame_change_matrix(scenario);
  CHECK(max_abs_diff(u.adjoint() * u, Operator::identity(9)) < 1e-14);

  const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);
  for (int i = 0; i < 20; ++i) {
    const DensityState input(tensor(rng.state(3).op(), rng.state(3).op()));
    const FrameChangeResult ours = frame_change(scenario, input);
    const DensityState theirs = unitary_frame_change(scenario, input);
    CHECK(signature_distance(ours.signature,
                             signature(theirs.op(), framed1)) < 1e-10);
  }

  // left-convention frames are rejected
  const FrameChangeScenario left =
      lab::ideal_scenario(z3, FrameConvention::left_regular, regular_rep(z3));
  CHECK_THROWS_AS(unitary_frame_change_matrix(left), FrameNotIdeal);
}

TEST_CASE("superposed frame: coherent and decohered outputs share a class") {
  const FiniteGroup z3 = make_preset("cyclic:3");
  const FrameChangeScenario scenario = lab::ideal_scenario(
      z3, FrameConvention::inverse, inverse_convention_rep(z3));
  const int n = 3;

  const int h1 = 0, h2 = 1, g = 2;
  const double alpha = 1.0 / std::sqrt(2.0), beta = 1.0 / std::sqrt(2.0);
  Vector psi = Vector::Zero(n * n);
  psi(h1 * n + g) = alpha;
  psi(h2 * n + g) = beta;
  const DensityState input(Operator(Matrix(psi * psi.adjoint())));

  const DensityState via_unitary = unitary_frame_change(scenario, input);
  const FrameChangeResult ours = frame_change(scenario, input);

  // the unitary output is the coherent vector state from group arithmetic
  Vector expected = Vector::Zero(n * n);
  expected(z3.inverse(h1) * n + z3.mul(g, z3.inverse(h1))) = alpha;
  expected(z3.inverse(h2) * n + z3.mul(g, z3.inverse(h2))) = beta;
  CHECK(max_abs_diff(via_unitary.op(),
                     Operator(Matrix(expected * expected.adjoint()))) <
        1e-13);

  // same framed class, visibly different density operators
  const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);
  CHECK(signature_distance(ours.signature,
                           signature(via_unitary.op(), framed1)) < 1e-11);
  CHECK(trace_norm(via_unitary.op() - ours.representative.op()) ==
        doctest::Approx(2.0 * alpha * beta).epsilon(1e-9));

  // entanglement witness separates the representatives, not the class
  CHECK(negativity(via_unitary.op(), n, n) ==
        doctest::Approx(alpha * beta).epsilon(1e-9));
  CHECK(negativity(ours.representative.op(), n, n) < 1e-12);
  CHECK(ours.representative_projected);
}

TEST_CASE("relational Schroedinger picture frame change") {
  const FiniteGroup z2 = make_preset("cyclic:2");
  const FrameChangeScenario s2 = lab::ideal_scenario(
      z2, FrameConvention::inverse, inverse_convention_rep(z2));
  // on cyclic(2) the coherent-system map coincides with the frame-change
  // unitary outright
  CHECK(max_abs_diff(pn_unitary(s2), unitary_frame_change_matrix(s2)) <
        1e-14);

  Rng rng(65);
  const FiniteGroup z3 = make_preset("cyclic:3");
  const FrameChangeScenario s3 = lab::ideal_scenario(
      z3, FrameConvention::inverse, inverse_convention_rep(z3));
  const Operator v = pn_unitary(s3);
  CHECK(max_abs_diff(v * v.adjoint(), Operator::identity(9)) < 1e-13);

  const ObservableSet framed1 = scenario_framed_set(s3, 1, 2);
  for (int i = 0; i < 20; ++i) {
    const DensityState input = rng.state(9);
    const FrameChangeResult ours = frame_change(s3, input);
    const DensityState theirs = pn_frame_change(s3, input);
    CHECK(signature_distance(ours.signature,
                             signature(theirs.op(), framed1)) < 1e-10);
  }

  // frames without coherent structure are rejected
  const QuantumFrame bare =
      classical_soi_frame(left_self_space(z3));
  const FrameChangeScenario no_seed(bare, bare, regular_rep(z3));
  CHECK_THROWS_AS(pn_unitary(no_seed), FramesNotIdealCoherent);

  // the agreement is convention independent
  const FrameChangeScenario sleft =
      lab::ideal_scenario(z3, FrameConvention::left_regular, regular_rep(z3));
  const ObservableSet framed1_left = scenario_framed_set(sleft, 1, 2);
  for (int i = 0; i < 10; ++i) {
    const DensityState input = rng.state(9);
    const FrameChangeResult ours = frame_change(sleft, input);
    const DensityState theirs = pn_frame_change(sleft, input);
    CHECK(signature_distance(ours.signature,
                             signature(theirs.op(), framed1_left)) < 1e-10);
  }
}

TEST_CASE("framed inputs are round-trip fixed points") {
  Rng rng(69);
  const FiniteGroup z3 = make_preset("cyclic:3");
  const FrameChangeScenario scenario =
      lab::ideal_scenario(z3, FrameConvention::left_regular, regular_rep(z3));
  const ObservableSet framed2 = scenario_framed_set(scenario, 2, 1);
  for (int i = 0; i < 5; ++i) {
    // pinching onto the framed span keeps a valid state for a sharp frame
    const DensityState framed(quotient_project(framed2, rng.state(9).op()));
    const DensityState back = frame_change_leg(
        scenario, 2, 1, frame_change_leg(scenario, 1, 2, framed));
    CHECK(max_abs_diff(back.op(), framed.op()) < 1e-12);
  }
}

TEST_CASE("lift attaches a frame state and inverts the predual") {
  Rng rng(66);
  const FiniteGroup z3 = make_preset("cyclic:3");
  const RelativePair pair(canonical_frame(z3), regular_rep(z3));
  const DensityState e = pair.frame().identity_localized_state();

  for (int i = 0; i < 10; ++i) {
    const DensityState rel = rng.state(3);
    const LiftResult lifted = lift(pair, e, rel);
    CHECK(max_abs_diff(predual_relativize(pair, lifted.lifted).op(), rel.op()) <
          1e-13);
    CHECK(lifted.g_signature.span_dim() > 0);
  }

  // affine in the relative state
  const DensityState r1 = rng.state(3), r2 = rng.state(3);
  const double lambda = 0.3;
  const DensityState mixed(
      Operator(Matrix(lambda * r1.op().mat() + (1 - lambda) * r2.op().mat())));
  const LiftResult la = lift(pair, e, r1);
  const LiftResult lb = lift(pair, e, r2);
  const LiftResult lm = lift(pair, e, mixed);
  CHECK(max_abs_diff(lm.lifted.op(),
                     Operator(Matrix(lambda * la.lifted.op().mat() +
                                     (1 - lambda) * lb.lifted.op().mat()))) <
        1e-13);

  // an invariant system state lifts to the same invariant class for any
  // frame state
  const DensityState inv(
      twirl(pair.system(), rng.state(3).op(), Action::state));
  const DensityState omega2 = rng.state(3);
  CHECK(max_abs_diff(product_relative_state(pair, omega2, inv).op(), inv.op()) <
        1e-12);
}

TEST_CASE("exact path requires a sharp initial frame") {
  const QuantumFrame unsharp = lab::unsharp_coherent_z3();
  const FiniteGroup& z3 = unsharp.rep().group();
  const FrameChangeScenario scenario(unsharp, canonical_frame(z3),
                                     regular_rep(z3));
  Rng rng(67);
  CHECK_THROWS_AS(frame_change(scenario, rng.state(scenario.rest_dim(1))),
                  FrameNotIdeal);
}

TEST_CASE("partial transpose witness") {
  Rng rng(68);
  // product states are PPT
  const DensityState prod(tensor(rng.state(2).op(), rng.state(3).op()));
  CHECK(negativity(prod.op(), 2, 3) < 1e-12);

  // a Bell pair shows negativity 1/2
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK(negativity(Operator(Matrix(bell * bell.adjoint())), 2, 2) ==
        doctest::Approx(0.5).epsilon(1e-12));
}
