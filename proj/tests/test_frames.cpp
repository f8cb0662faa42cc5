#include <doctest.h>

#include <cmath>

#include "qrf/frame.hpp"
#include "qrf/random.hpp"
#include "qrf/scenarios.hpp"

using namespace qrf;

TEST_CASE("canonical frame") {
  const FiniteGroup z2 = make_preset("cyclic:2");
  const QuantumFrame frame = canonical_frame(z2);

  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = p1(1, 1) = 1.0;
  CHECK(max_abs_diff(frame.povm().effects()[0].op(), Operator(p0)) == 0.0);
  CHECK(max_abs_diff(frame.povm().effects()[1].op(), Operator(p1)) == 0.0);

  CHECK(frame.covariance().pass);
  CHECK(frame.covariance().max_residual == 0.0);
  CHECK(frame.flags().sharp);
  CHECK(frame.flags().principal);
  CHECK(frame.flags().localizable);
  CHECK(frame.flags().complete);
  CHECK(frame.ideal());
}

TEST_CASE("canonical frame in the inverse convention") {
  const FiniteGroup s3 = make_preset("symmetric3");
  const QuantumFrame frame = canonical_frame(s3, FrameConvention::inverse);
  CHECK(frame.covariance().pass);
  for (int x = 0; x < 6; ++x) {
    Matrix expected = Matrix::Zero(6, 6);
    expected(s3.inverse(x), s3.inverse(x)) = 1.0;
    CHECK(max_abs_diff(frame.povm().effects()[x].op(), Operator(expected)) ==
          0.0);
  }
  CHECK(max_abs_diff(frame.identity_localized_state().op(),
                     frame.povm().effects()[0].op()) == 0.0);
}

TEST_CASE("coherent frame from the basis seed recovers the canonical one") {
  const FiniteGroup z2 = make_preset("cyclic:2");
  Vector eta = Vector::Zero(2);
  eta(0) = 1.0;
  const QuantumFrame frame = coherent_frame(regular_rep(z2), eta);
  const QuantumFrame canon = canonical_frame(z2);
  for (int x = 0; x < 2; ++x)
    CHECK(max_abs_diff(frame.povm().effects()[x].op(),
                       canon.povm().effects()[x].op()) < 1e-15);
  CHECK(frame.flags().localizable);
}

TEST_CASE("degenerate coherent seed fails the proportionality oracle") {
  const FiniteGroup z2 = make_preset("cyclic:2");
  Vector eta(2);
  eta << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  // orbit average is the seed projector itself, far from lambda * I
  CHECK_THROWS_AS(coherent_frame(regular_rep(z2), eta),
                  NotProportionalToIdentity);
}

TEST_CASE("unsharp coherent frame on cyclic(3)") {
  const QuantumFrame frame = lab::unsharp_coherent_z3();
  CHECK(frame.covariance().pass);
  CHECK(frame.covariance().max_residual < 1e-10);
  CHECK_FALSE(frame.flags().sharp);
  CHECK(frame.flags().principal);
  CHECK_FALSE(frame.norm1().localizable);
  // effects are (d/|G|) |eta_g><eta_g| with d=2, |G|=3
  CHECK(frame.norm1().worst_norm == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("classical system of imprimitivity") {
  const FiniteGroup z3 = make_preset("cyclic:3");
  const QuantumFrame classical = classical_soi_frame(left_self_space(z3));
  const QuantumFrame canon = canonical_frame(z3);
  for (int x = 0; x < 3; ++x)
    CHECK(max_abs_diff(classical.povm().effects()[x].op(),
                       canon.povm().effects()[x].op()) == 0.0);
  CHECK(classical.covariance().max_residual == 0.0);

  const GSpace letters = preset_natural_space(parse_preset("symmetric3"));
  const QuantumFrame onletters = classical_soi_frame(letters);
  CHECK(onletters.covariance().pass);
  CHECK_FALSE(onletters.flags().principal);
  for (const auto& e : onletters.povm().effects())
    CHECK(validate(e.op(), OperatorKind::projection).pass);
}

TEST_CASE("covariance failure is detected") {
  const FiniteGroup z2 = make_preset("cyclic:2");
  // distinguishable projections under a trivial action cannot be covariant
  std::vector<Effect> effects;
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = p1(1, 1) = 1.0;
  effects.emplace_back(Operator(p0));
  effects.emplace_back(Operator(p1));
  const FinitePOVM povm(left_self_space(z2), std::move(effects));
  const auto cert = verify_covariance(trivial_rep(z2, 2), povm);
  CHECK_FALSE(cert.pass);
  CHECK(cert.max_residual == doctest::Approx(1.0));
  CHECK_THROWS_AS(QuantumFrame(trivial_rep(z2, 2), povm), InvariantViolation);
}

TEST_CASE("norm-1 and completeness checks") {
  const FiniteGroup z3 = make_preset("cyclic:3");
  const QuantumFrame canon = canonical_frame(z3);
  CHECK(check_norm1(canon.povm()).localizable);

  // uniform trivial POVM: every effect I/3
  std::vector<Effect> uniform;
  for (int x = 0; x < 3; ++x)
    uniform.emplace_back(Operator(Matrix(Matrix::Identity(3, 3) / 3.0)));
  const FinitePOVM trivial_povm(left_self_space(z3), std::move(uniform));
  const auto report = check_norm1(trivial_povm);
  CHECK_FALSE(report.localizable);
  CHECK(report.worst_norm == doctest::Approx(1.0 / 3.0));

  CHECK(check_complete(canon.rep(), canon.povm()).complete);
  const auto isotropy = check_complete(regular_rep(z3), trivial_povm);
  CHECK_FALSE(isotropy.complete);
  CHECK(isotropy.isotropy.size() == 3);
}

TEST_CASE("povm invariants") {
  const FiniteGroup z2 = make_preset("cyclic:2");
  std::vector<Effect> short_sum;
  short_sum.emplace_back(Operator(Matrix(0.25 * Matrix::Identity(2, 2))));
  short_sum.emplace_back(Operator(Matrix(0.25 * Matrix::Identity(2, 2))));
  CHECK_THROWS_AS(FinitePOVM(left_self_space(z2), std::move(short_sum)),
                  InvariantViolation);
}

TEST_CASE("born measure is a probability") {
  Rng rng(31);
  const FiniteGroup s3 = make_preset("symmetric3");
  const QuantumFrame frame = canonical_frame(s3);
  for (int i = 0; i < 10; ++i) {
    const auto mu = born_measure(frame.povm(), rng.state(6));
    double total = 0.0;
    for (double p : mu) {
      CHECK(p > -1e-12);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }

  // perfect localization on a basis state
  Matrix loc = Matrix::Zero(6, 6);
  loc(4, 4) = 1.0;
  const auto mu = born_measure(frame.povm(), DensityState(Operator(loc)));
  CHECK(mu[4] == 1.0);
}

TEST_CASE("uniform coherent frame") {
  const FiniteGroup q8 = make_preset("quaternion8");
  const QuantumFrame frame = lab::uniform_coherent_frame(q8);
  CHECK(frame.dim() == 1);
  CHECK(frame.flags().principal);
  CHECK_FALSE(frame.flags().sharp);
  CHECK_FALSE(frame.flags().complete);
  CHECK(frame.completeness().isotropy.size() == 8);
  for (const auto& e : frame.povm().effects())
    CHECK(std::abs(e.op().mat()(0, 0) - Complex(1.0 / 8.0, 0)) < 1e-15);
}
