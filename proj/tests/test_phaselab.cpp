#include <doctest.h>

#include <cmath>

#include "qrf/phaselab.hpp"
#include "qrf/random.hpp"

using namespace qrf;

namespace {

// Simpson-rule quadrature of e^{i b theta}/(2 pi) over [lo, hi]; the
// independent oracle for the closed-form cell integrals.
Complex simpson_cell_integral(int b, double lo, double hi) {
  const int steps = 400;  // even
  const double h = (hi - lo) / steps;
  Complex acc(0, 0);
  for (int k = 0; k <= steps; ++k) {
    const double theta = lo + k * h;
    const double weight = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    acc += weight * std::polar(1.0, b * theta);
  }
  return acc * h / 3.0 / (2.0 * M_PI);
}

}  // namespace

TEST_CASE("trivial truncation") {
  const TruncatedPhasePOVM povm = build_phase_povm(1, 8);
  for (const auto& e : povm.effects)
    CHECK(std::abs(e.mat()(0, 0) - Complex(1.0 / 8.0, 0)) < 1e-15);
  // nothing localizes beyond the set measure
  CHECK(best_localizer(povm, {0, 1}).probability ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("cell integrals against quadrature") {
  const int M = 16;
  const TruncatedPhasePOVM povm = build_phase_povm(2, M);
  for (int k = 0; k < M; ++k) {
    const double lo = k * 2.0 * M_PI / M;
    const double hi = (k + 1) * 2.0 * M_PI / M;
    CHECK(std::abs(povm.effects[k].mat()(0, 1) -
                   simpson_cell_integral(-1, lo, hi)) < 1e-10);
    CHECK(std::abs(povm.effects[k].mat()(1, 0) -
                   simpson_cell_integral(1, lo, hi)) < 1e-10);
    CHECK(std::abs(povm.effects[k].mat()(0, 0) - Complex(1.0 / M, 0)) <
          1e-15);
  }
}

TEST_CASE("povm structure") {
  const TruncatedPhasePOVM povm = build_phase_povm(8, 32);
  Matrix sum = Matrix::Zero(8, 8);
  for (const auto& e : povm.effects) {
    CHECK(validate(e, OperatorKind::effect).pass);
    sum += e.mat();
  }
  CHECK((sum - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(grid_covariance_residual(povm) < 1e-12);
}

TEST_CASE("coefficient validation") {
  CHECK_THROWS_AS(build_phase_povm(2, 8, Matrix::Identity(3, 3)),
                  InvalidCoefficients);
  Matrix bad_diag = Matrix::Ones(2, 2);
  bad_diag(0, 0) = 2.0;
  CHECK_THROWS_AS(build_phase_povm(2, 8, bad_diag), InvalidCoefficients);
  Matrix not_psd(2, 2);
  not_psd << 1.0, 2.0, 2.0, 1.0;
  CHECK_THROWS_AS(build_phase_povm(2, 8, not_psd), InvalidCoefficients);

  // a valid non-canonical coefficient matrix still yields a POVM
  Matrix soft(2, 2);
  soft << 1.0, 0.5, 0.5, 1.0;
  CHECK_NOTHROW(build_phase_povm(2, 8, soft));
}

TEST_CASE("localization probability") {
  const int M = 64;
  std::vector<int> full;
  for (int k = 0; k < M; ++k) full.push_back(k);
  const TruncatedPhasePOVM povm = build_phase_povm(4, M);
  CHECK(best_localizer(povm, full).probability ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(best_localizer(povm, {}), EmptySet);

  // probability never exceeds d * measure
  Rng rng(71);
  for (int d : {2, 4, 8}) {
    const TruncatedPhasePOVM p = build_phase_povm(d, M);
    for (int i = 0; i < 40; ++i) {
      std::vector<int> cells;
      for (int k = 0; k < M; ++k)
        if (rng.uniform() < 0.25) cells.push_back(k);
      if (cells.empty() || static_cast<int>(cells.size()) == M) continue;
      CHECK(best_localizer(p, cells).probability <=
            d * p.measure(cells) + 1e-9);
    }
  }

  // fixed quarter circle: probability grows strictly with the truncation
  std::vector<int> quarter;
  for (int k = 0; k < M / 4; ++k) quarter.push_back(k);
  double previous = 0.0;
  for (int d : {2, 4, 8, 16, 32}) {
    const double p =
        best_localizer(build_phase_povm(d, M), quarter).probability;
    CHECK(p > previous);
    previous = p;
  }
  CHECK(previous < 1.0);
}

TEST_CASE("dirac convergence experiment") {
  const int M = 64;
  const double center = M_PI + M_PI / M;
  const TruncatedPhasePOVM probe = build_phase_povm(2, M);
  const int c = probe.cell_of(center);

  PhaseTestSet half{"half", {}}, away{"away", {}}, full{"full", {}};
  for (int k = -M / 4; k < M / 4; ++k)
    half.cells.push_back(((c + k) % M + M) % M);
  for (int k = 0; k < M / 4; ++k) away.cells.push_back(k);
  for (int k = 0; k < M; ++k) full.cells.push_back(k);

  const LocalizationCurve curve = dirac_convergence_experiment(
      {2, 4, 8, 16, 32}, M, center, {half, away, full});

  double last_half = 1.0, last_away = 1.0;
  for (const auto& p : curve.points) {
    if (p.set_id == "half") {
      CHECK(p.deviation <= last_half + 1e-12);
      last_half = p.deviation;
    } else if (p.set_id == "away") {
      CHECK(p.probability <= last_away + 1e-12);
      last_away = p.probability;
    } else {
      CHECK(p.deviation < 1e-12);  // the full circle always has mass one
    }
  }
  CHECK(last_half < 0.1);
  CHECK(last_away < 0.05);
}

TEST_CASE("conditioned identity convergence") {
  const int M = 64;
  Rng rng(72);
  const Operator a = rng.hermitian(4);
  const auto curve = conditioned_identity_convergence(4, {2, 4, 8, 16, 32}, M, a);
  for (std::size_t i = 1; i < curve.size(); ++i)
    CHECK(curve[i].residual < curve[i - 1].residual);

  // operators commuting with the circle action sit at zero residual
  Matrix diag = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) diag(i, i) = 2.0 * i - 1.0;
  for (const auto& p :
       conditioned_identity_convergence(4, {2, 8, 32}, M, Operator(diag)))
    CHECK(p.residual < 1e-12);
}

TEST_CASE("uniform frame state gives the grid twirl") {
  const int M = 32;
  const int d = 4;
  const TruncatedPhasePOVM povm = build_phase_povm(d, M);
  Rng rng(73);
  const Operator a = rng.hermitian(3);

  // mu(cell) = tr[E_k]/d = 1/M for the maximally mixed frame state
  Matrix weighted = Matrix::Zero(3, 3);
  for (int k = 0; k < M; ++k) {
    const double mu = povm.effects[k].trace().real() / d;
    CHECK(mu == doctest::Approx(1.0 / M).epsilon(1e-12));
    const Matrix u = system_shift(3, povm.midpoint(k)).mat();
    weighted += mu * u * a.mat() * u.adjoint();
  }
  CHECK(max_abs_diff(Operator(weighted), grid_twirl(3, M, a)) < 1e-12);
}

TEST_CASE("cell conventions") {
  const TruncatedPhasePOVM povm = build_phase_povm(2, 8);
  CHECK(povm.cell_of(1e-9) == 0);
  CHECK(povm.cell_of(2.0 * M_PI) == 7);
  CHECK(povm.cell_of(povm.midpoint(3)) == 3);
  CHECK(povm.ball_cells(povm.midpoint(0), 1e-6) == std::vector<int>{0});
  // a ball around zero wraps across the seam
  const auto wrap = povm.ball_cells(0.0, M_PI / 4.0);
  CHECK(wrap == std::vector<int>{0, 7});
}
