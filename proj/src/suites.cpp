#include "qrf/suites.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qrf/scenarios.hpp"

namespace qrf {

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  SuiteReport report;

  void add(const std::string& id, const std::string& anchor, double residual,
           double threshold, bool lower_bound = false) {
    const bool pass = lower_bound ? residual > threshold : residual < threshold;
    report.checks.push_back(
        {id, anchor, residual, threshold, lower_bound, pass, 0.0});
  }

  template <typename Fn>
  void timed(const std::string& id, const std::string& anchor, double threshold,
             Fn&& fn, bool lower_bound = false) {
    const auto start = Clock::now();
    const double residual = fn();
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    add(id, anchor, residual, threshold, lower_bound);
    report.checks.back().runtime_ms = ms;
  }
};

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{
      "cyclic:2", "cyclic:3", "cyclic:4", "symmetric3", "quaternion8"};
  return names;
}

// ------------------------------------------------------------------ kinematics

void run_kinematics(Recorder& rec, const SuiteConfig& config) {
  for (const auto& name : preset_names()) {
    Rng rng(config.seed);
    const FiniteGroup g = make_preset(name);
    rec.add("group_laws/" + name, "group_axioms", 0.0, 1.0);

    const UnitaryRep reg = regular_rep(g);
    const UnitaryRep inv = inverse_convention_rep(g);
    rec.add("rep_laws/" + name, "unitary_representation", 0.0, 1.0);

    rec.timed("twirl_idempotent/" + name, "twirl_idempotent", 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < config.batch; ++i) {
        const Operator a = rng.hermitian(g.order());
        const Operator t = twirl(reg, a, Action::observable);
        worst = std::max(worst,
                         max_abs_diff(twirl(reg, t, Action::observable), t));
      }
      return worst;
    });

    rec.timed("twirl_duality/" + name, "twirl_duality", 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < config.batch; ++i) {
        const Operator a = rng.hermitian(g.order());
        const DensityState rho = rng.state(g.order());
        const Complex lhs =
            (twirl(reg, a, Action::observable).mat() * rho.op().mat()).trace();
        const Complex mid =
            (a.mat() * twirl(reg, rho.op(), Action::state).mat()).trace();
        const Complex rhs = (twirl(reg, a, Action::observable).mat() *
                             twirl(reg, rho.op(), Action::state).mat())
                                .trace();
        worst = std::max({worst, std::abs(lhs - mid), std::abs(lhs - rhs)});
      }
      return worst;
    });

    const OperatorSpaceBasis commutant = invariant_commutant(reg);
    rec.timed("twirl_in_commutant/" + name, "twirl_image_invariant", 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < config.batch / 4 + 1; ++i) {
        const Operator t =
            twirl(reg, rng.hermitian(g.order()), Action::observable);
        worst = std::max(worst, max_abs_diff(project_onto(commutant, t), t));
      }
      return worst;
    });
    rec.add("commutant_regular_dim/" + name, "commutant_regular_dim",
            std::abs(commutant.size() - g.order()), 0.5);

    const QuantumFrame canon = canonical_frame(g);
    const bool flags_ok = canon.flags().sharp && canon.flags().principal &&
                          canon.flags().localizable && canon.flags().complete;
    rec.add("frame_canonical/" + name, "canonical_frame_classification",
            canon.covariance().max_residual + (flags_ok ? 0.0 : 1.0), 1e-9);

    rec.timed("born_probability/" + name, "born_rule", 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < 10; ++i) {
        const auto mu = born_measure(canon.povm(), rng.state(g.order()));
        double total = 0.0;
        for (double p : mu) {
          worst = std::max(worst, std::max(0.0, -p));
          total += p;
        }
        worst = std::max(worst, std::abs(total - 1.0));
      }
      return worst;
    });

    // A basis state is perfectly localized on its own outcome.
    {
      Matrix loc = Matrix::Zero(g.order(), g.order());
      loc(1 % g.order(), 1 % g.order()) = 1.0;
      const auto mu = born_measure(canon.povm(), DensityState(Operator(loc)));
      rec.add("canonical_localization/" + name, "perfect_localization",
              std::abs(mu[1 % g.order()] - 1.0), 1e-12);
    }
    (void)inv;
  }

  {
    const QuantumFrame unsharp = lab::unsharp_coherent_z3();
    rec.add("frame_coherent_unsharp_z3/covariance", "coherent_frame_covariance",
            unsharp.covariance().max_residual, 1e-10);
    rec.add("frame_coherent_unsharp_z3/not_norm1", "coherent_norm1_defect",
            unsharp.norm1().localizable ? 0.0 : 1.0 - unsharp.norm1().worst_norm,
            1e-3, /*lower_bound=*/true);
  }
  {
    const GSpace letters =
        preset_natural_space(parse_preset("symmetric3"));
    const QuantumFrame classical = classical_soi_frame(letters);
    rec.add("frame_classical_s3letters", "classical_soi",
            classical.covariance().max_residual +
                (classical.flags().principal ? 1.0 : 0.0),
            1e-12);
  }
}

// -------------------------------------------------------------- relativization

void run_relativization(Recorder& rec, const SuiteConfig& config) {
  for (const auto& name : preset_names()) {
    Rng rng(config.seed + 1);
    const GroupPreset preset = parse_preset(name);
    const FiniteGroup g = make_preset(preset);
    const UnitaryRep system = lab::standard_system_rep(preset);
    const RelativePair pair(canonical_frame(g), system);
    const int ds = system.dim();
    const int batch = config.batch / 2 + 1;

    rec.timed("exact_recovery/" + name, "conditioned_recovery_exact", 1e-10, [&] {
      const DensityState e = pair.frame().identity_localized_state();
      double worst = 0.0;
      for (int i = 0; i < batch; ++i) {
        const Operator a = rng.hermitian(ds);
        worst = std::max(worst,
                         op_norm(frame_restrict(e, relativize(pair, a)) - a));
      }
      return worst;
    });

    rec.add("yen_unital/" + name, "relativization_unital",
            max_abs_diff(relativize(pair, Operator::identity(ds)),
                         Operator::identity(pair.joint_dim())),
            1e-12);

    rec.timed("yen_invariance/" + name, "relativized_invariance", 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < 8; ++i) {
        const Operator ya = relativize(pair, rng.hermitian(ds));
        for (int a = 0; a < g.order(); ++a)
          worst = std::max(
              worst, max_abs_diff(
                         conjugate(pair.joint_rep(), a, ya, Action::observable),
                         ya));
      }
      return worst;
    });

    rec.timed("yen_isometry/" + name, "relativization_isometry", 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < batch; ++i) {
        const Operator a = rng.hermitian(ds);
        worst = std::max(worst,
                         std::abs(op_norm(relativize(pair, a)) - op_norm(a)));
      }
      return worst;
    });

    rec.timed("yen_multiplicative_sharp/" + name, "sharp_multiplicativity",
              1e-9, [&] {
                double worst = 0.0;
                for (int i = 0; i < batch; ++i) {
                  const Operator a = rng.hermitian(ds);
                  const Operator b = rng.hermitian(ds);
                  worst = std::max(
                      worst, max_abs_diff(relativize(pair, a * b),
                                          relativize(pair, a) *
                                              relativize(pair, b)));
                }
                return worst;
              });

    rec.timed("yen_duality/" + name, "predual_duality", 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i < batch; ++i) {
        const DensityState joint = rng.state(pair.joint_dim());
        const Operator a = rng.hermitian(ds);
        const Complex lhs =
            (predual_relativize(pair, joint).op().mat() * a.mat()).trace();
        const Complex rhs =
            (joint.op().mat() * relativize(pair, a).mat()).trace();
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      return worst;
    });

    rec.timed("conditioned_consistency/" + name, "conditioned_via_restriction",
              1e-10, [&] {
                double worst = 0.0;
                for (int i = 0; i < 8; ++i) {
                  const DensityState omega = rng.state(g.order());
                  const Operator a = rng.hermitian(ds);
                  worst = std::max(
                      worst,
                      max_abs_diff(conditioned_relativize(pair, omega, a),
                                   frame_restrict(omega, relativize(pair, a))));
                }
                return worst;
              });

    rec.timed("conditioning_symmetries/" + name, "product_state_symmetries",
              1e-9, [&] {
                double worst = 0.0;
                const ObservableSet invariants = invariant_set(system);
                for (int i = 0; i < batch; ++i) {
                  const DensityState omega = rng.state(g.order());
                  const DensityState rho = rng.state(ds);
                  const int h = rng.pick(g.order());
                  // reorienting the frame vs counter-reorienting the system
                  const DensityState homega(
                      conjugate(pair.frame().rep(), h, omega.op(), Action::state));
                  const DensityState hrho(conjugate(system, g.inverse(h),
                                                    rho.op(), Action::state));
                  worst = std::max(
                      worst,
                      max_abs_diff(
                          product_relative_state(pair, homega, rho).op(),
                          product_relative_state(pair, omega, hrho).op()));
                  // invariant system state is frame independent
                  const DensityState inv_rho(twirl(system, rho.op(), Action::state));
                  worst = std::max(
                      worst,
                      max_abs_diff(
                          product_relative_state(pair, omega, inv_rho).op(),
                          inv_rho.op()));
                  // invariant frame state twirls the system
                  const DensityState inv_omega(
                      twirl(pair.frame().rep(), omega.op(), Action::state));
                  worst = std::max(
                      worst,
                      max_abs_diff(
                          product_relative_state(pair, inv_omega, rho).op(),
                          twirl(system, rho.op(), Action::state)));
                  // the G-class of the system state survives conditioning
                  worst = std::max(
                      worst,
                      signature_distance(
                          signature(product_relative_state(pair, omega, rho).op(),
                                    invariants),
                          signature(rho.op(), invariants)));
                }
                return worst;
              });
  }

  {
    // Unsharp frames break multiplicativity; exhibit a witness.
    Rng rng(config.seed + 2);
    const QuantumFrame unsharp = lab::unsharp_coherent_z3();
    const RelativePair pair(unsharp, regular_rep(unsharp.rep().group()));
    rec.timed(
        "yen_nonmultiplicative_unsharp/cyclic:3", "unsharp_multiplicativity_gap",
        1e-3,
        [&] {
          double best = 0.0;
          for (int i = 0; i < 20; ++i) {
            const Operator a = rng.hermitian(3);
            const Operator b = rng.hermitian(3);
            best = std::max(best, max_abs_diff(relativize(pair, a * b),
                                               relativize(pair, a) *
                                                   relativize(pair, b)));
          }
          return best;
        },
        /*lower_bound=*/true);
  }

  {
    // Relative-class decisions agree with equality of predual outputs.
    Rng rng(config.seed + 3);
    const FiniteGroup z2 = make_preset("cyclic:2");
    const RelativePair pair(canonical_frame(z2), regular_rep(z2));
    const ObservableSet relation = relative_set(pair);
    std::vector<DensityState> sample;
    for (int i = 0; i < 10; ++i) {
      const DensityState omega = rng.state(pair.joint_dim());
      sample.push_back(omega);
      sample.emplace_back(
          conjugate(pair.joint_rep(), 1, omega.op(), Action::state));
    }
    rec.timed("relative_state_oracle/cyclic:2", "relative_class_predual", 0.5,
              [&] {
                int disagreements = 0;
                for (std::size_t i = 0; i < sample.size(); ++i)
                  for (std::size_t j = 0; j < sample.size(); ++j) {
                    const bool via_class =
                        equivalent(sample[i].op(), sample[j].op(), relation)
                            .equivalent;
                    const bool via_predual =
                        max_abs_diff(
                            predual_relativize(pair, sample[i]).op(),
                            predual_relativize(pair, sample[j]).op()) < 1e-9;
                    if (via_class != via_predual) ++disagreements;
                  }
                return static_cast<double>(disagreements);
              });
  }

  {
    // Relative orientation between two ideal frames.
    const FiniteGroup z3 = make_preset("cyclic:3");
    const QuantumFrame f1 = canonical_frame(z3);
    const QuantumFrame f2 = canonical_frame(z3);
    const FinitePOVM orientation = relative_orientation(f1, f2);

    rec.timed("orientation_delta/cyclic:3", "orientation_localized_delta",
              1e-12, [&] {
                double worst = 0.0;
                for (int h = 0; h < 3; ++h) {
                  Matrix loc = Matrix::Zero(3, 3);
                  loc(h, h) = 1.0;
                  const DensityState joint(
                      tensor(f1.povm().effects()[0].op(), Operator(loc)));
                  const auto mu = born_measure(orientation, joint);
                  for (int x = 0; x < 3; ++x)
                    worst = std::max(
                        worst, std::abs(mu[x] - (x == h ? 1.0 : 0.0)));
                }
                return worst;
              });

    rec.timed("orientation_swap/cyclic:3", "orientation_swap_relation", 1e-10,
              [&] {
                const FinitePOVM other = relative_orientation(f2, f1);
                double worst = 0.0;
                for (int x = 0; x < 3; ++x) {
                  const std::vector<int> xinv = inverse_subset(z3, {x});
                  const Operator rhs = swap_factors(
                      other.effect_union(xinv), f2.dim(), f1.dim());
                  worst = std::max(
                      worst,
                      max_abs_diff(orientation.effects()[x].op(), rhs));
                }
                return worst;
              });

    rec.timed("orientation_invariant/cyclic:3", "orientation_invariance",
              1e-12, [&] {
                const UnitaryRep joint = tensor_rep(f1.rep(), f2.rep());
                double worst = 0.0;
                for (int x = 0; x < 3; ++x)
                  for (int a = 0; a < 3; ++a)
                    worst = std::max(
                        worst,
                        max_abs_diff(conjugate(joint, a,
                                               orientation.effects()[x].op(),
                                               Action::observable),
                                     orientation.effects()[x].op()));
                return worst;
              });
  }
}

// ----------------------------------------------------------------- framechange

void run_framechange(Recorder& rec, const SuiteConfig& config) {
  for (const auto& name : {std::string("cyclic:3"), std::string("symmetric3")}) {
    Rng rng(config.seed + 4);
    const GroupPreset preset = parse_preset(name);
    const FiniteGroup g = make_preset(preset);
    const FrameChangeScenario scenario = lab::ideal_scenario(
        g, FrameConvention::left_regular, lab::standard_system_rep(preset));
    const int input_dim = scenario.rest_dim(1);
    const auto inputs = lab::random_states(rng, input_dim, config.batch);

    rec.timed("framechange_inverse/" + name, "framechange_inverse", 1e-9, [&] {
      return frame_change_inverse_check(scenario, inputs).max_residual;
    });

    rec.timed("framechange_welldefined/" + name, "framechange_welldefined",
              1e-9, [&] {
                const ObservableSet framed2 = scenario_framed_set(scenario, 2, 1);
                const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);
                double worst = 0.0;
                for (int i = 0; i < 10; ++i) {
                  const DensityState omega = rng.state(input_dim);
                  Operator pert = rng.hermitian(input_dim);
                  pert = pert - quotient_project(framed2, pert);
                  pert = 0.5 * (pert + pert.adjoint());
                  const double pn = op_norm(pert);
                  if (pn < 1e-12) continue;
                  const double floor = hermitian_spectrum(omega.op()).minCoeff();
                  const DensityState shifted(
                      omega.op() + (0.5 * floor / pn) * pert);
                  const double input_gap = signature_distance(
                      signature(omega.op(), framed2),
                      signature(shifted.op(), framed2));
                  const double output_gap = signature_distance(
                      signature(frame_change_leg(scenario, 1, 2, omega).op(),
                                framed1),
                      signature(frame_change_leg(scenario, 1, 2, shifted).op(),
                                framed1));
                  worst = std::max({worst, input_gap, output_gap});
                }
                return worst;
              });

    rec.timed("framechange_triangle/" + name, "framechange_triangle", 1e-9, [&] {
      const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);
      double worst = 0.0;
      for (int i = 0; i < 10; ++i) {
        const DensityState total = rng.state(scenario.total_dim());
        const DensityState via1 = scenario_predual(scenario, 1, total);
        const DensityState left = frame_change_leg(scenario, 1, 2, via1);
        const DensityState right = scenario_predual(scenario, 2, total);
        worst = std::max(worst,
                         signature_distance(signature(left.op(), framed1),
                                            signature(right.op(), framed1)));
      }
      return worst;
    });
  }

  {
    // Classical pure states transform by group arithmetic.
    const FiniteGroup z3 = make_preset("cyclic:3");
    const FrameChangeScenario scenario =
        lab::ideal_scenario(z3, FrameConvention::left_regular, regular_rep(z3));
    rec.timed("framechange_classical/cyclic:3", "framechange_classical", 1e-12,
              [&] {
                double worst = 0.0;
                for (int h = 0; h < 3; ++h)
                  for (int s = 0; s < 3; ++s) {
                    Matrix in = Matrix::Zero(9, 9);
                    in(h * 3 + s, h * 3 + s) = 1.0;
                    const DensityState out =
                        frame_change_leg(scenario, 1, 2, DensityState(Operator(in)));
                    const int hi = z3.inverse(h);
                    const int si = z3.mul(hi, s);
                    Matrix expect = Matrix::Zero(9, 9);
                    expect(hi * 3 + si, hi * 3 + si) = 1.0;
                    worst = std::max(worst,
                                     max_abs_diff(out.op(), Operator(expect)));
                  }
                return worst;
              });
  }

  {
    Rng rng(config.seed + 5);
    const FiniteGroup z2 = make_preset("cyclic:2");
    const int half = config.batch / 2 + 1;
    const FrameChangeScenario three(canonical_frame(z2), canonical_frame(z2),
                                    regular_rep(z2), canonical_frame(z2));
    const auto inputs = lab::random_states(rng, three.rest_dim(1), half);
    rec.timed("framechange_compose/cyclic:2", "framechange_compose", 1e-9, [&] {
      return frame_change_compose_check(three, inputs).max_residual;
    });

    const FrameChangeScenario coherent3(canonical_frame(z2), canonical_frame(z2),
                                        regular_rep(z2),
                                        lab::uniform_coherent_frame(z2));
    const auto inputs3 = lab::random_states(rng, coherent3.rest_dim(1), half);
    rec.timed("framechange_compose_coherent3/cyclic:2",
              "framechange_compose_unsharp", 1e-9, [&] {
                return frame_change_compose_check(coherent3, inputs3)
                    .max_residual;
              });
  }

  {
    // Lifting with the identity-localized frame state undoes the predual.
    Rng rng(config.seed + 6);
    const FiniteGroup z3 = make_preset("cyclic:3");
    const RelativePair pair(canonical_frame(z3), regular_rep(z3));
    rec.timed("lift_roundtrip/cyclic:3", "lift_right_inverse", 1e-12, [&] {
      const DensityState e = pair.frame().identity_localized_state();
      double worst = 0.0;
      for (int i = 0; i < 20; ++i) {
        const DensityState rel = rng.state(pair.system_dim());
        const LiftResult lifted = lift(pair, e, rel);
        worst = std::max(
            worst, max_abs_diff(predual_relativize(pair, lifted.lifted).op(),
                                rel.op()));
      }
      return worst;
    });
  }
}

// ------------------------------------------------------------------ comparison

void run_comparison(Recorder& rec, const SuiteConfig& config) {
  for (const auto& name : {std::string("cyclic:2"), std::string("cyclic:3")}) {
    Rng rng(config.seed + 7);
    const FiniteGroup g = make_preset(name);
    const FrameChangeScenario scenario = lab::ideal_scenario(
        g, FrameConvention::inverse, inverse_convention_rep(g));
    const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);
    const int n = g.order();

    rec.timed("unitary_agreement/" + name, "unitary_frame_change_agreement",
              1e-9, [&] {
                double worst = 0.0;
                for (int i = 0; i < config.batch; ++i) {
                  const DensityState input(
                      tensor(rng.state(n).op(), rng.state(n).op()));
                  const FrameChangeResult ours = frame_change(scenario, input);
                  const DensityState theirs =
                      unitary_frame_change(scenario, input);
                  worst = std::max(
                      worst, signature_distance(
                                 ours.signature,
                                 signature(theirs.op(), framed1)));
                }
                return worst;
              });

    // Superposed frame 2: same class, different density matrices.
    Vector psi = Vector::Zero(n * n);
    psi(0 * n + 0) = 1.0 / std::sqrt(2.0);  // |h1=e>|g=e>
    psi(1 * n + 0) = 1.0 / std::sqrt(2.0);  // |h2=1>|g=e>
    const DensityState superposed(Operator(Matrix(psi * psi.adjoint())));
    const FrameChangeResult ours = frame_change(scenario, superposed);
    const DensityState theirs = unitary_frame_change(scenario, superposed);

    rec.add("luders_same_class/" + name, "luders_class_agreement",
            signature_distance(ours.signature, signature(theirs.op(), framed1)),
            1e-9);
    rec.add("luders_tracenorm_gap/" + name, "luders_state_gap",
            trace_norm(theirs.op() - ours.representative.op()), 0.1,
            /*lower_bound=*/true);
    rec.add("luders_unitary_entangled/" + name, "luders_negativity",
            negativity(theirs.op(), n, n), 0.01, /*lower_bound=*/true);
    rec.add("luders_representative_ppt/" + name, "luders_separable_rep",
            negativity(ours.representative.op(), n, n), 1e-10);
  }

  {
    const FiniteGroup z2 = make_preset("cyclic:2");
    const FrameChangeScenario scenario = lab::ideal_scenario(
        z2, FrameConvention::inverse, inverse_convention_rep(z2));
    rec.add("pn_matches_unitary/cyclic:2", "pn_unitary_coincides",
            max_abs_diff(pn_unitary(scenario),
                         unitary_frame_change_matrix(scenario)),
            1e-12);
  }

  {
    Rng rng(config.seed + 8);
    const FiniteGroup z3 = make_preset("cyclic:3");
    const FrameChangeScenario scenario = lab::ideal_scenario(
        z3, FrameConvention::inverse, inverse_convention_rep(z3));
    const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);
    const Operator v = pn_unitary(scenario);
    rec.add("pn_unitary/cyclic:3", "pn_unitarity",
            max_abs_diff(v.adjoint() * v, Operator::identity(v.dim())), 1e-12);
    rec.timed("pn_agreement/cyclic:3", "pn_frame_change_agreement", 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < config.batch / 2 + 1; ++i) {
        const DensityState input = rng.state(9);
        const FrameChangeResult ours = frame_change(scenario, input);
        const DensityState theirs = pn_frame_change(scenario, input);
        worst = std::max(worst,
                         signature_distance(ours.signature,
                                            signature(theirs.op(), framed1)));
      }
      return worst;
    });
  }
}

// ----------------------------------------------------------------------- phase

void run_phase(Recorder& rec, const SuiteConfig& config) {
  const int grid = 64;
  const std::vector<int> sweep{2, 4, 8, 16, 32};

  rec.timed("phase_normalization/d32", "phase_povm_normalization", 1e-10, [&] {
    const TruncatedPhasePOVM povm = build_phase_povm(32, grid);
    Matrix total = Matrix::Zero(32, 32);
    for (const auto& e : povm.effects) total += e.mat();
    return (total - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff();
  });

  rec.timed("phase_covariance/d8", "phase_grid_covariance", 1e-9, [&] {
    return grid_covariance_residual(build_phase_povm(8, grid));
  });

  rec.timed("phase_dim_bound", "phase_dimension_bound", 1e-9, [&] {
    Rng rng(config.seed + 9);
    double worst = 0.0;
    for (int d : {2, 4, 8}) {
      const TruncatedPhasePOVM povm = build_phase_povm(d, grid);
      for (int i = 0; i < 67; ++i) {
        const DensityState rho = rng.state(d);
        std::vector<int> cells;
        for (int k = 0; k < grid; ++k)
          if (rng.uniform() < 0.3) cells.push_back(k);
        if (cells.empty() || static_cast<int>(cells.size()) == grid) continue;
        const double p =
            (rho.op().mat() * povm.effect_union(cells).mat()).trace().real();
        worst = std::max(worst, p - d * povm.measure(cells));
      }
    }
    return worst;
  });

  rec.timed("phase_opnorm_monotone", "phase_localization_monotone", 0.0, [&] {
    std::vector<int> quarter;
    for (int k = 0; k < grid / 4; ++k) quarter.push_back(k);
    double previous = -1.0;
    double min_step = 1.0;
    for (int d : sweep) {
      const TruncatedPhasePOVM povm = build_phase_povm(d, grid);
      const double p = op_norm(povm.effect_union(quarter));
      min_step = std::min(min_step, p - previous);
      previous = p;
    }
    return min_step;
  }, /*lower_bound=*/true);

  rec.timed("phase_dirac_halfcircle", "dirac_weak_convergence", 0.1, [&] {
    const double center = M_PI + M_PI / grid;
    const TruncatedPhasePOVM probe = build_phase_povm(2, grid);
    const int center_cell = probe.cell_of(center);
    PhaseTestSet half{"half", {}};
    for (int k = -grid / 4; k < grid / 4; ++k)
      half.cells.push_back(((center_cell + k) % grid + grid) % grid);
    const LocalizationCurve curve =
        dirac_convergence_experiment(sweep, grid, center, {half});
    double last = 1.0;
    for (const auto& p : curve.points) {
      if (p.deviation > last + 1e-12) return 1.0;  // not decreasing
      last = p.deviation;
    }
    return last;
  });

  rec.timed("phase_dirac_excluded", "dirac_mass_escape", 0.1, [&] {
    const double center = M_PI + M_PI / grid;
    PhaseTestSet quarter{"far_quarter", {}};
    for (int k = 0; k < grid / 4; ++k) quarter.cells.push_back(k);
    const LocalizationCurve curve =
        dirac_convergence_experiment(sweep, grid, center, {quarter});
    return curve.points.back().probability;
  });

  rec.timed("phase_conditioned_identity", "conditioned_identity_convergence",
            0.0, [&] {
              Rng rng(config.seed + 10);
              const Operator a = rng.hermitian(4);
              const auto curve =
                  conditioned_identity_convergence(4, sweep, grid, a);
              double min_drop = 1.0;
              for (std::size_t i = 1; i < curve.size(); ++i)
                min_drop = std::min(
                    min_drop, curve[i - 1].residual - curve[i].residual);
              return min_drop;
            },
            /*lower_bound=*/true);

  rec.timed("phase_conditioned_invariant", "invariant_fixed_point", 1e-12, [&] {
    Matrix diag = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) diag(i, i) = i + 0.5;
    const auto curve =
        conditioned_identity_convergence(4, {2, 8}, grid, Operator(diag));
    double worst = 0.0;
    for (const auto& p : curve) worst = std::max(worst, p.residual);
    return worst;
  });

  rec.add("phase_d1_uniform", "trivial_truncation",
          [&] {
            const TruncatedPhasePOVM povm = build_phase_povm(1, grid);
            double worst = 0.0;
            for (const auto& e : povm.effects)
              worst = std::max(
                  worst, std::abs(e.mat()(0, 0).real() - 1.0 / grid) +
                             std::abs(e.mat()(0, 0).imag()));
            return worst;
          }(),
          1e-12);
}

}  // namespace

SuiteName parse_suite(const std::string& name) {
  if (name == "kinematics") return SuiteName::kinematics;
  if (name == "relativization") return SuiteName::relativization;
  if (name == "framechange") return SuiteName::framechange;
  if (name == "comparison") return SuiteName::comparison;
  if (name == "phase") return SuiteName::phase;
  throw ConfigError("unknown suite '" + name + "'");
}

std::string suite_label(SuiteName name) {
  switch (name) {
    case SuiteName::kinematics:
      return "kinematics";
    case SuiteName::relativization:
      return "relativization";
    case SuiteName::framechange:
      return "framechange";
    case SuiteName::comparison:
      return "comparison";
    case SuiteName::phase:
      return "phase";
  }
  return "?";
}

std::vector<SuiteName> all_suites() {
  return {SuiteName::kinematics, SuiteName::relativization,
          SuiteName::framechange, SuiteName::comparison, SuiteName::phase};
}

SuiteReport run_suite(SuiteName name, const SuiteConfig& config) {
  Recorder rec;
  rec.report.suite = suite_label(name);
  rec.report.seed = config.seed;
  switch (name) {
    case SuiteName::kinematics:
      run_kinematics(rec, config);
      break;
    case SuiteName::relativization:
      run_relativization(rec, config);
      break;
    case SuiteName::framechange:
      run_framechange(rec, config);
      break;
    case SuiteName::comparison:
      run_comparison(rec, config);
      break;
    case SuiteName::phase:
      run_phase(rec, config);
      break;
  }
  rec.report.pass = true;
  for (const auto& c : rec.report.checks)
    if (!c.pass) rec.report.pass = false;
  return rec.report;
}

Json to_json(const SuiteReport& report) {
  // Timings stay out of the JSON: reports must be byte-stable per seed.
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"id", c.id},
                          {"anchor", c.anchor},
                          {"residual", c.residual},
                          {"threshold", c.threshold},
                          {"bound", c.lower_bound ? "above" : "below"},
                          {"pass", c.pass}});
  return Json{{"suite", report.suite},
              {"seed", report.seed},
              {"pass", report.pass},
              {"checks", std::move(checks)}};
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " (seed " << report.seed << ")\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.id << "  residual "
        << c.residual << (c.lower_bound ? " > " : " < ") << c.threshold
        << "\n";
  }
  out << (report.pass ? "PASS" : "FAIL") << " " << report.suite << "\n";
  return out.str();
}

}  // namespace qrf
