#include <CLI11.hpp>
#include <iostream>

#include "qrf/json_io.hpp"
#include "qrf/scenarios.hpp"
#include "qrf/suites.hpp"

namespace {

using namespace qrf;

void emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

int cmd_group(const std::string& preset, const std::string& out) {
  const FiniteGroup g = make_preset(preset);
  Json j = to_json(g);
  j["abelian"] = g.abelian();
  emit(j, out);
  return 0;
}

int cmd_frame_make(const std::string& preset, const std::string& kind,
                   const std::string& convention, const std::string& out) {
  const FiniteGroup g = make_preset(preset);
  const FrameConvention conv = convention == "inverse"
                                   ? FrameConvention::inverse
                                   : FrameConvention::left_regular;
  if (convention != "left" && convention != "inverse")
    throw ConfigError("--convention must be left or inverse");
  QuantumFrame frame = [&]() {
    if (kind == "canonical") return canonical_frame(g, conv);
    if (kind == "uniform-coherent") return lab::uniform_coherent_frame(g);
    if (kind == "unsharp-z3") {
      if (g.order() != 3) throw ConfigError("unsharp-z3 needs --group cyclic:3");
      return lab::unsharp_coherent_z3();
    }
    throw ConfigError("unknown frame kind '" + kind + "'");
  }();
  emit(to_json(frame), out);
  return 0;
}

Json certificates(const QuantumFrame& frame) {
  Json j;
  j["covariance"] = Json{{"pass", frame.covariance().pass},
                         {"max_residual", frame.covariance().max_residual},
                         {"worst_g", frame.covariance().worst_g},
                         {"worst_x", frame.covariance().worst_x}};
  j["norm1"] = Json{{"localizable", frame.norm1().localizable},
                    {"worst_point", frame.norm1().worst_point},
                    {"worst_norm", frame.norm1().worst_norm}};
  j["completeness"] = Json{{"complete", frame.completeness().complete},
                           {"isotropy", frame.completeness().isotropy}};
  j["flags"] = Json{{"sharp", frame.flags().sharp},
                    {"principal", frame.flags().principal},
                    {"localizable", frame.flags().localizable},
                    {"complete", frame.flags().complete}};
  if (frame.coherent_seed())
    j["coherent"] = Json{{"seed_dim", frame.coherent_seed()->size()},
                         {"cyclicity_rank_tolerance", 1e-8}};
  return j;
}

int cmd_frame_check(const std::string& path, const std::string& out) {
  const QuantumFrame frame = frame_from_json(load_json_file(path));
  emit(certificates(frame), out);
  return frame.covariance().pass ? 0 : 1;
}

int cmd_relativize(const std::string& frame_path, const std::string& op_path,
                   const std::string& system_spec, const std::string& out) {
  const QuantumFrame frame = frame_from_json(load_json_file(frame_path));
  const Operator a = operator_from_json(load_json_file(op_path));
  UnitaryRep system = [&]() {
    if (system_spec == "regular") return regular_rep(frame.rep().group());
    if (system_spec == "inverse")
      return inverse_convention_rep(frame.rep().group());
    if (system_spec == "frame") return frame.rep();
    return rep_from_json(load_json_file(system_spec));
  }();
  const RelativePair pair(frame, system);
  emit(to_json(relativize(pair, a)), out);
  return 0;
}

int cmd_orientation(const std::string& f1_path, const std::string& f2_path,
                    const std::string& out) {
  const QuantumFrame f1 = frame_from_json(load_json_file(f1_path));
  const QuantumFrame f2 = frame_from_json(load_json_file(f2_path));
  emit(to_json(relative_orientation(f1, f2)), out);
  return 0;
}

int cmd_framechange(const std::string& scenario_path,
                    const std::string& state_path, const std::string& out,
                    double tol) {
  const FrameChangeScenario scenario =
      scenario_from_json(load_json_file(scenario_path));
  const DensityState input(operator_from_json(load_json_file(state_path)));
  const FrameChangeResult result = frame_change(scenario, input);

  const ObservableSet framed2 = scenario_framed_set(scenario, 2, 1);
  Json report;
  report["input_signature"] = to_json(signature(input.op(), framed2));
  report["output_signature"] = to_json(result.signature);
  report["output"] = to_json(result.output.op());
  report["representative"] = to_json(result.representative.op());
  report["representative_projected"] = result.representative_projected;
  report["frame1_covariance"] = scenario.frame(1).covariance().max_residual;
  report["frame2_covariance"] = scenario.frame(2).covariance().max_residual;

  // When the scenario is the ideal inverse-convention one, also compare
  // against the unitary map and witness the class degeneracy.
  try {
    const DensityState via_unitary = unitary_frame_change(scenario, input);
    const ObservableSet framed1 = scenario_framed_set(scenario, 1, 2);
    Json cmp;
    const double residual = signature_distance(
        result.signature, signature(via_unitary.op(), framed1));
    cmp["signature_residual"] = residual;
    cmp["same_class"] = residual < tol;
    cmp["tolerance"] = tol;
    cmp["tracenorm_gap"] =
        trace_norm(via_unitary.op() - result.representative.op());
    cmp["unitary_negativity"] = negativity(
        via_unitary.op(), scenario.frame(1).dim(), scenario.system().dim());
    cmp["representative_negativity"] =
        negativity(result.representative.op(), scenario.frame(1).dim(),
                   scenario.system().dim());
    report["unitary_comparison"] = std::move(cmp);
  } catch (const FrameNotIdeal&) {
  }

  emit(report, out);
  return 0;
}

int cmd_phaselab(int dmax, int grid, const std::string& out,
                 const std::string& format) {
  std::vector<int> sweep;
  for (int d = 2; d <= dmax; d *= 2) sweep.push_back(d);
  if (sweep.empty()) throw ConfigError("--dmax must be at least 2");

  const double center = M_PI + M_PI / grid;
  const TruncatedPhasePOVM probe = build_phase_povm(2, grid);
  const int center_cell = probe.cell_of(center);
  PhaseTestSet half{"half_at_center", {}};
  for (int k = -grid / 4; k < grid / 4; ++k)
    half.cells.push_back(((center_cell + k) % grid + grid) % grid);
  PhaseTestSet far{"far_quarter", {}};
  for (int k = 0; k < grid / 4; ++k) far.cells.push_back(k);
  PhaseTestSet full{"full_circle", {}};
  for (int k = 0; k < grid; ++k) full.cells.push_back(k);

  const LocalizationCurve curve =
      dirac_convergence_experiment(sweep, grid, center, {half, far, full});

  if (format == "json") {
    Json points = Json::array();
    for (const auto& p : curve.points)
      points.push_back(Json{{"d", p.d},
                            {"n", p.n},
                            {"set_id", p.set_id},
                            {"probability", p.probability},
                            {"deviation", p.deviation}});
    emit(Json{{"center", center}, {"grid", grid}, {"points", points}}, out);
  } else {
    const std::string csv = curve_to_csv(curve);
    if (out.empty())
      std::cout << csv;
    else
      write_text_file(out, csv);
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int batch,
               const std::string& out) {
  SuiteConfig config{seed, batch};
  std::vector<SuiteName> names =
      suite.empty() ? all_suites() : std::vector<SuiteName>{parse_suite(suite)};
  Json reports = Json::array();
  bool pass = true;
  for (SuiteName name : names) {
    const SuiteReport report = run_suite(name, config);
    std::cout << format_report(report);
    reports.push_back(to_json(report));
    if (!report.pass) pass = false;
  }
  if (!out.empty())
    write_text_file(out, reports.dump(2) + "\n");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operational quantum reference frame toolkit"};
  app.require_subcommand(1);

  std::string out, group_preset = "cyclic:3", kind = "canonical";
  std::string convention = "left", frame_path, frame2_path, op_path;
  std::string system_spec = "regular", scenario_path, state_path;
  std::string suite, format = "csv";
  std::uint64_t seed = 7;
  int batch = 100, dmax = 32, grid = 64;
  double tol = 1e-9;
  app.add_option("--tol", tol, "class-equality tolerance used in reports");

  auto* group_cmd = app.add_subcommand("group", "emit a verified group preset");
  group_cmd->fallthrough();
  group_cmd->add_option("--group", group_preset, "preset, e.g. cyclic:3");
  group_cmd->add_option("--out", out, "output path (stdout when omitted)");

  auto* frame_cmd = app.add_subcommand("frame", "build or certify frames");
  frame_cmd->fallthrough();
  auto* frame_make = frame_cmd->add_subcommand("make", "construct a frame");
  frame_make->fallthrough();
  frame_make->add_option("--group", group_preset, "group preset");
  frame_make->add_option("--kind", kind,
                         "canonical | uniform-coherent | unsharp-z3");
  frame_make->add_option("--convention", convention, "left | inverse");
  frame_make->add_option("--out", out, "output path");
  auto* frame_check = frame_cmd->add_subcommand("check", "print certificates");
  frame_check->fallthrough();
  frame_check->add_option("file", frame_path, "frame JSON")->required();
  frame_check->add_option("--out", out, "output path");

  auto* rel_cmd = app.add_subcommand("relativize", "relativize an operator");
  rel_cmd->fallthrough();
  rel_cmd->add_option("--frame", frame_path, "frame JSON")->required();
  rel_cmd->add_option("--op", op_path, "operator JSON")->required();
  rel_cmd->add_option("--system", system_spec,
                      "regular | inverse | frame | rep JSON path");
  rel_cmd->add_option("--out", out, "output path");

  auto* ori_cmd = app.add_subcommand("orientation",
                                     "relative orientation observable");
  ori_cmd->fallthrough();
  ori_cmd->add_option("--frame1", frame_path, "frame JSON")->required();
  ori_cmd->add_option("--frame2", frame2_path, "frame JSON")->required();
  ori_cmd->add_option("--out", out, "output path");

  auto* fc_cmd = app.add_subcommand("framechange", "localized frame change");
  fc_cmd->fallthrough();
  auto* fc_run = fc_cmd->add_subcommand("run", "transform a relative state");
  fc_run->fallthrough();
  fc_run->add_option("--scenario", scenario_path, "scenario JSON")->required();
  fc_run->add_option("--state", state_path, "input state JSON")->required();
  fc_run->add_option("--out", out, "report path");

  auto* phase_cmd = app.add_subcommand("phase-lab",
                                       "truncated phase localization lab");
  phase_cmd->fallthrough();
  auto* phase_converge = phase_cmd->add_subcommand("converge",
                                                   "localization sweep");
  phase_converge->fallthrough();
  phase_converge->add_option("--dmax", dmax, "largest truncation (powers of 2)");
  phase_converge->add_option("--grid", grid, "number of circle cells");
  phase_converge->add_option("--out", out, "output path");
  phase_converge->add_option("--format", format, "csv | json");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", suite,
                         "kinematics | relativization | framechange | "
                         "comparison | phase (all when omitted)");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--batch", batch, "random batch size");
  verify_cmd->add_option("--out", out, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (group_cmd->parsed()) return cmd_group(group_preset, out);
    if (frame_cmd->parsed()) {
      if (frame_make->parsed())
        return cmd_frame_make(group_preset, kind, convention, out);
      if (frame_check->parsed()) return cmd_frame_check(frame_path, out);
      throw qrf::ConfigError("frame needs a subcommand (make | check)");
    }
    if (rel_cmd->parsed())
      return cmd_relativize(frame_path, op_path, system_spec, out);
    if (ori_cmd->parsed()) return cmd_orientation(frame_path, frame2_path, out);
    if (fc_cmd->parsed()) {
      if (fc_run->parsed())
        return cmd_framechange(scenario_path, state_path, out, tol);
      throw qrf::ConfigError("framechange needs the run subcommand");
    }
    if (phase_cmd->parsed()) {
      if (phase_converge->parsed())
        return cmd_phaselab(dmax, grid, out, format);
      throw qrf::ConfigError("phase-lab needs the converge subcommand");
    }
    if (verify_cmd->parsed()) return cmd_verify(suite, seed, batch, out);
  } catch (const qrf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qrf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qrf::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const qrf::UnsupportedPreset& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qrf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
