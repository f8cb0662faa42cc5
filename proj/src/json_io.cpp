#include "qrf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qrf {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key))
    throw ParseError("missing field '" + std::string(key) + "' in " + where);
  return j.at(key);
}

}  // namespace

Json to_json(const Operator& op) {
  const int d = op.dim();
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < d; ++i) {
    Json rrow = Json::array(), irow = Json::array();
    for (int j = 0; j < d; ++j) {
      rrow.push_back(op.mat()(i, j).real());
      irow.push_back(op.mat()(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return Json{{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Operator operator_from_json(const Json& j) {
  const int d = field(j, "dim", "operator").get<int>();
  const Json& re = field(j, "re", "operator");
  const Json& im = field(j, "im", "operator");
  if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
    throw ParseError("operator rows do not match dim");
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(re[i].size()) != d ||
        static_cast<int>(im[i].size()) != d)
      throw ParseError("operator columns do not match dim");
    for (int k = 0; k < d; ++k)
      m(i, k) = Complex(re[i][k].get<double>(), im[i][k].get<double>());
  }
  return Operator(std::move(m));
}

Json to_json(const FiniteGroup& g) {
  return Json{{"order", g.order()}, {"cayley", g.cayley()}, {"name", g.name()}};
}

FiniteGroup group_from_json(const Json& j) {
  const Json& cayley = field(j, "cayley", "group");
  std::vector<std::vector<int>> table;
  for (const auto& row : cayley) table.push_back(row.get<std::vector<int>>());
  return FiniteGroup::verify(std::move(table),
                             j.value("name", std::string{}));
}

Json to_json(const UnitaryRep& rep) {
  Json mats = Json::array();
  for (int g = 0; g < rep.group().order(); ++g)
    mats.push_back(to_json(rep.matrix(g)));
  return Json{{"group", to_json(rep.group())},
              {"dim", rep.dim()},
              {"matrices", std::move(mats)},
              {"name", rep.name()}};
}

UnitaryRep rep_from_json(const Json& j) {
  FiniteGroup g = group_from_json(field(j, "group", "rep"));
  std::vector<Operator> mats;
  for (const auto& m : field(j, "matrices", "rep"))
    mats.push_back(operator_from_json(m));
  return UnitaryRep::verified(std::move(g), std::move(mats),
                              j.value("name", std::string{}));
}

Json to_json(const QuantumFrame& frame) {
  Json effects = Json::array();
  for (const auto& e : frame.povm().effects())
    effects.push_back(to_json(e.op()));
  Json flags{{"sharp", frame.flags().sharp},
             {"principal", frame.flags().principal},
             {"localizable", frame.flags().localizable},
             {"complete", frame.flags().complete}};
  Json rep{{"dim", frame.rep().dim()}, {"matrices", Json::array()}};
  for (int g = 0; g < frame.rep().group().order(); ++g)
    rep["matrices"].push_back(to_json(frame.rep().matrix(g)));
  Json j{{"group", to_json(frame.rep().group())},
         {"rep", std::move(rep)},
         {"effects", std::move(effects)},
         {"flags", std::move(flags)}};
  if (!frame.povm().space().is_left_self()) {
    std::vector<std::vector<int>> action;
    for (int g = 0; g < frame.rep().group().order(); ++g) {
      std::vector<int> row;
      for (int x = 0; x < frame.povm().space().points(); ++x)
        row.push_back(frame.povm().space().act(g, x));
      action.push_back(std::move(row));
    }
    j["space"] = Json{{"points", frame.povm().space().points()},
                      {"action", std::move(action)}};
  }
  if (frame.coherent_seed()) {
    Json seed = Json::array();
    for (int i = 0; i < frame.coherent_seed()->size(); ++i)
      seed.push_back(Json::array({(*frame.coherent_seed())(i).real(),
                                  (*frame.coherent_seed())(i).imag()}));
    j["coherent_seed"] = std::move(seed);
  }
  return j;
}

QuantumFrame frame_from_json(const Json& j) {
  FiniteGroup g = group_from_json(field(j, "group", "frame"));
  const Json& repj = field(j, "rep", "frame");
  std::vector<Operator> mats;
  for (const auto& m : field(repj, "matrices", "frame rep"))
    mats.push_back(operator_from_json(m));
  UnitaryRep rep = UnitaryRep::verified(g, std::move(mats));
  std::vector<Effect> effects;
  for (const auto& e : field(j, "effects", "frame"))
    effects.emplace_back(operator_from_json(e));
  GSpace space = left_self_space(g);
  if (j.contains("space")) {
    std::vector<std::vector<int>> action;
    for (const auto& row : j["space"].at("action"))
      action.push_back(row.get<std::vector<int>>());
    space = GSpace(g, std::move(action), "from_json");
  }
  std::optional<Vector> seed;
  if (j.contains("coherent_seed")) {
    const Json& s = j["coherent_seed"];
    Vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      v(static_cast<int>(i)) =
          Complex(s[i][0].get<double>(), s[i][1].get<double>());
    seed = std::move(v);
  }
  return QuantumFrame(std::move(rep), FinitePOVM(std::move(space), std::move(effects)),
                      std::move(seed));
}

Json to_json(const FinitePOVM& povm) {
  Json effects = Json::array();
  for (const auto& e : povm.effects()) effects.push_back(to_json(e.op()));
  return Json{{"group", to_json(povm.space().group())},
              {"effects", std::move(effects)}};
}

Json to_json(const ClassSignature& sig) {
  Json coords = Json::array();
  for (int i = 0; i < sig.coords.size(); ++i)
    coords.push_back(Json::array({sig.coords(i).real(), sig.coords(i).imag()}));
  return Json{{"relation", sig.relation},
              {"span_dim", sig.span_dim()},
              {"coords", std::move(coords)}};
}

Json to_json(const ValidationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"invariant", c.invariant},
                          {"residual", c.residual},
                          {"threshold", c.threshold},
                          {"pass", c.pass}});
  return Json{{"pass", report.pass},
              {"failed", report.failed},
              {"checks", std::move(checks)}};
}

FrameChangeScenario scenario_from_json(const Json& j) {
  FiniteGroup group = [&]() {
    const Json& gj = field(j, "group", "scenario");
    if (gj.is_string()) return make_preset(gj.get<std::string>());
    return group_from_json(gj);
  }();
  const std::string convention_name = j.value("convention", "left");
  FrameConvention convention;
  if (convention_name == "left")
    convention = FrameConvention::left_regular;
  else if (convention_name == "inverse")
    convention = FrameConvention::inverse;
  else
    throw ConfigError("scenario.convention must be 'left' or 'inverse'");

  const Json& frames = field(j, "frames", "scenario");
  if (frames.size() < 2 || frames.size() > 3)
    throw ConfigError("scenario.frames must list two or three frames");
  auto parse_frame = [&](const Json& fj) -> QuantumFrame {
    if (fj.is_string()) {
      if (fj.get<std::string>() == "canonical")
        return canonical_frame(group, convention);
      throw ConfigError("scenario frame entry '" + fj.get<std::string>() +
                        "' not recognized");
    }
    return frame_from_json(fj);
  };
  QuantumFrame f1 = parse_frame(frames[0]);
  QuantumFrame f2 = parse_frame(frames[1]);
  std::optional<QuantumFrame> f3;
  if (frames.size() == 3) f3 = parse_frame(frames[2]);

  const Json& sys = field(j, "system", "scenario");
  UnitaryRep system = [&]() {
    if (sys.is_string()) {
      const std::string name = sys.get<std::string>();
      if (name == "regular") return regular_rep(group);
      if (name == "inverse") return inverse_convention_rep(group);
      throw ConfigError("scenario.system must be 'regular', 'inverse' or a rep");
    }
    return rep_from_json(sys);
  }();
  return FrameChangeScenario(std::move(f1), std::move(f2), std::move(system),
                             std::move(f3));
}

std::string curve_to_csv(const LocalizationCurve& curve) {
  std::ostringstream out;
  out << "d,n,set_id,probability,deviation\n";
  out.precision(12);
  for (const auto& p : curve.points)
    out << p.d << ',' << p.n << ',' << p.set_id << ',' << p.probability << ','
        << p.deviation << '\n';
  return out.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace qrf
