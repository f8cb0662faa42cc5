#include "qrf/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace qrf {

FiniteGroup FiniteGroup::verify(std::vector<std::vector<int>> cayley,
                                std::string name) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw NotAGroup("non_empty", {0, 0, 0});
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("square_table", {0, 0, 0});
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("closed", {0, 0, 0});
  }
  for (int g = 0; g < n; ++g) {
    if (cayley[0][g] != g) throw NotAGroup("identity", {0, g, 0});
    if (cayley[g][0] != g) throw NotAGroup("identity", {g, 0, 0});
  }
  std::vector<int> inverse(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (cayley[g][h] == 0 && cayley[h][g] == 0) {
        inverse[g] = h;
        break;
      }
    }
    if (inverse[g] < 0) throw NotAGroup("inverses", {g, 0, 0});
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (cayley[cayley[g][h]][k] != cayley[g][cayley[h][k]])
          throw NotAGroup("associativity", {g, h, k});
  return FiniteGroup(std::move(cayley), std::move(inverse), std::move(name));
}

bool FiniteGroup::abelian() const {
  for (int g = 0; g < order(); ++g)
    for (int h = 0; h < order(); ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

namespace {

FiniteGroup make_cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
  return FiniteGroup::verify(std::move(t), "cyclic" + std::to_string(n));
}

// Elements s^t r^k indexed t*n + k; (t1,k1)(t2,k2) = (t1+t2, (-1)^{t2} k1 + k2).
FiniteGroup make_dihedral(int n) {
  const int order = 2 * n;
  auto idx = [n](int t, int k) { return t * n + ((k % n) + n) % n; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int t1 = 0; t1 < 2; ++t1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int t2 = 0; t2 < 2; ++t2)
        for (int k2 = 0; k2 < n; ++k2) {
          const int k = (t2 == 0 ? k1 : -k1) + k2;
          table[idx(t1, k1)][idx(t2, k2)] = idx((t1 + t2) % 2, k);
        }
  return FiniteGroup::verify(std::move(table), "dihedral" + std::to_string(n));
}

std::vector<std::array<int, 3>> symmetric3_permutations() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;  // lexicographic, identity first
}

FiniteGroup make_symmetric3() {
  const auto perms = symmetric3_permutations();
  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::array<int, 3>& q) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == q) return i;
    throw NotAGroup("closed", {0, 0, 0});
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      std::array<int, 3> composed;
      for (int x = 0; x < 3; ++x) composed[x] = perms[g][perms[h][x]];
      table[g][h] = find(composed);
    }
  return FiniteGroup::verify(std::move(table), "symmetric3");
}

// Elements 1,-1,i,-i,j,-j,k,-k encoded as (basis 0..3, sign).
FiniteGroup make_quaternion8() {
  auto idx = [](int basis, int sign) { return 2 * basis + (sign < 0 ? 1 : 0); };
  // basis multiplication: result basis and sign of e_a e_b.
  static const int basis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int sa : {1, -1})
      for (int b = 0; b < 4; ++b)
        for (int sb : {1, -1})
          table[idx(a, sa)][idx(b, sb)] =
              idx(basis_mul[a][b], sa * sb * sign_mul[a][b]);
  return FiniteGroup::verify(std::move(table), "quaternion8");
}

}  // namespace

GroupPreset parse_preset(const std::string& text) {
  auto head = text;
  int n = 0;
  const auto sep = text.find_first_of(":(");
  if (sep != std::string::npos) {
    head = text.substr(0, sep);
    std::string num = text.substr(sep + 1);
    if (!num.empty() && num.back() == ')') num.pop_back();
    try {
      n = std::stoi(num);
    } catch (...) {
      throw UnsupportedPreset("bad preset parameter in '" + text + "'");
    }
  }
  if (head == "cyclic") {
    if (n < 1) throw UnsupportedPreset("cyclic order must be >= 1");
    return {GroupPreset::Kind::cyclic, n};
  }
  if (head == "dihedral") {
    if (n < 1) throw UnsupportedPreset("dihedral order must be >= 1");
    return {GroupPreset::Kind::dihedral, n};
  }
  if (head == "symmetric3") return {GroupPreset::Kind::symmetric3, 3};
  if (head == "quaternion8") return {GroupPreset::Kind::quaternion8, 8};
  throw UnsupportedPreset("unknown group preset '" + text + "'");
}

FiniteGroup make_preset(const GroupPreset& preset) {
  switch (preset.kind) {
    case GroupPreset::Kind::cyclic:
      return make_cyclic(preset.n);
    case GroupPreset::Kind::dihedral:
      return make_dihedral(preset.n);
    case GroupPreset::Kind::symmetric3:
      return make_symmetric3();
    case GroupPreset::Kind::quaternion8:
      return make_quaternion8();
  }
  throw UnsupportedPreset("unreachable");
}

FiniteGroup make_preset(const std::string& text) {
  return make_preset(parse_preset(text));
}

GSpace::GSpace(FiniteGroup group, std::vector<std::vector<int>> action,
               std::string name)
    : group_(std::move(group)), action_(std::move(action)), name_(std::move(name)) {
  const int order = group_.order();
  if (static_cast<int>(action_.size()) != order)
    throw InvariantViolation("gspace_rows", action_.size());
  const int pts = points();
  for (const auto& row : action_) {
    if (static_cast<int>(row.size()) != pts)
      throw InvariantViolation("gspace_columns", row.size());
    for (int v : row)
      if (v < 0 || v >= pts) throw UnknownPoint("action leaves the point set");
  }
  for (int x = 0; x < pts; ++x)
    if (act(FiniteGroup::identity, x) != x)
      throw InvariantViolation("gspace_identity_action", x);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int x = 0; x < pts; ++x)
        if (act(g, act(h, x)) != act(group_.mul(g, h), x))
          throw InvariantViolation("gspace_action_law", g);
  // transitivity: the orbit of point 0 must be everything
  std::set<int> orbit;
  for (int g = 0; g < order; ++g) orbit.insert(act(g, 0));
  if (static_cast<int>(orbit.size()) != pts)
    throw InvariantViolation("gspace_transitivity", orbit.size());
}

bool GSpace::is_left_self() const {
  if (points() != group_.order()) return false;
  for (int g = 0; g < group_.order(); ++g)
    for (int x = 0; x < points(); ++x)
      if (act(g, x) != group_.mul(g, x)) return false;
  return true;
}

GSpace left_self_space(const FiniteGroup& g) {
  return GSpace(g, g.cayley(), g.name() + "/self");
}

GSpace preset_natural_space(const GroupPreset& preset) {
  if (preset.kind == GroupPreset::Kind::symmetric3) {
    const auto perms = symmetric3_permutations();
    std::vector<std::vector<int>> action(perms.size(), std::vector<int>(3));
    for (std::size_t g = 0; g < perms.size(); ++g)
      for (int x = 0; x < 3; ++x) action[g][x] = perms[g][x];
    return GSpace(make_preset(preset), std::move(action), "symmetric3/letters");
  }
  return left_self_space(make_preset(preset));
}

std::vector<int> transform_subset(const GSpace& space, int g,
                                  const std::vector<int>& X) {
  std::vector<int> out;
  out.reserve(X.size());
  for (int x : X) {
    if (x < 0 || x >= space.points())
      throw UnknownPoint("subset point " + std::to_string(x));
    out.push_back(space.act(g, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> inverse_subset(const FiniteGroup& g,
                                const std::vector<int>& X) {
  std::vector<int> out;
  for (int h = 0; h < g.order(); ++h)
    if (std::find(X.begin(), X.end(), g.inverse(h)) != X.end())
      out.push_back(h);
  return out;
}

double uniform_measure(const GSpace& space, const std::vector<int>& X) {
  return static_cast<double>(X.size()) / space.points();
}

}  // namespace qrf
