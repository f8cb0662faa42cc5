#pragma once

#include <string>
#include <vector>

#include "qrf/errors.hpp"

namespace qrf {

/// Finite group as a verified Cayley table over indices 0..order-1 with
/// index 0 the identity.
class FiniteGroup {
 public:
  /// Checks the identity, inverse and associativity laws, throwing NotAGroup
  /// with the failing law and a witness triple.
  static FiniteGroup verify(std::vector<std::vector<int>> cayley,
                            std::string name = "");

  int order() const { return static_cast<int>(cayley_.size()); }
  int mul(int g, int h) const { return cayley_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  static constexpr int identity = 0;
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  bool abelian() const;

  bool operator==(const FiniteGroup& other) const {
    return cayley_ == other.cayley_;
  }

 private:
  FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<int> inverse,
              std::string name)
      : cayley_(std::move(cayley)),
        inverse_(std::move(inverse)),
        name_(std::move(name)) {}

  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  std::string name_;
};

struct GroupPreset {
  enum class Kind { cyclic, dihedral, symmetric3, quaternion8 };
  Kind kind;
  int n = 0;
};

/// Parses "cyclic:4", "cyclic(4)", "dihedral:3", "symmetric3", "quaternion8".
GroupPreset parse_preset(const std::string& text);
FiniteGroup make_preset(const GroupPreset& preset);
FiniteGroup make_preset(const std::string& text);

/// Finite left G-space: points 0..points-1 with a verified transitive action.
class GSpace {
 public:
  GSpace(FiniteGroup group, std::vector<std::vector<int>> action,
         std::string name = "");

  const FiniteGroup& group() const { return group_; }
  int points() const { return static_cast<int>(action_[0].size()); }
  int act(int g, int x) const { return action_[g][x]; }
  const std::string& name() const { return name_; }

  /// True when the space is the group acting on itself by left translation.
  bool is_left_self() const;

 private:
  FiniteGroup group_;
  std::vector<std::vector<int>> action_;  // action_[g][x] = g.x
  std::string name_;
};

GSpace left_self_space(const FiniteGroup& g);

/// The natural space of a preset: 3 letters for symmetric3, the group itself
/// otherwise.
GSpace preset_natural_space(const GroupPreset& preset);

/// { g.x : x in X }, sorted. Throws UnknownPoint on entries outside the space.
std::vector<int> transform_subset(const GSpace& space, int g,
                                  const std::vector<int>& X);

/// X^{-1} = { g : g^{-1} in X } on the group itself.
std::vector<int> inverse_subset(const FiniteGroup& g,
                                const std::vector<int>& X);

/// Uniform (normalized counting) measure of a subset.
double uniform_measure(const GSpace& space, const std::vector<int>& X);

}  // namespace qrf
