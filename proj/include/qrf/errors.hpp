#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qrf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvariantViolation : Error {
  InvariantViolation(const std::string& invariant, double residual)
      : Error("invariant violated: " + invariant +
              " (residual " + std::to_string(residual) + ")"),
        invariant(invariant),
        residual(residual) {}
  std::string invariant;
  double residual;
};

struct NotAGroup : Error {
  NotAGroup(const std::string& law, std::array<int, 3> witness)
      : Error("not a group: " + law + " fails at (" +
              std::to_string(witness[0]) + "," + std::to_string(witness[1]) +
              "," + std::to_string(witness[2]) + ")"),
        law(law),
        witness(witness) {}
  std::string law;
  std::array<int, 3> witness;
};

struct UnsupportedPreset : Error {
  using Error::Error;
};

struct UnknownPoint : Error {
  using Error::Error;
};

struct GroupMismatch : Error {
  using Error::Error;
};

struct NotCyclic : Error {
  using Error::Error;
};

struct NotProportionalToIdentity : Error {
  using Error::Error;
};

struct FrameNotIdeal : Error {
  using Error::Error;
};

struct FramesNotIdealCoherent : Error {
  using Error::Error;
};

struct InvalidCoefficients : Error {
  using Error::Error;
};

struct EmptySet : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace qrf
