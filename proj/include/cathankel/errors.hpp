#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cathankel {

/// Base of every error raised by the library. Most of these are bug signals:
/// an exact identity that was supposed to hold did not.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonExactDivision : Error {
  using Error::Error;
};

struct NonUnitConstantTerm : Error {
  using Error::Error;
};

struct NonIntegerResult : Error {
  using Error::Error;
};

struct DimensionTooLarge : Error {
  using Error::Error;
};

struct ZeroDivisorEncountered : Error {
  using Error::Error;
};

struct UnsupportedFamily : Error {
  using Error::Error;
};

struct IdentityViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Raised by cross_check when two engines return different determinants.
/// Carries every engine's output as "engine=value" strings.
struct EngineDisagreement : Error {
  std::vector<std::string> outputs;

  explicit EngineDisagreement(std::vector<std::string> outs)
      : Error(describe(outs)), outputs(std::move(outs)) {}

 private:
  static std::string describe(const std::vector<std::string>& outs) {
    std::string msg = "determinant engines disagree:";
    for (const auto& o : outs) msg += " " + o;
    return msg;
  }
};

}  // namespace cathankel
