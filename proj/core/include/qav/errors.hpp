#pragma once
#include <stdexcept>
#include <string>

namespace qav {

// Typed error values.  Every failure mode callers are expected to handle has
// its own type so it can be caught (or reported) distinctly.
struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
  explicit DivisionByZero(const std::string& w) : std::runtime_error(w) {}
};

struct PoleAtSamplePoint : std::runtime_error {
  explicit PoleAtSamplePoint(const std::string& w)
      : std::runtime_error("pole at sample point: " + w) {}
};

struct NonRemovablePole : std::runtime_error {
  explicit NonRemovablePole(const std::string& w)
      : std::runtime_error("non-removable pole: " + w) {}
};

struct SingularComplement : std::runtime_error {
  explicit SingularComplement(const std::string& w)
      : std::runtime_error("singular complementary minor: " + w) {}
};

struct OddMode : std::runtime_error {
  explicit OddMode(const std::string& w)
      : std::runtime_error("odd mode not defined: " + w) {}
};

struct ExpansionPole : std::runtime_error {
  explicit ExpansionPole(const std::string& w)
      : std::runtime_error("pole at expansion point: " + w) {}
};

struct BadIndex : std::out_of_range {
  explicit BadIndex(const std::string& w) : std::out_of_range(w) {}
};

struct BadArgument : std::invalid_argument {
  explicit BadArgument(const std::string& w) : std::invalid_argument(w) {}
};

}  // namespace qav
