#pragma once

#include <stdexcept>
#include <string>

namespace astlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroInput : Error {
  ZeroInput() : Error("zero input where an invertible value is required") {}
};
struct OddOrder : Error {
  OddOrder() : Error("pfaffian requires even order") {}
};
struct SingularSystem : Error {
  explicit SingularSystem(const std::string& w = "singular interpolation system") : Error(w) {}
};
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& w) : Error(w) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error(w) {}
};
struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& w) : Error(w) {}
};
struct NotExtreme : Error {
  explicit NotExtreme(const std::string& w) : Error(w) {}
};
struct TypeMismatch : Error {
  explicit TypeMismatch(const std::string& w) : Error(w) {}
};
struct PoleHit : Error {
  explicit PoleHit(const std::string& w = "sample point hits a pole") : Error(w) {}
};
struct RepeatedVariables : Error {
  explicit RepeatedVariables(const std::string& w = "character arguments must be distinct") : Error(w) {}
};
struct DegenerateQ : Error {
  DegenerateQ() : Error("sigma(q^2) or sigma(q^4) vanishes") {}
};
struct UnknownIdentifier : Error {
  explicit UnknownIdentifier(const std::string& w) : Error(w) {}
};

}  // namespace astlab
