#pragma once

#include <stdexcept>
#include <string>

namespace loopcross {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct GeneralPositionViolation : Error {
  using Error::Error;
};
struct PerturbationFailed : Error {
  using Error::Error;
};
struct PointOnCurve : Error {
  using Error::Error;
};
struct PointOnCircle : Error {
  using Error::Error;
};
struct PunctureOnCurve : Error {
  using Error::Error;
};
struct DegenerateRayContact : Error {
  using Error::Error;
};
struct NotParallel : Error {
  using Error::Error;
};
struct ParameterOutOfRange : Error {
  using Error::Error;
};
struct InsufficientCrossings : Error {
  using Error::Error;
};
struct InvalidInstance : Error {
  using Error::Error;
};
struct InvalidPlane : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};
struct RationalFormatError : Error {
  using Error::Error;
};

}  // namespace loopcross
