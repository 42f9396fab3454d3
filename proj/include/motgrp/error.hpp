#ifndef MOTGRP_ERROR_HPP_
#define MOTGRP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace motgrp {

enum class ErrorKind {
  CongruenceViolation,
  NotNormal,
  NotTotallyDisconnected,
  NotAnAction,
  InvalidValue,
  OutOfDomain,
  AmbientMismatch,
  SliceMismatch,
  NotBoundaryFixing,
  NotALoop,
  NotZPreserving,
  NoMotionExists,
  NotAMotion,
  StrandMismatch,
  ConfigMismatch,
  DegenerateProjection,
  UnsupportedKind,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All domain failures surface as this exception; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace motgrp

#endif  // MOTGRP_ERROR_HPP_
