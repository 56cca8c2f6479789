#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwasawa {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NonFinite,
  NoConvergence,
  SingularMinor,
  WrongInertia,
  NotHermitian,
  SingularDiagonal,
  ZeroVector,
  NotTimelike,
  NotInG,
  NotInG0,
  NotInQ,
  NotInAN,
  EigenFailure,
  NotDecomposable,
  NotAdmissible,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this one exception type.
// index() is the 1-based column / minor position for the errors that carry
// one (SingularMinor, WrongInertia, SingularDiagonal, NotDecomposable) and 0
// otherwise. boundary() marks a NotDecomposable whose residual was null to
// tolerance rather than of the wrong causal type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int index = 0,
        bool boundary = false)
      : std::runtime_error(what),
        code_(code),
        index_(index),
        boundary_(boundary) {}

  ErrorCode code() const noexcept { return code_; }
  int index() const noexcept { return index_; }
  bool boundary() const noexcept { return boundary_; }

 private:
  ErrorCode code_;
  int index_;
  bool boundary_;
};

}  // namespace iwasawa
