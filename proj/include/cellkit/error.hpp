#pragma once

#include <stdexcept>
#include <string>

namespace cellkit {

enum class Err {
  DuplicateValue,
  OutOfRange,
  RankMismatch,
  RankUnsupported,
  WindowOutOfRange,
  ParamOutOfRange,
  ShapeMismatch,
  SizeMismatch,
  NotInvolution,
  NotFullyCommutative,
  CacheNotFilled,
  BudgetExceeded,
  IoError,
  VersionMismatch,
  Disagreement,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline void check(bool ok, Err kind, const std::string& msg) {
  if (!ok) fail(kind, msg);
}

}  // namespace cellkit
