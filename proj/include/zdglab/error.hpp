#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

enum class ErrorKind {
  InvalidParameter,
  ConstructionFailure,
  SizeLimit,
  ResourceLimit,
  NotFound,
  UnsupportedShape,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zdg
