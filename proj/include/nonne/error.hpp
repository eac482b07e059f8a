// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nonne {

enum class ErrorKind {
  Usage,         // bad flags, mismatched inputs
  Precondition,  // caller broke a documented precondition
  Domain,        // parameter outside the mathematical domain
  Range,         // value outside the supported integer width
  Resource,      // memory budget or table cap exceeded
  NoCharacter,   // f != 1 (mod ell): no character of order ell
  Parse,         // malformed input file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace nonne
