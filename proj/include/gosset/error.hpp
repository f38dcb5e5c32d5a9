// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_ERROR_HPP
#define GOSSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gosset {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  UnknownDiagram,
  MalformedSpec,
  NotFiniteType,
  NotCrystallographic,
  NotBipartite,
  Disconnected,
  NoConvergence,
  Singular,
  WrongType,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the library surfaces as an Error; the C API maps the code
// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gosset

#endif  // GOSSET_ERROR_HPP
