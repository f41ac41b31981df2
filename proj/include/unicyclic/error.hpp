// Copyright 2026 The unicyclic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace unicyclic {

enum class ErrorKind {
  InvalidParameter,
  NotConnected,
  NotUnicyclic,
  NonSymmetric,
  InvalidInterval,
  NumericFailure,
  EdgeNotPresent,
  SizeCapExceeded,
  InternalConsistency,
  Parse,
  Io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NotConnected: return "not-connected";
    case ErrorKind::NotUnicyclic: return "not-unicyclic";
    case ErrorKind::NonSymmetric: return "non-symmetric";
    case ErrorKind::InvalidInterval: return "invalid-interval";
    case ErrorKind::NumericFailure: return "numeric-failure";
    case ErrorKind::EdgeNotPresent: return "edge-not-present";
    case ErrorKind::SizeCapExceeded: return "size-cap-exceeded";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Io: return "io-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace unicyclic
