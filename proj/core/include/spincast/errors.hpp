// Copyright 2026 The Spincast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace spincast {

/// Error taxonomy shared by the whole library. The command line tool maps
/// each kind onto a distinct process exit code (input -> 1, resource -> 2,
/// verification -> 3, convergence -> 4).
enum class ErrorKind {
    input,         // malformed files, bad arguments, violated preconditions
    resource,      // configuration exceeds an explicit size/overflow cap
    verification,  // a numerically checked identity failed to hold
    convergence,   // an iterative solver did not reach its tolerance
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

struct InputError : Error {
    explicit InputError(const std::string& message) : Error(ErrorKind::input, message) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& message) : Error(ErrorKind::resource, message) {}
};

struct VerificationError : Error {
    explicit VerificationError(const std::string& message)
        : Error(ErrorKind::verification, message) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& message)
        : Error(ErrorKind::convergence, message) {}
};

}  // namespace spincast
