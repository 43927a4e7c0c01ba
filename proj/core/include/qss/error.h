// Copyright 2026 The QSS Authors
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

#ifndef QSS_ERROR_H_
#define QSS_ERROR_H_

#include <stdexcept>
#include <string>

namespace qss {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic could not proceed, e.g. inverting zero mod d.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// A state vector or search space would exceed the desk-scale bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Fewer than t players are reachable from the dealer.
class SelectionError : public Error {
 public:
  using Error::Error;
};

// Malformed scenario or lookup configuration. `field()` names the offending
// key as "section.key" when known.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(message) {}
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Wire message could not be decoded.
class WireFormatError : public Error {
 public:
  using Error::Error;
};

// A caller tried to seal twice under the same (key, nonce) pair.
class NonceReuseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qss

#endif  // QSS_ERROR_H_
