// Copyright 2026 The gmeseq Authors
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

namespace gmeseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different numbers of qubits.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A symbolic precondition failed, e.g. non-commuting projector generators.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// A dense object would exceed the configured qubit limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter is outside its allowed range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operator failed a structural check (hermiticity, trace, positivity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity cannot be resolved in double precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gmeseq
