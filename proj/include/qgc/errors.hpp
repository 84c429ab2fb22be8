// Copyright 2026 The qgc Authors
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

namespace qgc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input describing something unphysical or unsupported.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotCptpError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotTracePreservingError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The lower-right 3x3 block of a transfer matrix is not diagonal; the
/// channel must be brought to canonical form before analysis.
class NonDiagonalBlockError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotNormalizedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPhysicalError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NoSolutionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParameterOutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidDeltaArgumentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace qgc
