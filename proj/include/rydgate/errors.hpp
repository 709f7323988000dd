// Copyright 2026 The rydgate Authors
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

namespace rydgate {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: parameters, configuration, mode selection. The CLI maps
// these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// Requested integrator mode cannot handle the schedule.
class ModeError : public InputError {
 public:
  using InputError::InputError;
};

// Failures of the numerics themselves. The CLI maps these to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IntegratorFailure : public NumericError {
 public:
  using NumericError::NumericError;
};

// Overlap too small to define a phase: the state did not return.
class UndefinedPhase : public NumericError {
 public:
  using NumericError::NumericError;
};

class RootNotFound : public NumericError {
 public:
  using NumericError::NumericError;
};

// Interatomic distance reached zero or below.
class DegenerateGeometry : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace rydgate
