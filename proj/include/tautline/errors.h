// Copyright 2026 The Tautline Authors
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

#ifndef TAUTLINE_ERRORS_H_
#define TAUTLINE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tautline {

// A caller-supplied argument violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula is evaluated at one of its singular points.
class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No admissible value exists for the requested construction (ball radii,
// small-gain certificate, waypoint plan).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The integrator produced a non-finite state.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration document could not be tokenized.
class ConfigParseError : public std::runtime_error {
 public:
  ConfigParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A configuration value violates a parameter invariant.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& key, const std::string& what)
      : std::invalid_argument(key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace tautline

#endif  // TAUTLINE_ERRORS_H_
