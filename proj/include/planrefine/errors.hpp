// Copyright 2026 The planrefine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLANREFINE_ERRORS_HPP_
#define PLANREFINE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace planrefine {

/// Malformed input file (bad token, missing field, wrong count).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what) {}
};

/// Structurally well-formed data that violates a domain invariant.
/// The offending field is named in the message.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A transcendental left its domain (bad boundary velocities, drag-limited
/// speed exceeded). Raised instead of propagating NaN.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace planrefine

#endif  // PLANREFINE_ERRORS_HPP_
