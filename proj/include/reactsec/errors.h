// Copyright 2026 The reactsec Authors.
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

#ifndef REACTSEC_ERRORS_H_
#define REACTSEC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reactsec {

// Base class for every error raised by the library. `code()` is a short
// machine-readable tag such as "E-SURFACE" or "E-IO".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A single broken invariant. `where` locates the offending element, either a
// "line N" reference when the source text is known or a symbolic path such
// as "edges[2]".
struct Violation {
  std::string code;
  std::string message;
  std::string where;
};

std::string FormatViolations(const std::vector<Violation>& violations);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("E-IO", message) {}
};

class SyntaxError : public Error {
 public:
  explicit SyntaxError(const std::string& message)
      : Error("E-SYNTAX", message) {}
};

class SchemaVersionError : public Error {
 public:
  explicit SchemaVersionError(const std::string& message)
      : Error("E-SCHEMA-VERSION", message) {}
};

// An attack or proof that does not fit the system it is played against.
class InvalidAttack : public Error {
 public:
  explicit InvalidAttack(const std::string& message)
      : Error("E-ATTACK", message) {}
};

class InfeasibleAllocation : public Error {
 public:
  explicit InfeasibleAllocation(const std::string& message)
      : Error("E-ALLOCATION", message) {}
};

// Raised when a search over attacks would exceed its configured cap.
class EnumerationLimitExceeded : public Error {
 public:
  EnumerationLimitExceeded(std::size_t limit, std::size_t count)
      : Error("E-ENUMERATION",
              "attack enumeration exceeded the limit of " +
                  std::to_string(limit) + " paths (found at least " +
                  std::to_string(count) + ")"),
        limit_(limit),
        count_(count) {}

  std::size_t limit() const { return limit_; }
  std::size_t count() const { return count_; }

 private:
  std::size_t limit_;
  std::size_t count_;
};

// Precondition failures that are neither validation nor attack errors.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error("E-ARGUMENT", message) {}
};

}  // namespace reactsec

#endif  // REACTSEC_ERRORS_H_
