// Copyright 2026 The vlimits Authors
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

#ifndef VLIMITS_ERRORS_HPP_
#define VLIMITS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vlimits {

// A precondition on values (not on syntax) failed: non-admissible divisor,
// scale that does not divide, non-cycle translation, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input document. `where` names the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// A bounded search ran out of room before it could decide.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vlimits

#endif  // VLIMITS_ERRORS_HPP_
