// Copyright 2026 The Authors.
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

#ifndef SUBSEC_ERRORS_HPP_
#define SUBSEC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace subsec {

// Bad arguments, malformed files, dimension mismatches. CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An exact/exhaustive routine was asked to enumerate more than its budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Instance or report fails a schema invariant. CLI exit code 1.
class ValidationError : public InputError {
 public:
  explicit ValidationError(const std::string& what) : InputError(what) {}
};

}  // namespace subsec

#endif  // SUBSEC_ERRORS_HPP_
