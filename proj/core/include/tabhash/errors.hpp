// Copyright 2026 The Tabhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TABHASH_ERRORS_HPP_
#define TABHASH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tabhash {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters supplied at construction or configuration time.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An operation was called with arguments violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DuplicateKeyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace tabhash

#endif  // TABHASH_ERRORS_HPP_
