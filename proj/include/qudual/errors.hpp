// Copyright 2026 The qudual Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types thrown by the library.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qudual {

/// A matrix argument broke a structural precondition (Hermitian, unitary).
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A scalar parameter is outside the physically allowed range.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The meter configuration makes an estimator undefined (c = 0 or c = 1).
class SingularConfiguration : public DomainError {
  public:
    using DomainError::DomainError;
};

} // namespace qudual
