// Copyright 2026 the ttnrep authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ttnrep {

/// Exact arithmetic left the representable range (numerator or exponent).
class OverflowError : public std::runtime_error {
  public:
    explicit OverflowError(const std::string &what) : std::runtime_error(what) {}
};

/// An input violated a documented precondition (non-Hermitian matrix,
/// non-unitary symmetry candidate, invalid partition, ...).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string &what) : std::runtime_error(what) {}
};

/// A contraction or allocation would exceed the configured size budget.
class SizeLimitError : public std::runtime_error {
  public:
    explicit SizeLimitError(const std::string &what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace ttnrep
