// Copyright 2026 The graphbell Authors
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

namespace graphbell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit or vertex count.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A size guard was exceeded (dense matrices, orbit search, LHV search space).
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// A precondition on the arguments was violated.
class ContractError : public Error {
   public:
    using Error::Error;
};

/// A numerical residue exceeded its tolerance.
class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Malformed input or data that fails validation.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Text that could not be parsed. `position` is a 0-based character or
/// letter index, or a 1-based line number for file formats.
class ParseError : public ValidationError {
   public:
    ParseError(const std::string &message, std::size_t position)
        : ValidationError(message), position_(position) {
    }
    std::size_t position() const noexcept {
        return position_;
    }

   private:
    std::size_t position_;
};

}  // namespace graphbell
