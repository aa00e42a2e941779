/*
   Copyright 2026 The quantic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUANTIC_ERRORS_HPP
#define QUANTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quantic {

// A caller handed an operation something outside its domain (bad order,
// mismatched degrees, malformed input). Maps to CLI exit status 1.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when `add` sees two operands of different degree.
class DegreeMismatch : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

// An identity or exact normalization that must hold did not. Seeing one of
// these means the engine is wrong, not the input. Maps to exit status 2.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline void require_order(int order, int minimum, const std::string& what) {
    if (order < minimum)
        throw PreconditionError(what + " requires N \xE2\x89\xA5 " + std::to_string(minimum) + " (got N = " +
                                std::to_string(order) + ")");
}

}  // namespace quantic

#endif
