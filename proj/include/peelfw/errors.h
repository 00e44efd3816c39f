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

#ifndef PEELFW_ERRORS_H_
#define PEELFW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace peelfw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text, out-of-range ids, bad arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but an operation's precondition does not hold:
// disconnected graph, ground set over the enumeration cap, wrong oracle kind.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A floating-point iterate became NaN or infinite.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace peelfw

#endif  // PEELFW_ERRORS_H_
