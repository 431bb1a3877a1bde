// Copyright 2026 The pairdom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAIRDOM_ERROR_HPP
#define PAIRDOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pairdom {

enum class ErrorCode {
  kInvalidArgument = 1,
  kOutOfRange = 2,
  kParse = 3,
  kGuardExceeded = 4,
  kUndefined = 5,
  kIo = 6,
};

// All library failures are reported through this exception; the C API maps
// code() onto pd_status one-to-one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pairdom

#endif  // PAIRDOM_ERROR_HPP
