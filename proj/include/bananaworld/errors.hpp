// Copyright 2026 The Bananaworld Authors
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

#ifndef BANANAWORLD_ERRORS_HPP
#define BANANAWORLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bananaworld {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "error"; }
};

#define BANANAWORLD_DEFINE_ERROR(Name, tag)                  \
  class Name : public Error {                                \
   public:                                                   \
    using Error::Error;                                      \
    const char *kind() const noexcept override { return tag; } \
  };

BANANAWORLD_DEFINE_ERROR(InvalidArrayError, "invalid_array")
BANANAWORLD_DEFINE_ERROR(ParseError, "parse_error")
BANANAWORLD_DEFINE_ERROR(InvalidModelError, "invalid_model")
BANANAWORLD_DEFINE_ERROR(ArgumentError, "invalid_argument")
BANANAWORLD_DEFINE_ERROR(NormalizationError, "not_normalized")
BANANAWORLD_DEFINE_ERROR(InediblePeelError, "inedible_peel")
BANANAWORLD_DEFINE_ERROR(BunchStateError, "bunch_state")
BANANAWORLD_DEFINE_ERROR(NotDecomposableError, "not_decomposable")

#undef BANANAWORLD_DEFINE_ERROR

}  // namespace bananaworld

#endif  // BANANAWORLD_ERRORS_HPP
