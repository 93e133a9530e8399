// Copyright 2026 The fgc Authors
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

#ifndef FGC_ERRORS_HPP_
#define FGC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fgc {

enum class Errc {
  OddDimension,
  NotAntisymmetric,
  NotHermitian,
  NotSymmetric,
  Indefinite,
  ShapeMismatch,
  NotOrthogonal,
  NotSpecialOrthogonal,
  BadPartition,
  IndexOutOfRange,
  InvalidCM,
  NotPure,
  InvalidChannel,
  InvalidInput,
  NotAntisymmetricB,
  NotSquareChannel,
  NotStandardForm,
  SingularA,
  SingularD,
  ChoiRankTooLarge,
  TooManyModes,
  NotDensityMatrix,
  OutOfRange,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fgc

#endif  // FGC_ERRORS_HPP_
