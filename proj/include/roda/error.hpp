//
// Copyright 2026 The RODA Authors
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
//

#ifndef RODA_ERROR_HPP_
#define RODA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace roda {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class MultipleUnknowns : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NonIntegerExponent : public Error {
 public:
  NonIntegerExponent() : Error("exponent is not an integer") {}
};

/// Raised by templatize when an equation number has no text mention.
class UnalignedNumber : public Error {
 public:
  using Error::Error;
};

class InversionError : public Error {
 public:
  enum class Kind {
    kNoVariable,
    kBothSidesVariable,
    kPowerEncountered,
    kDivisionByZero,
    kNegativeAnswer,
    kBadTarget,
  };

  InversionError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class TransformError : public Error {
 public:
  enum class Kind {
    kNoQuestionFound,
    kUnsupportedQuestionShape,
    kUnsupportedDeclarativeShape,
    kMentionOutsideUnit,
    kNoPronoun,
  };

  TransformError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace roda

#endif  // RODA_ERROR_HPP_
