// Copyright 2026 The mvcs authors
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

namespace mvcs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMatrix : public Error {
 public:
  using Error::Error;
};
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};
class DimensionLimit : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};
class GramDefect : public Error {
 public:
  using Error::Error;
};
class DivergentSum : public Error {
 public:
  using Error::Error;
};
class NotCoisometry : public Error {
 public:
  using Error::Error;
};
class TruncationExceeded : public Error {
 public:
  using Error::Error;
};
class OutOfDomain : public Error {
 public:
  using Error::Error;
};
class InconsistentDimensions : public Error {
 public:
  using Error::Error;
};
class InvalidSubset : public Error {
 public:
  using Error::Error;
};
class UnsupportedExact : public Error {
 public:
  using Error::Error;
};
class NotInRange : public Error {
 public:
  using Error::Error;
};
class ConfigError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvcs
