// Copyright 2026 The jumpfeed Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace jumpfeed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPositive : public Error {
 public:
  using Error::Error;
};

/// A density matrix left the physical set during integration.
class StateCorrupted : public Error {
 public:
  StateCorrupted(double t, std::string bound, double value)
      : Error("state corrupted at t=" + std::to_string(t) + ": " + bound +
              " (observed " + std::to_string(value) + ")"),
        t_(t),
        bound_(std::move(bound)),
        value_(value) {}

  double time() const noexcept { return t_; }
  const std::string& bound() const noexcept { return bound_; }
  double value() const noexcept { return value_; }

 private:
  double t_;
  std::string bound_;
  double value_;
};

class ZeroNorm : public Error {
 public:
  using Error::Error;
};

class NotPure : public Error {
 public:
  using Error::Error;
};

class UnknownFigure : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace jumpfeed
