// Copyright 2026 The fqsim Authors
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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fqs {

using cdouble = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2 * kPi;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or vector length.
class SizeError : public Error {
   public:
    using Error::Error;
};

/// A numerical precondition (unit norm, unitarity, Hermiticity, ...) does not hold.
class ContractViolation : public Error {
   public:
    using Error::Error;
};

/// A dense computation would exceed the configured qubit cap.
class ResourceError : public Error {
   public:
    using Error::Error;
};

class IndexError : public Error {
   public:
    using Error::Error;
};

/// An operation was requested on a slot whose gate kind does not support it.
class KindError : public Error {
   public:
    using Error::Error;
};

class ArgumentError : public Error {
   public:
    using Error::Error;
};

/// Checkpoint grids of several trajectories cannot be aligned.
class AlignmentError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(const std::string &what, size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {
    }
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

}  // namespace fqs
