/*
 * Copyright 2026 The phekit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PHEKIT_ERRORS_H_
#define PHEKIT_ERRORS_H_

#include <stdexcept>

namespace phekit {

// Root of every error raised by the library. The CLI maps CapabilityError to
// exit status 3 and everything else derived from Error to exit status 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Unknown curve, algorithm, or security level name.
class LookupError : public Error {
 public:
  using Error::Error;
};

class KeygenExhaustedError : public Error {
 public:
  using Error::Error;
};

class PlaintextRangeError : public Error {
 public:
  using Error::Error;
};

// The bounded discrete logarithm search found nothing within the bound.
class DecryptionBoundError : public Error {
 public:
  using Error::Error;
};

// Ciphertext payload variant does not match the algorithm.
class PayloadTypeError : public Error {
 public:
  using Error::Error;
};

class BitLengthError : public Error {
 public:
  using Error::Error;
};

// The algorithm does not support the requested homomorphic operation.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Operands were produced under different keys or carry different scales.
class OperandMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InexactResultError : public Error {
 public:
  using Error::Error;
};

class DegenerateChartError : public Error {
 public:
  using Error::Error;
};

}  // namespace phekit

#endif  // PHEKIT_ERRORS_H_
