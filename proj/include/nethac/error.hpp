// Copyright 2026 The nethac Authors. All Rights Reserved.
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

#ifndef NETHAC_ERROR_HPP
#define NETHAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nethac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad node id, p <= 4, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input is valid but exceeds a configured size limit for an exact
/// algorithm (clique search, tuple enumeration, dense matrices).
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A variance estimate came out negative or non-finite where a usable
/// variance is required.
class IndefiniteEstimate : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace nethac

#endif  // NETHAC_ERROR_HPP
