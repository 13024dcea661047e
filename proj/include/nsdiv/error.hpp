// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace nsdiv {

/// Bad input: unsupported parameters, malformed records, mismatched fields.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The input was well-formed but mathematically impossible, e.g. place
/// counts that no function field can have.
class InadmissibleError : public std::domain_error {
 public:
  explicit InadmissibleError(const std::string& what) : std::domain_error(what) {}
};

/// An internal consistency check failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nsdiv
