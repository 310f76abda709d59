#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

// Malformed or out-of-domain input: zero denominators, singular curves,
// points off their curve, unknown families, bad CLI strings.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A request that would exceed a configured resource budget.
class ResourceRefused : public std::runtime_error {
 public:
  explicit ResourceRefused(const std::string& what) : std::runtime_error(what) {}
};

// An emitted result failed exact re-verification. Always a bug.
class VerificationFailure : public std::logic_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace quartic
