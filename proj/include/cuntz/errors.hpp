#pragma once

#include <stdexcept>
#include <string>

namespace cuntz {

/// Input data that parses but fails a mathematical validity requirement
/// (normalization identity, QMF identity, unitarity, non-invariant exponent
/// set, ...). The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cuntz
