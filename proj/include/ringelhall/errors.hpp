#pragma once

#include <stdexcept>
#include <string>

namespace ringelhall {

/// Invalid input: composite field size, shape mismatch, out-of-range index.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured state budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A product or straightening needs a class outside the materialized region.
struct TruncationError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Violated internal invariant (e.g. a negative Ext dimension).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ringelhall
