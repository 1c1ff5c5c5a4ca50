#pragma once

#include <stdexcept>
#include <string>

namespace diffgraph {

// A labeling that breaks the bijection contract itself (zero or duplicate
// labels), as opposed to one that merely fails the difference-graph predicate.
class InvalidLabelingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph order exceeds what the canonical-form machinery supports.
class UnsupportedOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A label computation left the 64-bit unsigned range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An operation was called on input that fails its documented precondition
// (e.g. edge classification of an invalid labeling).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diffgraph
