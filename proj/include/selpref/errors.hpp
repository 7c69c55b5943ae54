#ifndef SELPREF_ERRORS_HPP
#define SELPREF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace selpref {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based; 0 when no single line is at fault.
struct parse_error : error {
  int line;
  parse_error(int line_no, const std::string& msg)
      : error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

// Semantically invalid data or arguments (unknown node, bad parameters, ...).
struct data_error : error {
  using error::error;
};

// Inference would exceed the configured width/size limits.
struct capacity_error : error {
  using error::error;
};

// A (predicate, relation) pair with no usable training observations.
struct no_observations_error : data_error {
  using data_error::data_error;
};

}  // namespace selpref

#endif
