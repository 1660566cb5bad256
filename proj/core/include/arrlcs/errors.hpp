#pragma once
#include <stdexcept>
#include <string>

namespace arrlcs {

// Bad syntax or semantics in user-supplied input (files, words, options).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem trouble: missing file, unwritable output, ...
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace arrlcs
