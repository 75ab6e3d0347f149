#pragma once

#include <stdexcept>
#include <string>

namespace fh {

// Bad user input or violated family constraint. CLI exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal identity failed. CLI exit code 3.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace fh
