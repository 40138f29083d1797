#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: permutations, element names, raw structures.
struct parse_error : error {
  using error::error;
};

}  // namespace mobius
