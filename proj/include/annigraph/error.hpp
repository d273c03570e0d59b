#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "annigraph/element_set.hpp"

namespace annigraph {

// Raised for malformed inputs: bad ring specs, tables that violate an axiom,
// mixed-ring ideal arithmetic, violated preconditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::vector<Elem> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<Elem>& witness() const { return witness_; }

 private:
  std::vector<Elem> witness_;
};

}  // namespace annigraph
