#pragma once

#include <stdexcept>
#include <string>

namespace bchrome {

// Contract violations surfaced to callers. The CLI maps these to exit code 2.
enum class Precondition {
  disconnected,
  not_regular,
  degree_too_small,
  has_four_cycle,
  super_edge_connected,
  out_of_range,
  bad_argument,
  improper_coloring,
  partial_coloring,
  no_color_available,
};

class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(Precondition kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Precondition kind() const { return kind_; }

 private:
  Precondition kind_;
};

// Malformed graph6 input. The CLI maps this to exit code 1.
class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bchrome
