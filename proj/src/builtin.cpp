#include "chebbv/builtin.hpp"

#include <stdexcept>

namespace chebbv {

namespace {

constexpr const char* kExample51 =
    "on [-1,1]: piece [-1,0): -t/(t+2); piece [0,1]: t/(t+2); k=1";

}  // namespace

FunctionSpec builtin_example(std::string_view name) {
  if (name == "example51") return FunctionSpec::parse(kExample51);
  std::string available;
  for (const std::string& n : builtin_example_names()) {
    if (!available.empty()) available += ", ";
    available += n;
  }
  throw std::invalid_argument("unknown built-in function '" + std::string(name) +
                              "'; available: " + available);
}

std::vector<std::string> builtin_example_names() { return {"example51"}; }

}  // namespace chebbv
