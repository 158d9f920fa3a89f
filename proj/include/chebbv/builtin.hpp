#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chebbv/funcspec.hpp"

namespace chebbv {

/// Named built-in functions (the CLI's --example flag). Currently:
///   example51  g(t) = |t|/(t+2) on [-1,1] with k = 1, breakpoint at 0.
FunctionSpec builtin_example(std::string_view name);

std::vector<std::string> builtin_example_names();

}  // namespace chebbv
