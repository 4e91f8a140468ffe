// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ktmod {

// Executes one CLI invocation. `args` is the argument list without the
// program name, in natural order. Returns the process exit code:
// 0 success, 1 input or usage error, 2 internal invariant failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ktmod
