// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sombor::cli {

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on domain errors and
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sombor::cli
