#pragma once

#include <ostream>

namespace cluster {

/// Entry point of the cluster-lab tool. Returns the process exit code:
/// 0 success, 1 verification failure, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cluster
