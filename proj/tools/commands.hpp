#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "fuzz.hpp"

// Report-producing commands behind the CLI. Each returns the process exit
// code: 0 success, 1 verification failure, 2 input error. Input errors are
// raised as exceptions (io::ParseError, GraphError, std::invalid_argument) and
// mapped to 2 by run_guarded.

namespace rrgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

int cmd_info(const std::string& graph_path, std::ostream& out);
int cmd_reduce(const std::string& graph_path, const std::string& divisor_path, bool self_check, std::ostream& out);
int cmd_dim(const std::string& graph_path, const std::string& divisor_path, bool self_check, std::ostream& out);
int cmd_nset(const std::string& graph_path, std::ostream& out);
int cmd_fuzz(const fuzz::Options& opts, std::ostream& out);

/// Calls `body`, turning input exceptions into a message on `err` and exit 2.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace rrgraph::cli
