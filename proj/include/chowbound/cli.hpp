#pragma once

#include <iosfwd>

namespace chowbound::cli {

// Full command-line surface, parameterized over streams for testability.
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition
// error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chowbound::cli
