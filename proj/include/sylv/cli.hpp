#pragma once

#include <iosfwd>

namespace sylv::cli {

/// Entry point shared by the binary and the tests.  Exit codes:
/// 0 success, 1 verification failure, 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sylv::cli
