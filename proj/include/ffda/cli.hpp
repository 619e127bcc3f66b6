#pragma once

#include <iosfwd>

namespace ffda {

// Exit codes: 0 success, 2 parse error, 3 precision exhausted,
// 4 no solution exists, 5 internal verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ffda
