#pragma once

#include <iosfwd>

namespace ratfield {

// Exit codes: 0 verified, 1 verification failed, 2 parse or configuration
// error, 3 evaluation budget exhausted.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratfield
