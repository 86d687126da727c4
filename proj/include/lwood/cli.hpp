#pragma once

#include <ostream>

namespace lwood {

/// Runs one command line. Exit codes: 0 success or pass, 1 verification
/// failure or failed internal cross-check, 2 usage error or input outside
/// the supported range.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lwood
