#pragma once

#include <iosfwd>

namespace seqsearch {

// Entry point of the seqsearch command line tool.
// Exit status: 0 success, 1 runtime failure, 2 configuration or usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Environment variable that overrides the output directory of a configuration
// (an explicit --out still wins).
inline constexpr const char* kOutDirEnv = "SEQSEARCH_OUT_DIR";

}  // namespace seqsearch
