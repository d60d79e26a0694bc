#pragma once

#include <iosfwd>

#include "hkz/error.hpp"

namespace hkz {

/// 0 success, 1 usage or parse error, 2 domain error, 3 internal-consistency
/// failure (including oracle disagreement).
int exit_code(ErrorKind kind);

/// Entry point of the hkz command-line tool. Reports go to `out` (or to the
/// --output file); batch summaries go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hkz
