// Command-line frontend.  Exit codes: 0 ok, 2 usage, 3 mismatch, 4 internal.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qfock/heckepoly.hpp"

namespace qfock {

enum ExitCode { kExitOk = 0, kExitUsage = 2, kExitMismatch = 3, kExitInternal = 4 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Macdonald polynomial through the on-disk memo cache in QFOCK_CACHE_DIR
/// (plain computation when the variable is unset).
PolyVector cached_macdonald(const CompositionLabel& label, bool p1);

}  // namespace qfock
