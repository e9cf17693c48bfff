#pragma once

#include <ostream>

namespace lieclass {

/// Entry point of the `lieclass` command line.  Payload goes to `out`,
/// diagnostics to `err`.  Returns 0 on success, 1 when the request is
/// rejected mathematically (DomainError, or a fixture that does not
/// reproduce) and 2 for usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieclass
