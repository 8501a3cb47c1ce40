#pragma once

#include <iosfwd>

namespace posalg {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or input error.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posalg
