#pragma once

namespace wdsub {

// Full command-line front end; returns the process exit status.
// Usage/validation problems exit 2, runtime failures exit 1.
int run_cli(int argc, const char* const* argv);

}  // namespace wdsub
