#pragma once

namespace wellscmp {

/// Full command-line front end. Returns the process exit code:
/// 0 all asserted inequalities pass, 1 violation, 2 usage or input error.
int run_cli(int argc, char** argv);

}  // namespace wellscmp
