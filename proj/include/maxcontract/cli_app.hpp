#pragma once

namespace maxcontract {

/// Command-line front end.  Returns the process exit status:
/// 0 on success, 1 on verification or diff findings, 2 on usage errors.
int run_cli(int argc, const char* const* argv);

} // namespace maxcontract
