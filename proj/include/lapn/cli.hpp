#pragma once

#include <ostream>

namespace lapn {

// Entry point behind the lapn binary. Returns the process exit status:
// 0 on success, 2 when verify finds a mismatch, 1 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lapn
