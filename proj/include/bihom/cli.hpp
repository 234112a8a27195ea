#pragma once

#include <ostream>

namespace bihom {

/// The bihomcheck command line. Returns the exit status: 0 all pass,
/// 1 an identity failed, 2 invalid input, 3 a precondition refused.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bihom
