#pragma once

#include <ostream>

#include "ptlattice/error.hpp"

namespace ptl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInfinite = 3;
inline constexpr int kExitInternal = 4;

int exit_code_for(Errc e);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptl::cli
