#pragma once

namespace mconv {

// Full command-line front end.  Exit codes: 0 success, 2 validation error
// (bad arguments, malformed input), 3 numeric failure (also: slowly-decreasing
// verdict "fail"), 4 slowly-decreasing verdict "inconclusive".
int cli_main(int argc, const char* const* argv);

} // namespace mconv
