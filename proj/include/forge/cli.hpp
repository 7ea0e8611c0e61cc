#pragma once

#include <ostream>

namespace forge
{

/// Exit codes besides 0.
namespace exit_code
{
constexpr int domain_error = 1;
constexpr int usage = 2;
constexpr int sat = 10;
constexpr int unsat = 20;
} // namespace exit_code

/// Runs the `forge` command line; returns the process exit code.
int dispatch( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace forge
