#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace forge
{

struct suite_result
{
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Quick cross-module oracle checks on seeded random data.
std::vector<suite_result> run_selftest( std::uint64_t seed );

} // namespace forge
