#pragma once

#include <stdexcept>
#include <string>

namespace forge
{

/// Domain error carrying a stable kind name (e.g. "IllegalCharacter").
/// The CLI prints the kind and exits with status 1.
class error : public std::runtime_error
{
public:
  error( std::string kind, const std::string& detail )
      : std::runtime_error( kind + ": " + detail ), kind_( std::move( kind ) ), detail_( detail )
  {
  }

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::string kind_;
  std::string detail_;
};

} // namespace forge
