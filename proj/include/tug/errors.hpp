#pragma once

#include <stdexcept>
#include <string>

namespace tug {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Construction / arithmetic errors.
struct EmptyCoalition : Error { using Error::Error; };
struct InvalidPermutation : Error { using Error::Error; };
struct MixedPlayerCount : Error { using Error::Error; };
struct PlayerCountTooSmall : Error { using Error::Error; };

// Transform preconditions.
struct NotProperSubset : Error { using Error::Error; };
struct CoalitionTooSmall : Error { using Error::Error; };

// Value / coefficient errors.
struct SizeOutOfRange : Error { using Error::Error; };
struct WeightsNotAffine : Error { using Error::Error; };
struct NotLinear : Error { using Error::Error; };
struct NotSigmaRepresentable : Error { using Error::Error; };
struct DegenerateObjective : Error { using Error::Error; };
struct DomainGuardFailed : Error { using Error::Error; };

// CLI / registry errors.
struct UnknownRule : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };

// Game-file errors.
struct ParseError : Error {
  std::size_t position = 0;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};
struct MissingCoalition : Error { using Error::Error; };
struct DuplicateKey : Error { using Error::Error; };
struct NonZeroEmptySet : Error { using Error::Error; };

}  // namespace tug
